#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "savlie/basis.hpp"
#include "savlie/gspec.hpp"
#include "savlie/sparse_vec.hpp"

namespace savlie {

using AlgElement = SparseVec<BasisVector>;

std::string to_string(const AlgElement& e);

struct IllegalFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IllegalVariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The five algebras realized by the closed-form bracket tables:
//   FrakW  - Witt algebra, families {D}
//   WSuper - Witt superalgebra, families {D,H,Q,G}
//   FrakL  - FrakW semidirect the loop part, families {D,EV,OD}
//   L      - WSuper semidirect the loop part, families {D,H,Q,G,EV,OD}
//   LHat   - L plus the one-dimensional center, adds {CEN}
enum class VariantTag { FrakW, WSuper, FrakL, L, LHat };

const char* variant_name(VariantTag tag);
std::optional<VariantTag> variant_from_name(const std::string& name);
bool variant_has_g(VariantTag tag);
bool variant_is_centerless(VariantTag tag);

class Algebra {
 public:
  Algebra(VariantTag tag, std::shared_ptr<const GSpec> g = nullptr);

  VariantTag tag() const { return tag_; }
  const GSpec* g() const { return g_.get(); }
  std::shared_ptr<const GSpec> g_ptr() const { return g_; }

  bool allows(Family f) const;
  void require_legal(const BasisVector& v) const;  // throws IllegalFamily

  int parity_of(const BasisVector& v) const;  // 0 or 1
  int degree_of(const BasisVector& v) const { return v.degree; }

  // Closed-form basis bracket. Indices are unbounded; no truncation happens
  // here, windows exist only in verification sweeps.
  AlgElement bracket_basis(const BasisVector& a, const BasisVector& b) const;

  // Bilinear extension. Throws IllegalFamily if a term is outside the variant.
  AlgElement bracket(const AlgElement& a, const AlgElement& b) const;

  // All atoms of a given degree admitted by the variant (CEN included at
  // degree 0), in total order.
  std::vector<BasisVector> atoms_of_degree(int n) const;

 private:
  AlgElement bracket_canonical(const BasisVector& a,
                               const BasisVector& b) const;

  VariantTag tag_;
  std::shared_ptr<const GSpec> g_;
};

// Outcome of a verification sweep: either a pass with the number of cases
// checked, or the first few failing witnesses.
struct SweepReport {
  std::string name;
  bool passed = true;
  long cases_checked = 0;
  int window = 0;
  std::vector<std::string> witnesses;  // empty iff passed
  std::vector<std::string> notes;

  void fail(std::string witness, std::size_t keep = 5) {
    passed = false;
    if (witnesses.size() < keep) witnesses.push_back(std::move(witness));
  }
};

// [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]] over all ordered homogeneous
// basis triples with degrees in [-window, window].
SweepReport verify_jacobi(const Algebra& alg, int window);

// [a,b] + (-1)^{|a||b|} [b,a] = 0 over all ordered pairs in the window.
SweepReport verify_super_antisymmetry(const Algebra& alg, int window);

// deg [a,b] = deg a + deg b and parity [a,b] = |a|+|b| on all pairs.
SweepReport verify_degree_parity_additivity(const Algebra& alg, int window);

// [C, v] = 0 for every atom in the window (LHat only).
SweepReport verify_center_central(const Algebra& alg, int window);

// The LHat bracket with central terms dropped coincides with the L bracket.
SweepReport verify_central_extension_consistency(
    const Algebra& lhat, const Algebra& l, int window);

}  // namespace savlie
