#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "savlie/algebra.hpp"
#include "savlie/matrix.hpp"

namespace savlie {

using AtomPair = std::pair<BasisVector, BasisVector>;

// Unknowns of the degree-zero cocycle system: one variable per unordered
// homogeneous pair (a, b) with deg a + deg b = 0, |deg a| <= N and even total
// parity (the form takes values in the even one-dimensional center). Pairs
// are stored canonically (a <= b); super-antisymmetry is structural, and the
// diagonal of an even atom is identically zero so it gets no variable.
struct CocycleUnknowns {
  int window = 0;
  std::vector<AtomPair> pairs;
  std::map<AtomPair, int> index;

  // Coefficient bookkeeping for alpha(a, b): returns the variable index and
  // the orientation sign, or {-1, 0} when alpha(a, b) is structurally zero.
  std::pair<int, Rational> locate(const Algebra& alg, const BasisVector& a,
                                  const BasisVector& b) const;
};

CocycleUnknowns enumerate_unknowns(const Algebra& alg, int window);

// A 2-cocycle given by its values on canonical degree-zero pairs, extended
// by zero elsewhere and by super-antisymmetry.
class AlphaTable {
 public:
  using Eval = std::function<Rational(const Algebra&, const BasisVector&,
                                      const BasisVector&)>;

  static AlphaTable from_entries(std::map<AtomPair, Rational> entries);
  static AlphaTable from_eval(Eval eval);

  // The closed-form universal-extension table: alpha(d_i,h_j) = -i^2 d(i+j),
  // alpha(h_i,h_j) = 2i d(i+j), alpha(Q_i,G_j) = -i^2 d(i+j), zero otherwise.
  static AlphaTable closed_form();
  // The misreading with the quadratic central term carried on G-G instead of
  // Q-G; used as the arbiter that the adopted reading is the consistent one.
  static AlphaTable closed_form_gg_misreading();

  Rational eval(const Algebra& alg, const BasisVector& a,
                const BasisVector& b) const;

  const std::map<AtomPair, Rational>& entries() const { return entries_; }

 private:
  std::map<AtomPair, Rational> entries_;
  Eval eval_;
};

struct CocycleSystem {
  CocycleUnknowns unknowns;
  IncrementalEchelon equations;
  long equations_generated = 0;
};

// One linear equation per sorted homogeneous triple with total degree zero
// and even total parity; coefficients are read off the centerless bracket.
// Throws IllegalVariant when the algebra already has a center.
CocycleSystem build_cocycle_system(const Algebra& alg, int window);

struct CocycleSolution {
  int h2_dimension = 0;
  int window = 0;
  bool window_stable = false;  // dimension agrees at window and window+1
  int z_dimension = 0;
  int b_dimension = 0;
  CocycleUnknowns unknowns;
  std::vector<SparseVec<int>> representatives;  // over unknown indices
  std::vector<std::string> notes;

  AlphaTable representative_table(std::size_t idx) const;
};

// Nullspace of the cocycle system modulo degree-zero coboundaries. The
// canonical representative gauge mirrors the normalizations that pin the
// closed-form table: alpha(d1,d-1) = 0, alpha(d1,h-1) = alpha(d-1,h1),
// alpha(d1, x(x)t^-1) = 0, alpha(d1, x(x)t^-1 xi) = 0, then scaling so that
// alpha(d1,h-1) = -1 whenever that entry is nonzero.
// Requires window >= 3 (below that the windowed system under-determines the
// known answers); throws std::invalid_argument otherwise.
CocycleSolution solve_h2(const Algebra& alg, int window);

// Checks super-antisymmetry of the table and the cocycle identity on all
// sorted in-window triples.
SweepReport verify_cocycle(const AlphaTable& table, const Algebra& alg,
                           int window);

std::string pair_to_string(const AtomPair& p);

}  // namespace savlie
