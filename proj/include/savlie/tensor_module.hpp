#pragma once

#include <compare>
#include <memory>
#include <optional>

#include "savlie/algebra.hpp"
#include "savlie/filtration.hpp"
#include "savlie/vspec.hpp"

namespace savlie {

// Basis key of the tensor module A (x) V: t^n (x) v_j (xi = 0) or
// t^n xi (x) v_j (xi = 1).
struct MKey {
  int n = 0;
  int xi = 0;
  int j = 0;
  auto operator<=>(const MKey&) const = default;
};

std::string to_string(const MKey& k);

using ModuleVec = SparseVec<MKey>;
std::string to_string(const ModuleVec& v);

// Operators acting on the module: the algebra atoms of the centerless
// variant, plus the polynomial part t^q (TPoly) and t^q xi (TPolyXi).
struct ModOp {
  enum class Kind { Atom, TPoly, TPolyXi };
  Kind kind = Kind::Atom;
  BasisVector atom;
  int q = 0;

  static ModOp of(BasisVector v) { return {Kind::Atom, v, 0}; }
  static ModOp tpoly(int q) { return {Kind::TPoly, {}, q}; }
  static ModOp tpoly_xi(int q) { return {Kind::TPolyXi, {}, q}; }
};

std::string to_string(const ModOp& op);

// The tensor module built over the centerless algebra from an exact rational
// weight and a validated quotient module. The pullback coefficients of each
// acting element ((d_i - d_0), h_i, (Q_i - Q_0), G_i, x(x)t^i, x(x)t^i xi)
// through a_0/a_1 are computed by the filtration reduction and cached; they
// are never hard-coded.
class TensorModule {
 public:
  TensorModule(std::shared_ptr<const Algebra> l, Rational lambda, VSpec v);

  const Algebra& algebra() const { return *alg_; }
  const Rational& lambda() const { return lambda_; }
  const VSpec& vspec() const { return v_; }
  const QuotientTable& quotient() const { return quotient_; }
  int slice_dimension() const { return 2 * v_.dim; }

  int parity_of_key(const MKey& k) const {
    return (v_.parities[std::size_t(k.j)] + k.xi) % 2;
  }

  // Action of a single algebra atom; CEN raises IllegalFamily.
  ModuleVec act_atom(const BasisVector& op, const MKey& key) const;
  ModuleVec act(const AlgElement& e, const ModuleVec& w) const;
  ModuleVec act_op(const ModOp& op, const ModuleVec& w) const;

  // Action matrix of an atom on V through the quotient reduction.
  const RationalMatrix& action_matrix(const BasisVector& op) const;

  // Mutation hook for the sign canaries in the verification suites: drops
  // the (-1)^{|a|} factor in the Q_i action.
  void set_q_sign_dropped(bool dropped) { q_sign_dropped_ = dropped; }

 private:
  std::shared_ptr<const Algebra> alg_;
  Rational lambda_;
  VSpec v_;
  QuotientTable quotient_;
  mutable std::map<BasisVector, RationalMatrix> matrix_cache_;
  bool q_sign_dropped_ = false;
};

struct SampleSpec {
  bool all = true;
  std::uint64_t seed = 0;
  long count = 0;
  static SampleSpec everything() { return {true, 0, 0}; }
  static SampleSpec random(std::uint64_t seed, long count) {
    return {false, seed, count};
  }
};

// Super-commutator law for all operator pairs (algebra atoms and polynomial
// atoms) on all module basis keys in the guard-banded window, plus the module
// laws of the polynomial part: unitality t^0 w = w and associativity
// (f g) w = f (g w) for polynomial atoms.
SweepReport verify_module_axioms(const TensorModule& m, int window, int guard,
                                 const SampleSpec& sample = SampleSpec::everything());

struct WeightReport {
  std::vector<int> support_offsets;
  std::vector<int> slice_dimensions;
  bool bounded = false;
  bool weight_action_diagonal = false;  // d_0 acts as lambda + n on slice n
};

WeightReport weight_report(const TensorModule& m, int window);

struct SubmoduleProbe {
  int window = 0;
  std::size_t span_dimension = 0;
  std::size_t full_dimension = 0;
  bool proper_in_window = false;
  std::vector<std::string> notes;
};

// Windowed action-closure of the generators under the algebra atoms whose
// application keeps the support inside the window. Non-properness is
// conclusive; properness certifies nothing beyond the window.
SubmoduleProbe submodule_probe(const TensorModule& m, int window,
                               const std::vector<ModuleVec>& generators);

}  // namespace savlie
