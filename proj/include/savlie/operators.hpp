#pragma once

#include <optional>
#include <vector>

#include "savlie/tensor_module.hpp"

namespace savlie {

// Formal element of the universal enveloping algebra: a rational combination
// of ordered words in basis atoms. Words act on module vectors by composing
// the module action right to left.
using UEAWord = std::vector<BasisVector>;
using UEAElement = SparseVec<UEAWord>;

std::string to_string(const UEAElement& e);

UEAElement uea_one();
UEAElement uea_atom(const BasisVector& v);
UEAElement uea_mul(const UEAElement& a, const UEAElement& b);
// ab - (-1)^{|a||b|} ba for homogeneous arguments (word parity is the parity
// sum of its letters).
UEAElement uea_commutator(const Algebra& alg, const UEAElement& a,
                          const UEAElement& b);

// PBW straightening: rewrites every word into non-decreasing atom order using
// xy = (-1)^{|x||y|} yx + [x,y] (and xx = [x,x]/2 for odd x). Two elements
// are equal in the enveloping algebra iff their normal forms coincide.
UEAElement uea_normal_form(const Algebra& alg, const UEAElement& e);

ModuleVec act_uea(const TensorModule& m, const UEAElement& e,
                  const ModuleVec& w);

// Differentiator: sum over i of (-1)^i C(m,i) d_{k-i} d_{s+i}.
UEAElement differentiator(int k, int s, int m);

// The annihilating family: sum over i of (-1)^i C(m,i) y_{a-i} d_{b+i}
// with y the loop atom x_s (x) t (xi if with_xi).
UEAElement loop_annihilator_family(int s, bool with_xi, int a, int b, int m);

struct AnnihilatorSearch {
  std::optional<int> minimal_m;
  int limit = 0;
  std::vector<std::string> witnesses;  // why each failing m fails (first few)
};

// Smallest m <= limit such that the differentiators annihilate every module
// basis vector with offset in [-window, window], for all (k, s) in the given
// ranges. Evaluation is exact and closed-form, so the guard is only about
// which vectors are swept.
AnnihilatorSearch minimal_annihilating_m(const TensorModule& mod, int k_lo,
                                         int k_hi, int s_lo, int s_hi,
                                         int window, int limit = 6);

// Exact evaluation of both loop annihilator families on all in-window module
// basis vectors for all (j, p) in [-window, window]^2 and all g-basis x.
SweepReport verify_loop_annihilators(const TensorModule& mod, int m,
                                     int window);

// Symbolic closure: the commutators [Omega^{(m)}_{k,p}, x (x) t^j] combine,
// through the exact bridging identity
//   2/j W(j,k,p) - 1/(j+1) W(j+1,k-1,p) - 1/(j-1) W(j-1,k+1,p)
//     = (-1)^{m+1} F^{(m+2)}_{j+p+m+1, k-m-1},
// into the annihilating family with order m+2. Verified in the enveloping
// algebra via PBW normal forms, independently of any module.
SweepReport verify_annihilator_derivation(const Algebra& l, int m, int range);

// Element of the A-cover i (x) M: a combination of (loop atom, module
// vector) pairs.
struct CoverElement {
  std::vector<std::pair<BasisVector, ModuleVec>> terms;
};

// A-module structure on the loop part: t^q w and t^q xi w for a loop atom w.
// Returns nothing when the product vanishes (xi * xi).
std::optional<BasisVector> amod_on_loop(const BasisVector& w, int q, bool xi);

// Membership in K(M): sum over terms of (a w_i) v_i = 0 for every polynomial
// atom a = t^q, t^q xi with |q| <= window. True certifies the windowed
// condition set exactly.
bool k_membership(const TensorModule& mod, const CoverElement& c, int window);

struct DbarReport {
  bool noncentral_matches = true;
  bool central_is_odd_cubic = true;
  Rational cubic_coeff;   // c(j) = cubic_coeff j^3 + linear_coeff j
  Rational linear_coeff;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  long cases_checked = 0;
};

// Checks [dbar_i, dbar_j] = (j-i) dbar_{i+j} + c(j) d_{i+j,0} C in the
// centrally extended algebra, with dbar_i = d_i + (i/2) h_i, for all
// |i|,|j| <= range, and fits the central coefficient as an odd cubic.
DbarReport dbar_bracket_check(const Algebra& lhat, int range);

}  // namespace savlie
