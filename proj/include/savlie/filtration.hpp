#pragma once

#include <map>
#include <string>
#include <vector>

#include "savlie/algebra.hpp"
#include "savlie/matrix.hpp"

namespace savlie {

struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Basis atom multiplied by a power of (t-1): (t-1)^k d_i, (t-1)^k h_i,
// (t-1)^k Q_i, (t-1)^k G_i, x (x) (t-1)^k t^i, x (x) (t-1)^k t^i xi.
struct TAtom {
  Family family = Family::D;
  int tpow = 0;  // k >= 0
  int degree = 0;
  int g_index = -1;

  static TAtom make(Family f, int k, int i, int s = -1) {
    return TAtom{f, k, i, s};
  }
};

std::string to_string(const TAtom& a);

// Exact expansion of (t-1)^k into the t-power basis via binomials.
AlgElement expand(const TAtom& a);
AlgElement expand_combination(const std::vector<std::pair<Rational, TAtom>>&);

// The closed-form relation families for brackets of (t-1)-shifted elements.
// Identifiers follow the left/right family pair.
enum class Lemma22Relation {
  dd, dh, dQ, dG, hQ, hG, QG, hh, QQ, GG,          // Witt pairs
  d_ev, d_od, h_od, Q_od, G_ev, h_ev, Q_ev, G_od,  // action on the loop part
};

const std::vector<Lemma22Relation>& all_lemma22_relations();
const char* lemma22_relation_name(Lemma22Relation r);

// Checks one relation instance exactly: the left side is computed by
// expanding both factors and bracketing in the centerless algebra, the right
// side by expanding the closed form. Loop-part relations are checked for
// every g-basis vector. Returns a pass/witness report.
SweepReport check_lemma22(const Algebra& l, Lemma22Relation rel, int k, int l_,
                          int i, int j);

// Full sweep over k,l in [0,kmax], i,j in [-imax,imax], all relations legal
// for the variant.
SweepReport lemma22_sweep(const Algebra& l, int kmax, int imax);

// Spanning atoms of the filtration level a_k = m^{k+1}Delta + g(x)m^k A,
// with base degrees in [lo, hi].
std::vector<TAtom> filtration_spanning_atoms(const Algebra& l, int level,
                                             int lo, int hi);

// Exact membership of e in a_k. The spanning set is truncated to base
// degrees [-N-k-1, N] where [-N, N] covers supp(e); per-family leading-term
// triangularity makes the truncated solve exact, so the answer is
// window-independent. Throws WindowTooSmall if supp(e) exceeds the window.
bool filtration_membership(const Algebra& l, const AlgElement& e, int level,
                           int window);

// Ideal and step laws: [a_0, a_k] in a_k, [a_1, a_k] in a_{k+1} for
// k <= max_k, and a_1 in [a_0, a_0], all on windowed spanning sets.
SweepReport verify_filtration_laws(const Algebra& l, int max_k, int window);

// A small structure-constants table on quotient coset representatives,
// with the abstract invariants used to identify it.
struct QuotientTable {
  std::vector<std::string> gen_names;
  std::vector<int> parities;
  std::vector<std::vector<SparseVec<int>>> constants;

  int even_dim = 0;
  int odd_dim = 0;
  int derived_dim = 0;
  int center_dim = 0;
  bool jacobi_ok = false;

  int dim() const { return int(gen_names.size()); }
  GSpec as_gspec(const std::string& name) const;
};

// mDelta / m^2 Delta on representatives {(t-1)d_0, h_0, (t-1)Q_0, G_0}.
QuotientTable quotient_mdelta_table(const Algebra& l, int window);

// a_0 / a_1 on the above representatives plus the g-part cosets {x_s (x) 1}.
QuotientTable quotient_a0_table(const Algebra& l, int window);

// Expected invariants of gl(1,1): dim 2|2, derived dimension 3, center
// dimension 1. Returns a pass/witness report comparing `t` against them.
SweepReport match_gl11_invariants(const QuotientTable& t);

// Coordinates of an a_0 element modulo a_1 in the basis
// {(t-1)d_0, h_0, (t-1)Q_0, G_0, x_1, ..., x_l} (coset representatives).
// Throws WindowTooSmall / std::runtime_error if e is not in a_0's span.
SparseVec<int> reduce_mod_a1(const Algebra& l, const AlgElement& e);

}  // namespace savlie
