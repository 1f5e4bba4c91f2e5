// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (all exact) and prints one pass/fail line per criterion. Exit code 0 iff
// all criteria pass.

#include <iostream>
#include <memory>
#include <sstream>

#include "savlie/cohomology.hpp"
#include "savlie/filtration.hpp"
#include "savlie/operators.hpp"
#include "savlie/tensor_module.hpp"

using namespace savlie;

namespace {

int failures = 0;

void line(int criterion, bool ok, const std::string& what,
          const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << what;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::shared_ptr<const GSpec> sl2_spec() {
  static auto g = std::make_shared<GSpec>(builtin_sl2());
  return g;
}
std::shared_ptr<const GSpec> osp12_spec() {
  static auto g = std::make_shared<GSpec>(builtin_osp12());
  return g;
}

// criterion 1: dim H2(L) = 1 at windows 4 and 5, exactly.
void criterion_1() {
  Algebra l(VariantTag::L, sl2_spec());
  CocycleSolution s4 = solve_h2(l, 4);
  CocycleSolution s5 = solve_h2(l, 5);
  std::ostringstream d;
  d << "window 4: " << s4.h2_dimension << " (stable "
    << (s4.window_stable ? "yes" : "no") << "), window 5: " << s5.h2_dimension
    << " (stable " << (s5.window_stable ? "yes" : "no") << ")";
  line(1, s4.h2_dimension == 1 && s5.h2_dimension == 1 && s4.window_stable &&
           s5.window_stable,
       "second cohomology of the full centerless algebra (sl2) is "
       "one-dimensional at windows 4 and 5",
       d.str());
}

// criterion 2: dim H2 of the plain-Witt loop variant with osp(1|2) = 2.
void criterion_2() {
  Algebra fl(VariantTag::FrakL, osp12_spec());
  CocycleSolution s4 = solve_h2(fl, 4);
  CocycleSolution s5 = solve_h2(fl, 5);
  std::ostringstream d;
  d << "window 4: " << s4.h2_dimension << ", window 5: " << s5.h2_dimension;
  line(2, s4.h2_dimension == 2 && s5.h2_dimension == 2 && s4.window_stable &&
           s5.window_stable,
       "second cohomology of the plain-Witt loop variant (osp(1|2)) is "
       "two-dimensional at windows 4 and 5",
       d.str());
}

// criterion 3: the canonical representative equals the closed-form table on
// every pair with |i| <= 4, exactly, after the alpha(d1,h-1) = -1 scaling.
void criterion_3() {
  Algebra l(VariantTag::L, sl2_spec());
  CocycleSolution sol = solve_h2(l, 4);
  bool ok = sol.representatives.size() == 1;
  std::string witness;
  if (ok) {
    AlphaTable got = sol.representative_table(0);
    AlphaTable want = AlphaTable::closed_form();
    for (const AtomPair& p : sol.unknowns.pairs) {
      Rational g = got.eval(l, p.first, p.second);
      Rational w = want.eval(l, p.first, p.second);
      if (!(g == w)) {
        ok = false;
        witness = pair_to_string(p) + ": got " + rational_to_string(g) +
                  ", table says " + rational_to_string(w);
        break;
      }
    }
  } else {
    witness = "expected exactly one representative";
  }
  line(3, ok,
       "canonical cocycle representative matches the closed-form table on "
       "all pairs with |i| <= 4",
       witness);
}

// criterion 4: Jacobi and antisymmetry sweeps at window 6 for the extended
// algebra over both built-ins, plus the central-term placement arbiter.
void criterion_4() {
  bool ok = true;
  std::string detail;
  for (auto g : {sl2_spec(), osp12_spec()}) {
    Algebra lhat(VariantTag::LHat, g);
    SweepReport jac = verify_jacobi(lhat, 6);
    SweepReport anti = verify_super_antisymmetry(lhat, 6);
    if (!jac.passed || !anti.passed) {
      ok = false;
      detail = g->name + ": " +
               (jac.witnesses.empty() ? anti.witnesses.front()
                                      : jac.witnesses.front());
    } else {
      detail += g->name + ": " + std::to_string(jac.cases_checked) +
                " triples; ";
    }
  }
  Algebra l(VariantTag::L, sl2_spec());
  bool arbiter_good = verify_cocycle(AlphaTable::closed_form(), l, 4).passed;
  bool arbiter_bad =
      !verify_cocycle(AlphaTable::closed_form_gg_misreading(), l, 4).passed;
  if (!arbiter_good || !arbiter_bad) {
    ok = false;
    detail += " central-term arbiter did not discriminate";
  } else {
    detail += "arbiter separates the two readings";
  }
  line(4, ok,
       "super Jacobi and antisymmetry hold on all window-6 triples/pairs; "
       "the central term belongs on [Q_i,G_j]",
       detail);
}

// criterion 5: all shifted-basis relation families, k,l in [0,3],
// i,j in [-3,3], both built-ins.
void criterion_5() {
  bool ok = true;
  std::string detail;
  long cases = 0;
  for (auto g : {sl2_spec(), osp12_spec()}) {
    Algebra l(VariantTag::L, g);
    SweepReport r = lemma22_sweep(l, 3, 3);
    cases += r.cases_checked;
    if (!r.passed) {
      ok = false;
      detail = g->name + ": " + r.witnesses.front();
    }
  }
  if (ok) detail = std::to_string(cases) + " relation instances";
  line(5, ok,
       "closed-form (t-1)-shifted bracket relations verified exactly",
       detail);
}

// criterion 6: filtration laws to k = 3 at window 6; quotient tables.
void criterion_6() {
  bool ok = true;
  std::string detail;
  for (auto g : {sl2_spec(), osp12_spec()}) {
    Algebra l(VariantTag::L, g);
    SweepReport laws = verify_filtration_laws(l, 3, 6);
    if (!laws.passed) {
      ok = false;
      detail += g->name + " laws: " + laws.witnesses.front() + "; ";
      continue;
    }
    QuotientTable md = quotient_mdelta_table(l, 5);
    SweepReport gl = match_gl11_invariants(md);
    if (!(md.dim() == 4 && md.even_dim == 2 && md.odd_dim == 2 &&
          md.jacobi_ok && gl.passed)) {
      ok = false;
      detail += g->name + ": depth-one quotient invariants differ; ";
    }
    QuotientTable a0 = quotient_a0_table(l, 5);
    if (a0.dim() != 4 + g->dim() || !a0.jacobi_ok) {
      ok = false;
      detail += g->name + ": depth-zero quotient shape differs; ";
    }
    for (int a = 0; a < 4; ++a) {
      for (int b = 4; b < a0.dim(); ++b) {
        if (!a0.constants[std::size_t(a)][std::size_t(b)].empty() ||
            !a0.constants[std::size_t(b)][std::size_t(a)].empty()) {
          ok = false;
          detail += g->name + ": cross bracket nonzero; ";
        }
      }
    }
  }
  if (ok) detail = "laws at k <= 3, window 6; quotients split as expected";
  line(6, ok,
       "filtration ideal/step laws and both quotient tables check out",
       detail);
}

TensorModule make_module(const char* lambda, const char* vname) {
  auto alg = std::make_shared<Algebra>(VariantTag::L, sl2_spec());
  QuotientTable q = quotient_a0_table(*alg, 4);
  return TensorModule(alg, rational_from_string(lambda),
                      vspec_by_name(vname, q));
}

// criterion 7: module axiom sweeps at window 3, guard 2, for the three
// shipped modules, and the sign canary fails.
void criterion_7() {
  bool ok = true;
  std::string detail;
  for (auto [lambda, v] : std::initializer_list<std::pair<const char*,
                                                          const char*>>{
           {"1/2", "trivial"}, {"0", "gl11"}, {"1/2", "adjoint-sl2"}}) {
    TensorModule m = make_module(lambda, v);
    SweepReport r = verify_module_axioms(m, 3, 2);
    if (!r.passed) {
      ok = false;
      detail += std::string(v) + ": " + r.witnesses.front() + "; ";
    }
  }
  TensorModule canary = make_module("0", "gl11");
  canary.set_q_sign_dropped(true);
  if (verify_module_axioms(canary, 2, 1).passed) {
    ok = false;
    detail += "sign canary failed to fail";
  }
  if (ok) detail = "three modules pass; the sign canary fails as expected";
  line(7, ok, "tensor-module axiom sweeps at window 3 (guard 2)", detail);
}

// criterion 8: every weight slice in [-6,6] has dimension exactly 2 dim V.
void criterion_8() {
  bool ok = true;
  std::string detail;
  for (auto [lambda, v, dim] :
       std::initializer_list<std::tuple<const char*, const char*, int>>{
           {"1/2", "trivial", 1}, {"0", "gl11", 2}, {"1/2", "adjoint-sl2", 3}}) {
    TensorModule m = make_module(lambda, v);
    WeightReport wr = weight_report(m, 6);
    if (!wr.bounded || !wr.weight_action_diagonal) ok = false;
    for (int d : wr.slice_dimensions) {
      if (d != 2 * dim) {
        ok = false;
        detail += std::string(v) + ": slice dimension " + std::to_string(d) +
                  " != " + std::to_string(2 * dim) + "; ";
      }
    }
  }
  if (ok) detail = "all slices in [-6,6] have dimension 2 dim V";
  line(8, ok, "uniform boundedness of the weight slices", detail);
}

// criterion 9: minimal annihilating order 2 on the generic trivial module,
// cross-checked by brute force, and the symbolic m+2 derivation identity.
void criterion_9() {
  TensorModule m = make_module("1/2", "trivial");
  AnnihilatorSearch search = minimal_annihilating_m(m, -2, 2, -2, 2, 4);
  bool ok = search.minimal_m.has_value() && *search.minimal_m == 2;
  std::string detail = "minimal m = " +
                       (search.minimal_m ? std::to_string(*search.minimal_m)
                                         : std::string("none"));

  // Brute-force oracle, independent of the word machinery.
  bool oracle_m2 = true, oracle_m1 = true;
  for (int k = -2; k <= 2; ++k) {
    for (int s = -2; s <= 2; ++s) {
      for (int n = -4; n <= 4; ++n) {
        for (int xi = 0; xi <= 1; ++xi) {
          for (int m_try : {1, 2}) {
            ModuleVec total;
            for (int i = 0; i <= m_try; ++i) {
              Rational c = rational_binomial(m_try, i);
              if (i % 2) c = -c;
              ModuleVec inner = m.act_atom(BasisVector::d(s + i),
                                           MKey{n, xi, 0});
              for (const auto& [key, x] : inner) {
                total.add_scaled(m.act_atom(BasisVector::d(k - i), key),
                                 c * x);
              }
            }
            if (!total.empty()) (m_try == 2 ? oracle_m2 : oracle_m1) = false;
          }
        }
      }
    }
  }
  if (!oracle_m2 || oracle_m1) {
    ok = false;
    detail += "; brute-force oracle disagrees";
  } else {
    detail += "; brute-force oracle agrees (m=2 kills, m=1 does not)";
  }

  Algebra l(VariantTag::L, sl2_spec());
  SweepReport deriv = verify_annihilator_derivation(l, 2, 2);
  if (!deriv.passed) {
    ok = false;
    detail += "; derivation identity fails: " + deriv.witnesses.front();
  } else {
    detail += "; symbolic m+2 closure over " +
              std::to_string(deriv.cases_checked) + " instances";
  }
  line(9, ok,
       "differentiator annihilation at order 2 and the symbolic order-(m+2) "
       "closure",
       detail);
}

// criterion 10: the witness covers lie in K(M) for all in-window (j,p).
void criterion_10() {
  bool ok = true;
  std::string detail;
  const int m = 4;  // the order from criterion 9, shifted by 2
  for (auto [lambda, vname] : std::initializer_list<std::pair<const char*,
                                                              const char*>>{
           {"0", "adjoint-sl2"}, {"1/2", "trivial"}}) {
    TensorModule mod = make_module(lambda, vname);
    for (int j = -2; j <= 2 && ok; ++j) {
      for (int p = -2; p <= 2 && ok; ++p) {
        for (int with_xi = 0; with_xi <= 1 && ok; ++with_xi) {
          for (int vj = 0; vj < mod.vspec().dim && ok; ++vj) {
            CoverElement c;
            for (int i = 0; i <= m; ++i) {
              Rational coeff = rational_binomial(m, i);
              if (i % 2) coeff = -coeff;
              BasisVector w = with_xi ? BasisVector::od(0, j - i)
                                      : BasisVector::ev(0, j - i);
              c.terms.emplace_back(
                  w, mod.act_atom(BasisVector::d(p + i), MKey{1, 0, vj})
                         .scaled(coeff));
            }
            if (!k_membership(mod, c, 3)) {
              ok = false;
              detail = std::string(vname) + " at (j,p)=(" + std::to_string(j) +
                       "," + std::to_string(p) + ")";
            }
          }
        }
      }
    }
  }
  if (ok) detail = "all in-window (j,p), both loop families, order m = 4";
  line(10, ok, "the alternating-binomial witness covers lie in K(M)", detail);
}

// criterion 11: the shifted generators close a Virasoro subalgebra; the
// central coefficient is an odd cubic (sign differences flagged, not failed).
void criterion_11() {
  Algebra lhat(VariantTag::LHat, sl2_spec());
  DbarReport r = dbar_bracket_check(lhat, 6);
  std::string detail = "central coefficient c(j) = " +
                       rational_to_string(r.cubic_coeff) + "*j^3 + " +
                       rational_to_string(r.linear_coeff) + "*j";
  for (const auto& n : r.notes) {
    if (n.find("differs") != std::string::npos) {
      detail += "; sign convention flagged";
    }
  }
  line(11, r.noncentral_matches && r.central_is_odd_cubic,
       "shifted Virasoro generators close with an odd cubic central "
       "coefficient for |i|,|j| <= 6",
       detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                              : "ACCEPTANCE: " + std::to_string(failures) +
                                    " criterion(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
