#include <doctest.h>

#include "savlie/operators.hpp"

using namespace savlie;

namespace {

std::shared_ptr<const Algebra> l_sl2() {
  static auto alg = std::make_shared<Algebra>(
      VariantTag::L, std::make_shared<GSpec>(builtin_sl2()));
  return alg;
}

const QuotientTable& a0q() {
  static QuotientTable q = quotient_a0_table(*l_sl2(), 4);
  return q;
}

TensorModule make_module(const std::string& lambda, const std::string& v) {
  return TensorModule(l_sl2(), rational_from_string(lambda),
                      vspec_by_name(v, a0q()));
}

}  // namespace

TEST_CASE("differentiator words and binomial coefficients") {
  UEAElement w0 = differentiator(3, -1, 0);
  CHECK(w0 == UEAElement::unit({BasisVector::d(3), BasisVector::d(-1)}));

  UEAElement w1 = differentiator(3, -1, 1);
  CHECK(w1.coeff({BasisVector::d(3), BasisVector::d(-1)}) == Rational(1));
  CHECK(w1.coeff({BasisVector::d(2), BasisVector::d(0)}) == Rational(-1));

  UEAElement w2 = differentiator(3, -1, 2);
  CHECK(w2.coeff({BasisVector::d(3), BasisVector::d(-1)}) == Rational(1));
  CHECK(w2.coeff({BasisVector::d(2), BasisVector::d(0)}) == Rational(-2));
  CHECK(w2.coeff({BasisVector::d(1), BasisVector::d(1)}) == Rational(1));
}

TEST_CASE("pbw normal form straightens words consistently") {
  const Algebra& l = *l_sl2();
  // d1 d0 = d0 d1 + [d1, d0] = d0 d1 - d1
  UEAElement lhs = uea_mul(uea_atom(BasisVector::d(1)),
                           uea_atom(BasisVector::d(0)));
  UEAElement rhs = uea_mul(uea_atom(BasisVector::d(0)),
                           uea_atom(BasisVector::d(1)));
  rhs.add_term({BasisVector::d(1)}, Rational(-1));
  CHECK(uea_normal_form(l, lhs) == uea_normal_form(l, rhs));

  // odd square: Q0 Q0 = [Q0,Q0]/2 = 0
  UEAElement qq = uea_mul(uea_atom(BasisVector::q(0)),
                          uea_atom(BasisVector::q(0)));
  CHECK(uea_normal_form(l, qq).empty());

  // G0 Q0 = -Q0 G0 + [G0, Q0]
  UEAElement gq = uea_mul(uea_atom(BasisVector::g(0)),
                          uea_atom(BasisVector::q(0)));
  UEAElement expect = uea_mul(uea_atom(BasisVector::q(0)),
                              uea_atom(BasisVector::g(0))).scaled(Rational(-1));
  expect.add_scaled(uea_normal_form(l, uea_atom(BasisVector::d(0))),
                    Rational(1));  // [G0,Q0] = +[Q0,G0] = d0
  CHECK(uea_normal_form(l, gq) == uea_normal_form(l, expect));
}

TEST_CASE("differentiators shift slices by k + s") {
  TensorModule m = make_module("1/3", "gl11");
  UEAElement omega = differentiator(2, -1, 2);
  for (int n = -2; n <= 2; ++n) {
    ModuleVec image = act_uea(m, omega, ModuleVec::unit(MKey{n, 0, 0}));
    for (const auto& [k, c] : image) CHECK(k.n == n + 1);
  }
}

TEST_CASE("minimal annihilating order for the generic trivial module") {
  TensorModule m = make_module("1/2", "trivial");
  AnnihilatorSearch search = minimal_annihilating_m(m, -2, 2, -2, 2, 3);
  REQUIRE(search.minimal_m.has_value());
  CHECK(*search.minimal_m == 2);
  CHECK(!search.witnesses.empty());  // m = 0, 1 fail with witnesses

  // Independent brute-force oracle for the same statement: evaluate
  // sum_i (-1)^i C(m,i) d_{k-i} (d_{s+i} w) directly through act_atom.
  for (int m_try : {1, 2}) {
    bool all_zero = true;
    for (int k = -2; k <= 2 && all_zero; ++k) {
      for (int s = -2; s <= 2 && all_zero; ++s) {
        for (int n = -3; n <= 3 && all_zero; ++n) {
          for (int xi = 0; xi <= 1 && all_zero; ++xi) {
            ModuleVec total;
            for (int i = 0; i <= m_try; ++i) {
              Rational c = rational_binomial(m_try, i);
              if (i % 2) c = -c;
              ModuleVec inner =
                  m.act_atom(BasisVector::d(s + i), MKey{n, xi, 0});
              for (const auto& [key, x] : inner) {
                total.add_scaled(m.act_atom(BasisVector::d(k - i), key),
                                 c * x);
              }
            }
            if (!total.empty()) all_zero = false;
          }
        }
      }
    }
    CHECK(all_zero == (m_try == 2));
  }

  // the zero vector is annihilated at any order
  CHECK(act_uea(m, differentiator(1, 1, 0), ModuleVec()).empty());
}

TEST_CASE("loop annihilator families at the shifted order") {
  TensorModule adj = make_module("0", "adjoint-sl2");
  CHECK(verify_loop_annihilators(adj, 4, 2).passed);
  SweepReport bad = verify_loop_annihilators(adj, 0, 1);
  CHECK(!bad.passed);
  CHECK(!bad.witnesses.empty());

  TensorModule triv = make_module("1/2", "trivial");
  CHECK(verify_loop_annihilators(triv, 4, 2).passed);
}

TEST_CASE("the annihilator family emerges from differentiator commutators") {
  SweepReport r = verify_annihilator_derivation(*l_sl2(), 2, 2);
  INFO((r.witnesses.empty() ? "" : r.witnesses.front()));
  CHECK(r.passed);
  CHECK(r.cases_checked > 0);
}

TEST_CASE("cover membership in K(M)") {
  TensorModule adj = make_module("0", "adjoint-sl2");
  const int m = 4, j = 1, p = 0;

  // The witness family: sum_i (-1)^i C(m,i) (x (x) t^{j-i}) (x) d_{p+i} v.
  auto witness_cover = [&](bool with_xi, const MKey& vkey) {
    CoverElement c;
    for (int i = 0; i <= m; ++i) {
      Rational coeff = rational_binomial(m, i);
      if (i % 2) coeff = -coeff;
      BasisVector w = with_xi ? BasisVector::od(0, j - i)
                              : BasisVector::ev(0, j - i);
      ModuleVec v = adj.act_atom(BasisVector::d(p + i), vkey).scaled(coeff);
      c.terms.emplace_back(w, std::move(v));
    }
    return c;
  };
  CHECK(k_membership(adj, witness_cover(false, MKey{1, 0, 2}), 3));
  CHECK(k_membership(adj, witness_cover(true, MKey{1, 0, 2}), 3));

  // A-stability: multiplying the cover by t^q or t^q xi stays in K(M).
  CoverElement c = witness_cover(false, MKey{1, 0, 2});
  for (int q : {-1, 2}) {
    for (bool xi : {false, true}) {
      CoverElement shifted;
      for (const auto& [w, v] : c.terms) {
        auto aw = amod_on_loop(w, q, xi);
        if (aw) shifted.terms.emplace_back(*aw, v);
      }
      CHECK(k_membership(adj, shifted, 3));
    }
  }

  // Single term (e (x) t^0) (x) v with (ad e) v != 0 is not a member.
  CoverElement single;
  single.terms.emplace_back(BasisVector::ev(0, 0),
                            ModuleVec::unit(MKey{1, 0, 2}));  // v = f
  CHECK(!k_membership(adj, single, 3));

  // the zero cover is trivially a member
  CHECK(k_membership(adj, CoverElement{}, 3));
}

TEST_CASE("shifted generators close a Virasoro algebra") {
  Algebra lhat(VariantTag::LHat, std::make_shared<GSpec>(builtin_sl2()));
  DbarReport r = dbar_bracket_check(lhat, 6);
  CHECK(r.noncentral_matches);
  CHECK(r.central_is_odd_cubic);
  CHECK(r.cubic_coeff == Rational(-1, 2));
  CHECK(r.linear_coeff == Rational(0));
  // the sign difference against the +1/2 convention is flagged in the notes
  bool flagged = false;
  for (const auto& n : r.notes) {
    if (n.find("differs") != std::string::npos) flagged = true;
  }
  CHECK(flagged);
}
