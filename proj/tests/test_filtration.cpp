#include <doctest.h>

#include "savlie/filtration.hpp"

using namespace savlie;

namespace {

std::shared_ptr<const Algebra> l_sl2() {
  static auto alg = std::make_shared<Algebra>(
      VariantTag::L, std::make_shared<GSpec>(builtin_sl2()));
  return alg;
}

AlgElement term(BasisVector v, Rational c = Rational(1)) {
  return AlgElement::unit(v, std::move(c));
}

}  // namespace

TEST_CASE("binomial expansion into the t-power basis") {
  AlgElement e1 = expand(TAtom::make(Family::D, 1, 1));
  AlgElement want1 = term(BasisVector::d(2));
  want1.add_term(BasisVector::d(1), Rational(-1));
  CHECK(e1 == want1);

  AlgElement e2 = expand(TAtom::make(Family::D, 2, 3));
  AlgElement want2 = term(BasisVector::d(5));
  want2.add_term(BasisVector::d(4), Rational(-2));
  want2.add_term(BasisVector::d(3), Rational(1));
  CHECK(e2 == want2);

  AlgElement e3 = expand(TAtom::make(Family::OD, 1, 0, 0));
  AlgElement want3 = term(BasisVector::od(0, 1));
  want3.add_term(BasisVector::od(0, 0), Rational(-1));
  CHECK(e3 == want3);
}

TEST_CASE("closed-form relation spot checks") {
  const Algebra& l = *l_sl2();
  // d-d at k=l=1, i=1, j=2: both sides equal (t-1)^2 d_3 expanded.
  CHECK(check_lemma22(l, Lemma22Relation::dd, 1, 1, 1, 2).passed);
  // Q-Q vanishes identically.
  CHECK(check_lemma22(l, Lemma22Relation::QQ, 0, 0, 2, -1).passed);
  // Q-G at k=l=1, i=j=0.
  CHECK(check_lemma22(l, Lemma22Relation::QG, 1, 1, 0, 0).passed);
  // The corrected d-od line reduces to the first-principles bracket at k=l=0.
  CHECK(check_lemma22(l, Lemma22Relation::d_od, 0, 0, 2, 3).passed);
}

TEST_CASE("full relation sweep in a small box") {
  CHECK(lemma22_sweep(*l_sl2(), 2, 2).passed);
  Algebra l_osp(VariantTag::L, std::make_shared<GSpec>(builtin_osp12()));
  CHECK(lemma22_sweep(l_osp, 2, 2).passed);
}

TEST_CASE("filtration membership decides spanning questions exactly") {
  const Algebra& l = *l_sl2();
  AlgElement d1_minus_d0 = term(BasisVector::d(1));
  d1_minus_d0.add_term(BasisVector::d(0), Rational(-1));
  CHECK(filtration_membership(l, d1_minus_d0, 0, 3));

  CHECK(!filtration_membership(l, term(BasisVector::d(1)), 0, 3));
  CHECK(filtration_membership(l, term(BasisVector::h(0)), 0, 3));
  CHECK(!filtration_membership(l, term(BasisVector::h(0)), 1, 3));

  // A t-degree outside the window is refused rather than mis-answered.
  CHECK_THROWS_AS(filtration_membership(l, term(BasisVector::d(9)), 0, 3),
                  WindowTooSmall);

  // Soundness canary: had the bracket engine produced a stray Q_3 for a
  // bracket landing in a_0, membership would flag it.
  CHECK(!filtration_membership(l, term(BasisVector::q(3)), 0, 4));

  // [h_1, G_2] = G_3 lies in a_0.
  AlgElement hg = l.bracket(term(BasisVector::h(1)), term(BasisVector::g(2)));
  CHECK(filtration_membership(l, hg, 0, 4));
}

TEST_CASE("filtration laws hold on a small window") {
  SweepReport r = verify_filtration_laws(*l_sl2(), 2, 3);
  INFO((r.witnesses.empty() ? "" : r.witnesses.front()));
  CHECK(r.passed);
}

TEST_CASE("depth-one Witt quotient has the gl(1,1) shape") {
  QuotientTable t = quotient_mdelta_table(*l_sl2(), 4);
  CHECK(t.dim() == 4);
  CHECK(match_gl11_invariants(t).passed);

  // [(t-1)Q0, G0] = (t-1)d0 + h0 in the quotient.
  SparseVec<int> want;
  want.add_term(0, Rational(1));
  want.add_term(1, Rational(1));
  CHECK(t.constants[2][3] == want);
  // [(t-1)d0, (t-1)Q0] = (t-1)Q0, [h0, G0] = G0.
  CHECK(t.constants[0][2] == SparseVec<int>::unit(2));
  CHECK(t.constants[1][3] == SparseVec<int>::unit(3));
}

TEST_CASE("depth-zero quotient splits into gl(1,1) and g") {
  QuotientTable t = quotient_a0_table(*l_sl2(), 4);
  CHECK(t.dim() == 7);
  CHECK(t.jacobi_ok);
  // cross brackets vanish
  for (int a = 0; a < 4; ++a) {
    for (int b = 4; b < 7; ++b) {
      CHECK(t.constants[std::size_t(a)][std::size_t(b)].empty());
    }
  }
  // g-part equals the structure constants, shifted by the Witt block
  const GSpec& g = *l_sl2()->g();
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      SparseVec<int> want;
      for (const auto& [z, c] : g.bracket(a, b)) want.add_term(z + 4, c);
      CHECK(t.constants[std::size_t(a + 4)][std::size_t(b + 4)] == want);
    }
  }
}

TEST_CASE("coset reduction computes the pullback coefficients") {
  const Algebra& l = *l_sl2();
  for (int i : {-4, -1, 0, 1, 2, 5}) {
    AlgElement di_minus_d0 = term(BasisVector::d(i));
    di_minus_d0.add_term(BasisVector::d(0), Rational(-1));
    SparseVec<int> want;
    want.add_term(0, Rational(i));
    CHECK(reduce_mod_a1(l, di_minus_d0) == want);

    CHECK(reduce_mod_a1(l, term(BasisVector::h(i))) == SparseVec<int>::unit(1));

    AlgElement qi_minus_q0 = term(BasisVector::q(i));
    qi_minus_q0.add_term(BasisVector::q(0), Rational(-1));
    SparseVec<int> want_q;
    want_q.add_term(2, Rational(i));
    CHECK(reduce_mod_a1(l, qi_minus_q0) == want_q);

    CHECK(reduce_mod_a1(l, term(BasisVector::g(i))) == SparseVec<int>::unit(3));
    CHECK(reduce_mod_a1(l, term(BasisVector::ev(1, i))) ==
          SparseVec<int>::unit(5));
    CHECK(reduce_mod_a1(l, term(BasisVector::od(1, i))).empty());
  }
  // d_1 alone is not in a_0.
  CHECK_THROWS_AS(reduce_mod_a1(l, term(BasisVector::d(1))),
                  std::runtime_error);
}
