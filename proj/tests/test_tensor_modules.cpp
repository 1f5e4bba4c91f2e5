#include <doctest.h>

#include "savlie/tensor_module.hpp"

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

TEST_CASE("trivial module action formulas") {
  TensorModule m = make_module("1/2", "trivial");
  // d_1 (t^0 x v) = lambda t^1 x v
  CHECK(m.act_atom(BasisVector::d(1), MKey{0, 0, 0}) ==
        ModuleVec::unit(MKey{1, 0, 0}, Rational(1, 2)));
  // G_i (t^j x v) = (lambda + j) t^{i+j} xi x v
  CHECK(m.act_atom(BasisVector::g(2), MKey{3, 0, 0}) ==
        ModuleVec::unit(MKey{5, 1, 0}, Rational(7, 2)));
  // G on a xi-key vanishes for the trivial module
  CHECK(m.act_atom(BasisVector::g(2), MKey{3, 1, 0}).empty());
  // Q_i (t^j xi x v) = t^{i+j} x v
  CHECK(m.act_atom(BasisVector::q(-1), MKey{2, 1, 0}) ==
        ModuleVec::unit(MKey{1, 0, 0}));
  // h_i keeps xi-keys and kills xi-free keys when V is trivial
  CHECK(m.act_atom(BasisVector::h(2), MKey{0, 0, 0}).empty());
  CHECK(m.act_atom(BasisVector::h(2), MKey{0, 1, 0}) ==
        ModuleVec::unit(MKey{2, 1, 0}));
  // the loop part acts through the (zero) g-matrices
  CHECK(m.act_atom(BasisVector::ev(0, 1), MKey{0, 0, 0}).empty());
  // the center never acts
  CHECK_THROWS_AS(m.act_atom(BasisVector::cen(), MKey{0, 0, 0}),
                  IllegalFamily);
}

TEST_CASE("gl11 module action uses the pullback matrices") {
  TensorModule m = make_module("0", "gl11");
  // h_i (t^j x v) = t^{i+j} x (E22 v): zero on v0, identity on v1
  CHECK(m.act_atom(BasisVector::h(2), MKey{1, 0, 0}).empty());
  CHECK(m.act_atom(BasisVector::h(2), MKey{1, 0, 1}) ==
        ModuleVec::unit(MKey{3, 0, 1}));
  // (d_i - d_0) pulls back to i * E11
  ModuleVec d2 = m.act_atom(BasisVector::d(2), MKey{1, 0, 0});
  ModuleVec want = ModuleVec::unit(MKey{3, 0, 0}, Rational(2) + Rational(1));
  CHECK(d2 == want);  // matrix part 2*E11 plus scalar part (lambda + n) = 1
}

TEST_CASE("module axiom sweeps pass for the shipped modules") {
  for (auto [lambda, v] : std::initializer_list<std::pair<const char*,
                                                          const char*>>{
           {"1/2", "trivial"}, {"0", "gl11"}, {"1/2", "adjoint-sl2"}}) {
    TensorModule m = make_module(lambda, v);
    SweepReport r = verify_module_axioms(m, 2, 2);
    INFO(v, " lambda=", lambda,
         (r.witnesses.empty() ? "" : ": " + r.witnesses.front()));
    CHECK(r.passed);
  }
}

TEST_CASE("dropping the Q sign breaks the sweep") {
  TensorModule m = make_module("0", "gl11");
  m.set_q_sign_dropped(true);
  SweepReport r = verify_module_axioms(m, 2, 1);
  CHECK(!r.passed);
  CHECK(!r.witnesses.empty());
}

TEST_CASE("random sampling mode records its seed") {
  TensorModule m = make_module("1/2", "trivial");
  SweepReport r = verify_module_axioms(m, 2, 1, SampleSpec::random(1234, 500));
  CHECK(r.passed);
  REQUIRE(!r.notes.empty());
  CHECK(r.notes.front().find("1234") != std::string::npos);
}

TEST_CASE("weight report: slices are uniformly 2 dim V") {
  TensorModule m = make_module("1/2", "adjoint-sl2");
  WeightReport wr = weight_report(m, 4);
  CHECK(wr.bounded);
  CHECK(wr.weight_action_diagonal);
  for (int d : wr.slice_dimensions) CHECK(d == 6);

  TensorModule t = make_module("1/2", "trivial");
  WeightReport w0 = weight_report(t, 0);
  CHECK(w0.slice_dimensions == std::vector<int>{2});
}

TEST_CASE("submodule probe: reachability depends on the weight") {
  TensorModule m = make_module("1/2", "trivial");
  SubmoduleProbe full =
      submodule_probe(m, 3, {ModuleVec::unit(MKey{0, 0, 0})});
  CHECK(full.span_dimension == full.full_dimension);
  CHECK(!full.proper_in_window);

  // at lambda = 0 the slice n = 0 is a fixed point of the algebra action
  TensorModule z = make_module("0", "trivial");
  SubmoduleProbe stuck =
      submodule_probe(z, 3, {ModuleVec::unit(MKey{0, 0, 0})});
  CHECK(stuck.span_dimension == 1);
  CHECK(stuck.proper_in_window);
  CHECK(!stuck.notes.empty());

  SubmoduleProbe empty = submodule_probe(m, 3, {});
  CHECK(empty.span_dimension == 0);
}

TEST_CASE("v-spec validation rejects non-representations") {
  // Claiming [Q,G] = 0 on matrices while the quotient bracket is a+h.
  std::string bad = R"({
    "dim": 2, "parity": [0, 1],
    "generators": {
      "td0": [["1","0"],["0","0"]],
      "h0":  [["0","0"],["0","1"]],
      "tQ0": [["0","1"],["0","0"]],
      "G0":  [["0","0"],["0","0"]]
    }})";
  CHECK_THROWS_AS(load_vspec_from_json_text(bad, a0q()), RepViolation);

  // Parity-inhomogeneous matrix.
  std::string odd_even = R"({
    "dim": 2, "parity": [0, 1],
    "generators": { "h0": [["0","1"],["0","0"]] }})";
  CHECK_THROWS_AS(load_vspec_from_json_text(odd_even, a0q()), ParseError);

  // A valid document loads and matches the builtin.
  std::string good = R"({
    "dim": 1, "parity": [0], "generators": {}})";
  VSpec v = load_vspec_from_json_text(good, a0q());
  CHECK(v.dim == 1);
}
