#pragma once

#include <string>
#include <vector>

#include "savlie/filtration.hpp"
#include "savlie/matrix.hpp"

namespace savlie {

struct RepViolation : std::runtime_error {
  RepViolation(std::string pair, std::string detail)
      : std::runtime_error("representation property violated on generator "
                           "pair " +
                           pair + ": " + detail),
        witness_pair(std::move(pair)) {}
  std::string witness_pair;
};

// A finite-dimensional module for the a_0/a_1 quotient, given by one action
// matrix per quotient generator in the order of QuotientTable::gen_names
// ((t-1)d0, h0, (t-1)Q0, G0, then the g basis). Matrices act on column
// vectors; entry (r, c) is the coefficient of basis vector r in the image of
// basis vector c.
struct VSpec {
  std::string name;
  int dim = 0;
  std::vector<int> parities;
  std::vector<RationalMatrix> generator_matrices;
};

// Enforces, against the computed quotient table: matching generator count,
// parity-homogeneous matrices, and the representation property
// M([a,b]) = M(a)M(b) - (-1)^{|a||b|} M(b)M(a) on all generator pairs.
// Throws RepViolation / ParseError.
void validate_vspec(const VSpec& v, const QuotientTable& quotient);

// Built-ins: "trivial" (dim 1), "gl11" (the natural 2-dimensional module of
// the quotient's gl(1,1) part, g acting by zero), "adjoint-sl2" (g = sl2
// acting adjointly, gl(1,1) part zero). "@path" loads the json document
// { "dim": n, "parity": [...], "generators": { "td0": M, "h0": M, "tQ0": M,
//   "G0": M, "g:<name>": M } } with dense row-major rational-string matrices;
// omitted generators default to zero.
VSpec vspec_by_name(const std::string& name, const QuotientTable& quotient);
VSpec load_vspec_from_json_text(const std::string& text,
                                const QuotientTable& quotient);

}  // namespace savlie
