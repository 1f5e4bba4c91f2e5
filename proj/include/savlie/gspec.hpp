#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "savlie/sparse_vec.hpp"

namespace savlie {

struct JacobiViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite-dimensional Lie superalgebra given by structure constants:
// constants[s][u] holds the coefficients of [x_s, x_u] over the basis.
// Validation enforces super-antisymmetry, parity compatibility and the super
// Jacobi identity on all basis triples; perfectness ([g,g] = g) is recorded
// as a flag, not required.
struct GSpec {
  std::string name;
  std::vector<std::string> basis_names;
  std::vector<int> parities;  // 0 or 1 per basis vector
  std::vector<std::vector<SparseVec<int>>> constants;

  bool perfect = false;

  int dim() const { return int(basis_names.size()); }
  int parity(int s) const { return parities[std::size_t(s)]; }
  const SparseVec<int>& bracket(int s, int u) const {
    return constants[std::size_t(s)][std::size_t(u)];
  }
};

// Validates all GSpec invariants in place and computes the perfectness flag.
// Throws ParseError for shape/antisymmetry/parity violations and
// JacobiViolation (with the witness triple) for Jacobi failures.
void validate_gspec(GSpec& g);

// Parses the structured document format:
//   { "basis": [names...], "parity": [0|1...],
//     "brackets": { "s,u": [ [index, "p/q"], ... ] } }
// Omitted pairs default to zero; antisymmetric completion is applied before
// validation. Rational literals are strings "p/q" or "p".
GSpec load_gspec_from_json_text(const std::string& text);
GSpec load_gspec_from_file(const std::string& path);

// Built-in algebras: sl2 = {e,h,f} (purely even) and osp(1|2) = sl2 + odd
// {E,F}. Resolves "@path" to a file load.
GSpec gspec_by_name(const std::string& name);

GSpec builtin_sl2();
GSpec builtin_osp12();

}  // namespace savlie
