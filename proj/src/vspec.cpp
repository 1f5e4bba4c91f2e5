#include "savlie/vspec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace savlie {

namespace {

bool mat_is_zero(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m.at(i, j))) return false;
  return true;
}

}  // namespace

void validate_vspec(const VSpec& v, const QuotientTable& quotient) {
  const std::size_t n = std::size_t(quotient.dim());
  if (v.generator_matrices.size() != n) {
    throw ParseError("v-spec '" + v.name + "': expected " + std::to_string(n) +
                     " generator matrices, got " +
                     std::to_string(v.generator_matrices.size()));
  }
  if (int(v.parities.size()) != v.dim) {
    throw ParseError("v-spec '" + v.name + "': parity list size mismatch");
  }
  for (std::size_t a = 0; a < n; ++a) {
    const RationalMatrix& m = v.generator_matrices[a];
    if (int(m.rows()) != v.dim || int(m.cols()) != v.dim) {
      throw ParseError("v-spec '" + v.name + "': matrix for " +
                       quotient.gen_names[a] + " has wrong shape");
    }
    int gp = quotient.parities[a];
    for (int r = 0; r < v.dim; ++r) {
      for (int c = 0; c < v.dim; ++c) {
        if (is_zero(m.at(std::size_t(r), std::size_t(c)))) continue;
        if (v.parities[std::size_t(r)] !=
            (v.parities[std::size_t(c)] + gp) % 2) {
          throw ParseError("v-spec '" + v.name + "': matrix for " +
                           quotient.gen_names[a] +
                           " is not parity-homogeneous at entry (" +
                           std::to_string(r) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Rational sign =
          (quotient.parities[a] && quotient.parities[b]) ? 1 : -1;
      RationalMatrix lhs = matadd(
          matmul(v.generator_matrices[a], v.generator_matrices[b]),
          matmul(v.generator_matrices[b], v.generator_matrices[a]), sign);
      RationalMatrix rhs(std::size_t(v.dim), std::size_t(v.dim));
      for (const auto& [z, c] : quotient.constants[a][b]) {
        rhs = matadd(rhs, v.generator_matrices[std::size_t(z)], c);
      }
      if (!(lhs == rhs)) {
        throw RepViolation(
            "(" + quotient.gen_names[a] + ", " + quotient.gen_names[b] + ")",
            "supercommutator of the matrices differs from the bracket image");
      }
    }
  }
}

namespace {

VSpec make_trivial(const QuotientTable& q) {
  VSpec v;
  v.name = "trivial";
  v.dim = 1;
  v.parities = {0};
  v.generator_matrices.assign(std::size_t(q.dim()), RationalMatrix(1, 1));
  return v;
}

VSpec make_gl11_natural(const QuotientTable& q) {
  VSpec v;
  v.name = "gl11";
  v.dim = 2;
  v.parities = {0, 1};
  v.generator_matrices.assign(std::size_t(q.dim()), RationalMatrix(2, 2));
  // (t-1)d0 -> E11, h0 -> E22, (t-1)Q0 -> E12, G0 -> E21, g -> 0.
  v.generator_matrices[0].at(0, 0) = 1;
  v.generator_matrices[1].at(1, 1) = 1;
  v.generator_matrices[2].at(0, 1) = 1;
  v.generator_matrices[3].at(1, 0) = 1;
  return v;
}

VSpec make_adjoint(const QuotientTable& q, const GSpec& g) {
  VSpec v;
  v.name = "adjoint-" + g.name;
  v.dim = g.dim();
  v.parities = g.parities;
  v.generator_matrices.assign(std::size_t(q.dim()),
                              RationalMatrix(std::size_t(g.dim()),
                                             std::size_t(g.dim())));
  for (int s = 0; s < g.dim(); ++s) {
    RationalMatrix& m = v.generator_matrices[std::size_t(4 + s)];
    for (int u = 0; u < g.dim(); ++u) {
      for (const auto& [z, c] : g.bracket(s, u)) {
        m.at(std::size_t(z), std::size_t(u)) = c;
      }
    }
  }
  return v;
}

RationalMatrix parse_matrix(const nlohmann::json& rows, int dim,
                            const std::string& what) {
  if (!rows.is_array() || int(rows.size()) != dim) {
    throw ParseError("v-spec matrix " + what + " must have " +
                     std::to_string(dim) + " rows");
  }
  RationalMatrix m{std::size_t(dim), std::size_t(dim)};
  for (int r = 0; r < dim; ++r) {
    const auto& row = rows[std::size_t(r)];
    if (!row.is_array() || int(row.size()) != dim) {
      throw ParseError("v-spec matrix " + what + " row " + std::to_string(r) +
                       " must have " + std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) {
      m.at(std::size_t(r), std::size_t(c)) =
          rational_from_string(row[std::size_t(c)].get<std::string>());
    }
  }
  return m;
}

}  // namespace

VSpec load_vspec_from_json_text(const std::string& text,
                                const QuotientTable& quotient) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("v-spec: invalid json: ") + e.what());
  }
  VSpec v;
  v.name = doc.value("name", std::string("custom"));
  v.dim = doc.at("dim").get<int>();
  if (v.dim <= 0) throw ParseError("v-spec: dim must be positive");
  for (const auto& p : doc.at("parity")) v.parities.push_back(p.get<int>());
  v.generator_matrices.assign(
      std::size_t(quotient.dim()),
      RationalMatrix(std::size_t(v.dim), std::size_t(v.dim)));

  std::map<std::string, std::size_t> keys;
  keys["td0"] = 0;
  keys["h0"] = 1;
  keys["tQ0"] = 2;
  keys["G0"] = 3;
  for (std::size_t i = 4; i < std::size_t(quotient.dim()); ++i) {
    keys[quotient.gen_names[i]] = i;  // "g:<name>"
  }
  if (doc.contains("generators")) {
    for (const auto& [key, val] : doc["generators"].items()) {
      auto it = keys.find(key);
      if (it == keys.end()) {
        throw ParseError("v-spec: unknown generator key '" + key + "'");
      }
      v.generator_matrices[it->second] = parse_matrix(val, v.dim, key);
    }
  }
  validate_vspec(v, quotient);
  return v;
}

VSpec vspec_by_name(const std::string& name, const QuotientTable& quotient) {
  VSpec v;
  if (name == "trivial") {
    v = make_trivial(quotient);
  } else if (name == "gl11") {
    v = make_gl11_natural(quotient);
  } else if (name.rfind("adjoint-", 0) == 0) {
    GSpec g = gspec_by_name(name.substr(8));
    if (quotient.dim() != 4 + g.dim()) {
      throw ParseError("v-spec '" + name +
                       "' does not match the quotient's g part");
    }
    v = make_adjoint(quotient, g);
  } else if (!name.empty() && name.front() == '@') {
    std::ifstream in(name.substr(1));
    if (!in) throw ParseError("v-spec: cannot open file: " + name.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return load_vspec_from_json_text(ss.str(), quotient);
  } else {
    throw ParseError("unknown v-spec '" + name +
                     "' (use trivial, gl11, adjoint-sl2, or @path.json)");
  }
  validate_vspec(v, quotient);
  return v;
}

}  // namespace savlie
