#include "savlie/gspec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace savlie {

namespace {

SparseVec<int> bracket_elem(const GSpec& g, const SparseVec<int>& a, int u) {
  SparseVec<int> out;
  for (const auto& [s, c] : a) out.add_scaled(g.bracket(s, u), c);
  return out;
}

std::string triple_desc(const GSpec& g, int s, int u, int v) {
  std::ostringstream os;
  os << "(" << g.basis_names[std::size_t(s)] << ", "
     << g.basis_names[std::size_t(u)] << ", " << g.basis_names[std::size_t(v)]
     << ")";
  return os.str();
}

}  // namespace

void validate_gspec(GSpec& g) {
  const std::size_t n = g.basis_names.size();
  if (g.parities.size() != n) {
    throw ParseError("gspec '" + g.name + "': parity list size mismatch");
  }
  for (int p : g.parities) {
    if (p != 0 && p != 1) throw ParseError("gspec parity entries must be 0/1");
  }
  if (g.constants.size() != n) {
    throw ParseError("gspec '" + g.name + "': constants table size mismatch");
  }
  for (const auto& row : g.constants) {
    if (row.size() != n) {
      throw ParseError("gspec '" + g.name + "': constants table not square");
    }
  }

  // Super-antisymmetry: [x_s,x_u] = -(-1)^{|s||u|} [x_u,x_s].
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t u = 0; u <= s; ++u) {
      Rational sign = (g.parities[s] && g.parities[u]) ? 1 : -1;
      SparseVec<int> defect = g.constants[s][u];
      defect.add_scaled(g.constants[u][s], -sign);
      if (!defect.empty()) {
        throw ParseError("gspec '" + g.name +
                         "': super-antisymmetry violated for pair (" +
                         g.basis_names[s] + ", " + g.basis_names[u] + ")");
      }
    }
  }

  // Parity compatibility: every term of [x_s,x_u] has parity |s|+|u|.
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t u = 0; u < n; ++u) {
      int want = (g.parities[s] + g.parities[u]) % 2;
      for (const auto& [z, c] : g.constants[s][u]) {
        if (g.parities[std::size_t(z)] != want) {
          throw ParseError("gspec '" + g.name +
                           "': parity-incompatible term in [" +
                           g.basis_names[s] + ", " + g.basis_names[u] + "]");
        }
      }
    }
  }

  // Super Jacobi on all basis triples.
  for (int s = 0; s < int(n); ++s) {
    for (int u = 0; u < int(n); ++u) {
      for (int v = 0; v < int(n); ++v) {
        SparseVec<int> lhs = bracket_elem(g, g.bracket(u, v), s);
        // [s,[u,v]] computed as -(-1)^{|s|(|u|+|v|)}[[u,v],s]
        int puv = (g.parities[std::size_t(u)] + g.parities[std::size_t(v)]) % 2;
        Rational flip =
            (g.parities[std::size_t(s)] && puv) ? Rational(1) : Rational(-1);
        lhs.scale_in_place(flip);

        SparseVec<int> rhs = bracket_elem(g, g.bracket(s, u), v);
        SparseVec<int> third = bracket_elem(g, g.bracket(s, v), u);
        // [u,[s,v]] = -(-1)^{|u|(|s|+|v|)}[[s,v],u]
        int psv = (g.parities[std::size_t(s)] + g.parities[std::size_t(v)]) % 2;
        Rational flip2 =
            (g.parities[std::size_t(u)] && psv) ? Rational(1) : Rational(-1);
        third.scale_in_place(flip2);
        Rational sign_su =
            (g.parities[std::size_t(s)] && g.parities[std::size_t(u)])
                ? Rational(-1)
                : Rational(1);
        rhs.add_scaled(third, sign_su);

        lhs -= rhs;
        if (!lhs.empty()) {
          throw JacobiViolation("gspec '" + g.name +
                                "': super Jacobi fails on triple " +
                                triple_desc(g, s, u, v));
        }
      }
    }
  }

  // Perfectness: span of all brackets equals g.
  std::vector<std::vector<Rational>> rows;
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> echelon;
  for (std::size_t s = 0; s < n && rank < n; ++s) {
    for (std::size_t u = 0; u < n && rank < n; ++u) {
      std::vector<Rational> row(n, Rational(0));
      for (const auto& [z, c] : g.constants[s][u]) row[std::size_t(z)] = c;
      for (const auto& e : echelon) {
        std::size_t lead = 0;
        while (lead < n && is_zero(e[lead])) ++lead;
        if (lead < n && !is_zero(row[lead])) {
          Rational f = row[lead] / e[lead];
          for (std::size_t k = lead; k < n; ++k) row[k] -= f * e[k];
        }
      }
      bool nonzero = false;
      for (const auto& x : row) {
        if (!is_zero(x)) {
          nonzero = true;
          break;
        }
      }
      if (nonzero) {
        echelon.push_back(row);
        ++rank;
      }
    }
  }
  g.perfect = (rank == n);
}

GSpec load_gspec_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("gspec: invalid json: ") + e.what());
  }
  GSpec g;
  g.name = doc.value("name", std::string("custom"));
  if (!doc.contains("basis") || !doc["basis"].is_array()) {
    throw ParseError("gspec: missing \"basis\" array");
  }
  for (const auto& b : doc["basis"]) g.basis_names.push_back(b.get<std::string>());
  if (!doc.contains("parity") || !doc["parity"].is_array()) {
    throw ParseError("gspec: missing \"parity\" array");
  }
  for (const auto& p : doc["parity"]) g.parities.push_back(p.get<int>());
  const std::size_t n = g.basis_names.size();
  g.constants.assign(n, std::vector<SparseVec<int>>(n));

  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  if (doc.contains("brackets")) {
    for (const auto& [key, val] : doc["brackets"].items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos) {
        throw ParseError("gspec: bracket key must be \"s,u\": " + key);
      }
      int s = std::stoi(key.substr(0, comma));
      int u = std::stoi(key.substr(comma + 1));
      if (s < 0 || u < 0 || s >= int(n) || u >= int(n)) {
        throw ParseError("gspec: bracket key out of range: " + key);
      }
      SparseVec<int> terms;
      for (const auto& term : val) {
        int z = term.at(0).get<int>();
        if (z < 0 || z >= int(n)) {
          throw ParseError("gspec: bracket term index out of range in " + key);
        }
        terms.add_term(z, rational_from_string(term.at(1).get<std::string>()));
      }
      g.constants[std::size_t(s)][std::size_t(u)] = std::move(terms);
      given[std::size_t(s)][std::size_t(u)] = true;
    }
  }

  // Antisymmetric completion for pairs given in one orientation only.
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t u = 0; u < n; ++u) {
      if (given[s][u] && !given[u][s] && s != u) {
        Rational sign = (g.parities[s] && g.parities[u]) ? 1 : -1;
        g.constants[u][s] = g.constants[s][u].scaled(sign);
        given[u][s] = true;
      }
    }
  }

  validate_gspec(g);
  return g;
}

GSpec load_gspec_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("gspec: cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  GSpec g = load_gspec_from_json_text(ss.str());
  if (g.name == "custom") g.name = path;
  return g;
}

GSpec builtin_sl2() {
  GSpec g;
  g.name = "sl2";
  g.basis_names = {"e", "h", "f"};
  g.parities = {0, 0, 0};
  const int E = 0, H = 1, F = 2;
  g.constants.assign(3, std::vector<SparseVec<int>>(3));
  auto set = [&](int s, int u, SparseVec<int> v) {
    g.constants[std::size_t(s)][std::size_t(u)] = v;
    g.constants[std::size_t(u)][std::size_t(s)] = v.scaled(-1);
  };
  set(E, F, SparseVec<int>::unit(H));                 // [e,f] = h
  set(H, E, SparseVec<int>::unit(E, Rational(2)));    // [h,e] = 2e
  set(H, F, SparseVec<int>::unit(F, Rational(-2)));   // [h,f] = -2f
  validate_gspec(g);
  return g;
}

GSpec builtin_osp12() {
  GSpec g;
  g.name = "osp12";
  g.basis_names = {"e", "h", "f", "E", "F"};
  g.parities = {0, 0, 0, 1, 1};
  const int E = 0, H = 1, F = 2, X = 3, Y = 4;  // X,Y the odd pair
  g.constants.assign(5, std::vector<SparseVec<int>>(5));
  auto set = [&](int s, int u, SparseVec<int> v) {
    Rational sign =
        (g.parities[std::size_t(s)] && g.parities[std::size_t(u)]) ? 1 : -1;
    g.constants[std::size_t(s)][std::size_t(u)] = v;
    if (s != u) g.constants[std::size_t(u)][std::size_t(s)] = v.scaled(sign);
  };
  set(E, F, SparseVec<int>::unit(H));                // [e,f] = h
  set(H, E, SparseVec<int>::unit(E, Rational(2)));   // [h,e] = 2e
  set(H, F, SparseVec<int>::unit(F, Rational(-2)));  // [h,f] = -2f
  set(H, X, SparseVec<int>::unit(X));                // [h,E] = E
  set(H, Y, SparseVec<int>::unit(Y, Rational(-1)));  // [h,F] = -F
  set(E, Y, SparseVec<int>::unit(X));                // [e,F] = E
  set(F, X, SparseVec<int>::unit(Y));                // [f,E] = F
  set(X, X, SparseVec<int>::unit(E, Rational(-2)));  // [E,E] = -2e
  set(Y, Y, SparseVec<int>::unit(F, Rational(2)));   // [F,F] = 2f
  set(X, Y, SparseVec<int>::unit(H));                // [E,F] = h
  validate_gspec(g);
  return g;
}

GSpec gspec_by_name(const std::string& name) {
  if (name == "sl2") return builtin_sl2();
  if (name == "osp12" || name == "osp(1|2)") return builtin_osp12();
  if (!name.empty() && name.front() == '@') {
    return load_gspec_from_file(name.substr(1));
  }
  throw ParseError("unknown g-spec '" + name +
                   "' (use sl2, osp12, or @path.json)");
}

}  // namespace savlie
