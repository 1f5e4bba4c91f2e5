#include "savlie/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace savlie {

std::string pair_to_string(const AtomPair& p) {
  return "(" + to_string(p.first) + ", " + to_string(p.second) + ")";
}

std::pair<int, Rational> CocycleUnknowns::locate(const Algebra& alg,
                                                 const BasisVector& a,
                                                 const BasisVector& b) const {
  if ((alg.parity_of(a) + alg.parity_of(b)) % 2 != 0) return {-1, Rational(0)};
  if (a == b && alg.parity_of(a) == 0) return {-1, Rational(0)};
  AtomPair key = a <= b ? AtomPair{a, b} : AtomPair{b, a};
  auto it = index.find(key);
  if (it == index.end()) return {-1, Rational(0)};
  Rational sign(1);
  if (b < a) sign = (alg.parity_of(a) && alg.parity_of(b)) ? 1 : -1;
  return {it->second, sign};
}

CocycleUnknowns enumerate_unknowns(const Algebra& alg, int window) {
  CocycleUnknowns u;
  u.window = window;
  auto push = [&](BasisVector a, BasisVector b) {
    if ((alg.parity_of(a) + alg.parity_of(b)) % 2 != 0) return;
    if (a == b && alg.parity_of(a) == 0) return;
    AtomPair key = a <= b ? AtomPair{a, b} : AtomPair{b, a};
    if (u.index.count(key)) return;
    u.index[key] = int(u.pairs.size());
    u.pairs.push_back(key);
  };
  for (int n = 0; n <= window; ++n) {
    std::vector<BasisVector> top = alg.atoms_of_degree(n);
    std::vector<BasisVector> bot = alg.atoms_of_degree(-n);
    for (std::size_t i = 0; i < top.size(); ++i) {
      for (std::size_t j = (n == 0 ? i : 0); j < bot.size(); ++j) {
        push(top[i], bot[j]);
      }
    }
  }
  return u;
}

AlphaTable AlphaTable::from_entries(std::map<AtomPair, Rational> entries) {
  AlphaTable t;
  t.entries_ = std::move(entries);
  return t;
}

AlphaTable AlphaTable::from_eval(Eval eval) {
  AlphaTable t;
  t.eval_ = std::move(eval);
  return t;
}

namespace {

Rational closed_form_eval(bool central_on_gg, const Algebra& alg,
                          const BasisVector& a, const BasisVector& b) {
  // Orientation: reduce to the canonical family order and flip the sign.
  if (a.family > b.family) {
    Rational sign = (alg.parity_of(a) && alg.parity_of(b)) ? 1 : -1;
    return sign * closed_form_eval(central_on_gg, alg, b, a);
  }
  const int i = a.degree, j = b.degree;
  if (i + j != 0) return Rational(0);
  if (a.family == Family::D && b.family == Family::H) {
    return Rational(-long(i) * i);
  }
  if (a.family == Family::H && b.family == Family::H) {
    return Rational(2 * long(i));
  }
  if (!central_on_gg && a.family == Family::Q && b.family == Family::G) {
    return Rational(-long(i) * i);
  }
  if (central_on_gg && a.family == Family::G && b.family == Family::G) {
    return Rational(-long(i) * i);
  }
  return Rational(0);
}

}  // namespace

AlphaTable AlphaTable::closed_form() {
  return from_eval([](const Algebra& alg, const BasisVector& a,
                      const BasisVector& b) {
    return closed_form_eval(false, alg, a, b);
  });
}

AlphaTable AlphaTable::closed_form_gg_misreading() {
  return from_eval([](const Algebra& alg, const BasisVector& a,
                      const BasisVector& b) {
    return closed_form_eval(true, alg, a, b);
  });
}

Rational AlphaTable::eval(const Algebra& alg, const BasisVector& a,
                          const BasisVector& b) const {
  if (eval_) return eval_(alg, a, b);
  if ((alg.parity_of(a) + alg.parity_of(b)) % 2 != 0) return Rational(0);
  if (a <= b) {
    auto it = entries_.find(AtomPair{a, b});
    return it == entries_.end() ? Rational(0) : it->second;
  }
  auto it = entries_.find(AtomPair{b, a});
  if (it == entries_.end()) return Rational(0);
  Rational sign = (alg.parity_of(a) && alg.parity_of(b)) ? 1 : -1;
  return sign * it->second;
}

CocycleSystem build_cocycle_system(const Algebra& alg, int window) {
  if (!variant_is_centerless(alg.tag())) {
    throw IllegalVariant(
        "central extensions are computed for centerless variants only");
  }
  CocycleSystem sys;
  sys.unknowns = enumerate_unknowns(alg, window);

  std::vector<BasisVector> atoms;
  for (int n = -window; n <= window; ++n) {
    for (const BasisVector& v : alg.atoms_of_degree(n)) atoms.push_back(v);
  }
  std::sort(atoms.begin(), atoms.end());
  std::vector<int> par(atoms.size());
  for (std::size_t k = 0; k < atoms.size(); ++k)
    par[k] = alg.parity_of(atoms[k]);

  auto add_pair_terms = [&](SparseVec<int>& row, const BasisVector& x,
                            const AlgElement& w, const Rational& scale) {
    for (const auto& [v, c] : w) {
      auto [idx, sign] = sys.unknowns.locate(alg, x, v);
      if (idx >= 0) row.add_term(idx, scale * sign * c);
    }
  };

  // Sorted triples suffice: with antisymmetry built into the unknowns, the
  // cocycle defect is super-alternating in (x,y,z).
  for (std::size_t ia = 0; ia < atoms.size(); ++ia) {
    const BasisVector& x = atoms[ia];
    for (std::size_t ib = ia; ib < atoms.size(); ++ib) {
      const BasisVector& y = atoms[ib];
      AlgElement xy = alg.bracket_basis(x, y);
      for (std::size_t ic = ib; ic < atoms.size(); ++ic) {
        const BasisVector& z = atoms[ic];
        if (x.degree + y.degree + z.degree != 0) continue;
        if ((par[ia] + par[ib] + par[ic]) % 2 != 0) continue;
        // alpha(x,[y,z]) - alpha([x,y],z) - (-1)^{|x||y|} alpha(y,[x,z]) = 0
        SparseVec<int> row;
        add_pair_terms(row, x, alg.bracket_basis(y, z), Rational(1));
        for (const auto& [v, c] : xy) {
          auto [idx, sign] = sys.unknowns.locate(alg, v, z);
          if (idx >= 0) row.add_term(idx, Rational(-1) * sign * c);
        }
        Rational s = (par[ia] && par[ib]) ? 1 : -1;
        add_pair_terms(row, y, alg.bracket_basis(x, z), s);
        if (row.empty()) continue;
        ++sys.equations_generated;
        sys.equations.insert(std::move(row));
      }
    }
  }
  return sys;
}

namespace {

// Coboundary vector of the linear functional dual to the degree-zero atom u:
// beta_u(pair) = coefficient of u in the bracket of the pair.
SparseVec<int> coboundary_vector(const Algebra& alg,
                                 const CocycleUnknowns& unknowns,
                                 const BasisVector& u) {
  SparseVec<int> beta;
  for (std::size_t k = 0; k < unknowns.pairs.size(); ++k) {
    const auto& [a, b] = unknowns.pairs[k];
    AlgElement br = alg.bracket_basis(a, b);
    const Rational* c = br.find(u);
    if (c != nullptr) beta.add_term(int(k), *c);
  }
  return beta;
}

struct GaugeCondition {
  std::string name;
  SparseVec<int> functional;  // over unknown indices
};

std::vector<GaugeCondition> gauge_conditions(const Algebra& alg,
                                             const CocycleUnknowns& unknowns) {
  std::vector<GaugeCondition> conds;
  auto idx_of = [&](const BasisVector& a,
                    const BasisVector& b) -> std::optional<int> {
    auto [idx, sign] = unknowns.locate(alg, a, b);
    if (idx < 0) return std::nullopt;
    return idx;
  };
  if (alg.allows(Family::D)) {
    if (auto i = idx_of(BasisVector::d(1), BasisVector::d(-1))) {
      conds.push_back({"alpha(d1,d-1)=0", SparseVec<int>::unit(*i)});
    }
  }
  if (alg.allows(Family::H)) {
    auto i1 = idx_of(BasisVector::d(1), BasisVector::h(-1));
    auto i2 = idx_of(BasisVector::d(-1), BasisVector::h(1));
    if (i1 && i2) {
      SparseVec<int> f = SparseVec<int>::unit(*i1);
      f.add_term(*i2, Rational(-1));
      conds.push_back({"alpha(d1,h-1)=alpha(d-1,h1)", std::move(f)});
    }
  }
  if (alg.allows(Family::EV)) {
    for (int s = 0; s < alg.g()->dim(); ++s) {
      if (alg.g()->parity(s) == 0) {
        if (auto i = idx_of(BasisVector::d(1), BasisVector::ev(s, -1))) {
          conds.push_back({"alpha(d1," + alg.g()->basis_names[std::size_t(s)] +
                               "(x)t^-1)=0",
                           SparseVec<int>::unit(*i)});
        }
      } else {
        if (auto i = idx_of(BasisVector::d(1), BasisVector::od(s, -1))) {
          conds.push_back({"alpha(d1," + alg.g()->basis_names[std::size_t(s)] +
                               "(x)t^-1 xi)=0",
                           SparseVec<int>::unit(*i)});
        }
      }
    }
  }
  return conds;
}

Rational apply_functional(const SparseVec<int>& f, const SparseVec<int>& v) {
  Rational out(0);
  for (const auto& [k, c] : f) out += c * v.coeff(k);
  return out;
}

}  // namespace

AlphaTable CocycleSolution::representative_table(std::size_t idx) const {
  std::map<AtomPair, Rational> entries;
  for (const auto& [k, c] : representatives[idx]) {
    entries[unknowns.pairs[std::size_t(k)]] = c;
  }
  return AlphaTable::from_entries(std::move(entries));
}

CocycleSolution solve_h2(const Algebra& alg, int window) {
  if (window < 3) {
    throw std::invalid_argument(
        "cocycle window must be >= 3; smaller systems under-determine the "
        "answer");
  }

  auto dims_at = [&](int w, CocycleSystem* keep)
      -> std::tuple<int, int, int, std::vector<SparseVec<int>>,
                    std::vector<SparseVec<int>>> {
    CocycleSystem sys = build_cocycle_system(alg, w);
    RationalMatrix m(0, sys.unknowns.pairs.size());
    for (const auto& [lead, row] : sys.equations.rows()) m.append_row(row);
    std::vector<SparseVec<int>> z = nullspace_basis(m);

    std::vector<SparseVec<int>> b;
    for (const BasisVector& u : alg.atoms_of_degree(0)) {
      SparseVec<int> beta = coboundary_vector(alg, sys.unknowns, u);
      if (!beta.empty()) b.push_back(std::move(beta));
    }
    // dim H^2 via the exact quotient; also certifies B inside Z.
    int h2 = int(quotient_dimension(z, b));
    IncrementalEchelon bech;
    for (const auto& v : b) bech.insert(v);
    if (keep != nullptr) *keep = std::move(sys);
    return {h2, int(z.size()), int(bech.rank()), std::move(z), std::move(b)};
  };

  CocycleSystem sys;
  auto [h2, zdim, bdim, z, b] = dims_at(window, &sys);
  auto [h2_next, zn, bn, z2, b2] = dims_at(window + 1, nullptr);

  CocycleSolution sol;
  sol.h2_dimension = h2;
  sol.window = window;
  sol.window_stable = (h2 == h2_next);
  sol.z_dimension = zdim;
  sol.b_dimension = bdim;
  sol.unknowns = sys.unknowns;
  if (!sol.window_stable) {
    sol.notes.push_back("window instability: h2 = " + std::to_string(h2) +
                        " at window " + std::to_string(window) + " but " +
                        std::to_string(h2_next) + " at window " +
                        std::to_string(window + 1));
  }

  // Canonical gauge: solve for the coboundary combination that makes each
  // nullspace vector satisfy the gauge conditions, then echelonize.
  std::vector<GaugeCondition> conds = gauge_conditions(alg, sys.unknowns);
  IncrementalEchelon bech;
  for (const auto& v : b) bech.insert(v);
  std::vector<SparseVec<int>> bbasis;
  for (const auto& [lead, row] : bech.rows()) bbasis.push_back(row);

  bool gauge_ok = bbasis.size() <= conds.size();
  std::vector<SparseVec<int>> canonical;
  if (gauge_ok) {
    RationalMatrix m(conds.size(), bbasis.size());
    for (std::size_t i = 0; i < conds.size(); ++i) {
      for (std::size_t j = 0; j < bbasis.size(); ++j) {
        m.at(i, j) = apply_functional(conds[i].functional, bbasis[j]);
      }
    }
    RrefResult mr = rref(m);
    if (mr.rank() != bbasis.size()) {
      gauge_ok = false;
    } else {
      for (const SparseVec<int>& zvec : z) {
        // Solve conds(z - B c) = 0 for c.
        RationalMatrix aug(conds.size(), bbasis.size() + 1);
        for (std::size_t i = 0; i < conds.size(); ++i) {
          for (std::size_t j = 0; j < bbasis.size(); ++j) {
            aug.at(i, j) = apply_functional(conds[i].functional, bbasis[j]);
          }
          aug.at(i, bbasis.size()) =
              apply_functional(conds[i].functional, zvec);
        }
        RrefResult ar = rref(aug);
        bool consistent = true;
        std::vector<Rational> c(bbasis.size(), Rational(0));
        for (std::size_t p = 0; p < ar.pivot_columns.size(); ++p) {
          if (ar.pivot_columns[p] == bbasis.size()) {
            consistent = false;
            break;
          }
          c[ar.pivot_columns[p]] = ar.matrix.at(p, bbasis.size());
        }
        if (!consistent) {
          gauge_ok = false;
          break;
        }
        SparseVec<int> fixed = zvec;
        for (std::size_t j = 0; j < bbasis.size(); ++j) {
          fixed.add_scaled(bbasis[j], -c[j]);
        }
        canonical.push_back(std::move(fixed));
      }
    }
  }
  if (!gauge_ok) {
    // Fallback: plain reduction modulo the coboundary echelon.
    canonical.clear();
    for (const SparseVec<int>& zvec : z) canonical.push_back(bech.reduce(zvec));
    sol.notes.push_back(
        "gauge conditions degenerate; representatives are echelon-reduced "
        "modulo coboundaries instead");
  }

  IncrementalEchelon reps;
  for (auto& v : canonical) reps.insert(std::move(v));
  sol.representatives = reps.canonical_rows();

  // Normalization: alpha(d1,h-1) = -1 whenever that entry is nonzero.
  auto [dh_idx, dh_sign] =
      sys.unknowns.locate(alg, BasisVector::d(1), BasisVector::h(-1));
  for (SparseVec<int>& rep : sol.representatives) {
    if (dh_idx >= 0) {
      Rational v = rep.coeff(dh_idx) * dh_sign;
      if (!is_zero(v)) {
        rep.scale_in_place(Rational(-1) / v);
        continue;
      }
    }
    // otherwise keep the echelon normalization (leading coefficient 1)
  }

  if (int(sol.representatives.size()) != h2) {
    sol.notes.push_back("representative count " +
                        std::to_string(sol.representatives.size()) +
                        " differs from h2 dimension " + std::to_string(h2));
  }
  return sol;
}

SweepReport verify_cocycle(const AlphaTable& table, const Algebra& alg,
                           int window) {
  SweepReport report;
  report.name = "cocycle-axioms";
  report.window = window;

  std::vector<BasisVector> atoms;
  for (int n = -window; n <= window; ++n) {
    for (const BasisVector& v : alg.atoms_of_degree(n)) atoms.push_back(v);
  }
  std::sort(atoms.begin(), atoms.end());

  for (const BasisVector& a : atoms) {
    for (const BasisVector& b : atoms) {
      Rational defect = table.eval(alg, a, b);
      Rational sign = (alg.parity_of(a) && alg.parity_of(b)) ? -1 : 1;
      defect += sign * table.eval(alg, b, a);
      ++report.cases_checked;
      if (!is_zero(defect)) {
        report.fail("antisymmetry fails on (" + to_string(a) + ", " +
                    to_string(b) + ")");
      }
    }
  }

  auto alpha_of = [&](const BasisVector& x, const AlgElement& w) {
    Rational out(0);
    for (const auto& [v, c] : w) out += c * table.eval(alg, x, v);
    return out;
  };

  for (std::size_t ia = 0; ia < atoms.size(); ++ia) {
    for (std::size_t ib = ia; ib < atoms.size(); ++ib) {
      AlgElement xy = alg.bracket_basis(atoms[ia], atoms[ib]);
      for (std::size_t ic = ib; ic < atoms.size(); ++ic) {
        const BasisVector& x = atoms[ia];
        const BasisVector& y = atoms[ib];
        const BasisVector& z = atoms[ic];
        Rational defect = alpha_of(x, alg.bracket_basis(y, z));
        for (const auto& [v, c] : xy) defect -= c * table.eval(alg, v, z);
        Rational s =
            (alg.parity_of(x) && alg.parity_of(y)) ? Rational(-1) : Rational(1);
        defect -= s * alpha_of(y, alg.bracket_basis(x, z));
        ++report.cases_checked;
        if (!is_zero(defect)) {
          report.fail("cocycle identity fails on (" + to_string(x) + ", " +
                      to_string(y) + ", " + to_string(z) +
                      "): defect = " + rational_to_string(defect));
        }
      }
    }
  }
  return report;
}

}  // namespace savlie
