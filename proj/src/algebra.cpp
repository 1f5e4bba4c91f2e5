#include "savlie/algebra.hpp"

#include <sstream>

namespace savlie {

std::string to_string(const AlgElement& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : e) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << rational_to_string(a) << "*";
    os << v;
    first = false;
  }
  return os.str();
}

const char* variant_name(VariantTag tag) {
  switch (tag) {
    case VariantTag::FrakW:
      return "frak-w";
    case VariantTag::WSuper:
      return "w-super";
    case VariantTag::FrakL:
      return "frak-l";
    case VariantTag::L:
      return "l";
    case VariantTag::LHat:
      return "l-hat";
  }
  return "?";
}

std::optional<VariantTag> variant_from_name(const std::string& name) {
  if (name == "frak-w") return VariantTag::FrakW;
  if (name == "w-super" || name == "w") return VariantTag::WSuper;
  if (name == "frak-l") return VariantTag::FrakL;
  if (name == "l") return VariantTag::L;
  if (name == "l-hat" || name == "lhat") return VariantTag::LHat;
  return std::nullopt;
}

bool variant_has_g(VariantTag tag) {
  return tag == VariantTag::FrakL || tag == VariantTag::L ||
         tag == VariantTag::LHat;
}

bool variant_is_centerless(VariantTag tag) { return tag != VariantTag::LHat; }

Algebra::Algebra(VariantTag tag, std::shared_ptr<const GSpec> g)
    : tag_(tag), g_(std::move(g)) {
  if (variant_has_g(tag_) && !g_) {
    throw IllegalVariant(std::string(variant_name(tag_)) +
                         " requires a g-spec");
  }
  if (!variant_has_g(tag_)) g_.reset();
}

bool Algebra::allows(Family f) const {
  switch (tag_) {
    case VariantTag::FrakW:
      return f == Family::D;
    case VariantTag::WSuper:
      return f == Family::D || f == Family::H || f == Family::Q ||
             f == Family::G;
    case VariantTag::FrakL:
      return f == Family::D || f == Family::EV || f == Family::OD;
    case VariantTag::L:
      return f != Family::CEN;
    case VariantTag::LHat:
      return true;
  }
  return false;
}

void Algebra::require_legal(const BasisVector& v) const {
  if (!allows(v.family)) {
    throw IllegalFamily("family " + std::string(family_name(v.family)) +
                        " is not part of variant " + variant_name(tag_));
  }
  if ((v.family == Family::EV || v.family == Family::OD) &&
      (v.g_index < 0 || v.g_index >= g_->dim())) {
    throw IllegalFamily("g-index out of range in " + to_string(v));
  }
}

int Algebra::parity_of(const BasisVector& v) const {
  switch (v.family) {
    case Family::D:
    case Family::H:
    case Family::CEN:
      return 0;
    case Family::Q:
    case Family::G:
      return 1;
    case Family::EV:
      return g_->parity(v.g_index);
    case Family::OD:
      return (g_->parity(v.g_index) + 1) % 2;
  }
  return 0;
}

namespace {
inline Rational central_dh(int i, int j) {
  return i + j == 0 ? Rational(-long(i) * i) : Rational(0);
}
inline Rational central_hh(int i, int j) {
  return i + j == 0 ? Rational(2 * long(i)) : Rational(0);
}
inline Rational central_qg(int i, int j) {
  return i + j == 0 ? Rational(-long(i) * i) : Rational(0);
}
}  // namespace

AlgElement Algebra::bracket_canonical(const BasisVector& a,
                                      const BasisVector& b) const {
  const int i = a.degree, j = b.degree;
  const bool central = (tag_ == VariantTag::LHat);
  AlgElement out;
  switch (a.family) {
    case Family::D:
      switch (b.family) {
        case Family::D:
          out.add_term(BasisVector::d(i + j), Rational(j - i));
          return out;
        case Family::H:
          out.add_term(BasisVector::h(i + j), Rational(j));
          if (central) out.add_term(BasisVector::cen(), central_dh(i, j));
          return out;
        case Family::Q:
          out.add_term(BasisVector::q(i + j), Rational(j));
          return out;
        case Family::G:
          out.add_term(BasisVector::g(i + j), Rational(j - i));
          return out;
        case Family::EV:
          out.add_term(BasisVector::ev(b.g_index, i + j), Rational(j));
          return out;
        case Family::OD:
          out.add_term(BasisVector::od(b.g_index, i + j), Rational(j));
          return out;
        default:
          return out;
      }
    case Family::H:
      switch (b.family) {
        case Family::H:
          if (central) out.add_term(BasisVector::cen(), central_hh(i, j));
          return out;
        case Family::Q:
          out.add_term(BasisVector::q(i + j), Rational(-1));
          return out;
        case Family::G:
          out.add_term(BasisVector::g(i + j), Rational(1));
          return out;
        case Family::OD:
          out.add_term(BasisVector::od(b.g_index, i + j), Rational(1));
          return out;
        default:
          return out;  // [h, ev] = 0
      }
    case Family::Q:
      switch (b.family) {
        case Family::G:
          out.add_term(BasisVector::d(i + j), Rational(1));
          out.add_term(BasisVector::h(i + j), Rational(i));
          if (central) out.add_term(BasisVector::cen(), central_qg(i, j));
          return out;
        case Family::OD: {
          Rational sign = g_->parity(b.g_index) ? -1 : 1;
          out.add_term(BasisVector::ev(b.g_index, i + j), sign);
          return out;
        }
        default:
          return out;  // [Q,Q] = [Q,ev] = 0
      }
    case Family::G:
      switch (b.family) {
        case Family::EV: {
          Rational sign = g_->parity(b.g_index) ? -1 : 1;
          out.add_term(BasisVector::od(b.g_index, i + j), sign * j);
          return out;
        }
        default:
          return out;  // [G,G] = [G,od] = 0
      }
    case Family::EV:
      switch (b.family) {
        case Family::EV:
          for (const auto& [z, c] : g_->bracket(a.g_index, b.g_index)) {
            out.add_term(BasisVector::ev(z, i + j), c);
          }
          return out;
        case Family::OD:
          for (const auto& [z, c] : g_->bracket(a.g_index, b.g_index)) {
            out.add_term(BasisVector::od(z, i + j), c);
          }
          return out;
        default:
          return out;
      }
    case Family::OD:
      return out;  // [od, od] = 0
    case Family::CEN:
      return out;
  }
  return out;
}

AlgElement Algebra::bracket_basis(const BasisVector& a,
                                  const BasisVector& b) const {
  if (a.family <= b.family) return bracket_canonical(a, b);
  AlgElement flipped = bracket_canonical(b, a);
  Rational sign = (parity_of(a) && parity_of(b)) ? 1 : -1;
  flipped.scale_in_place(sign);
  return flipped;
}

AlgElement Algebra::bracket(const AlgElement& a, const AlgElement& b) const {
  for (const auto& [v, c] : a) require_legal(v);
  for (const auto& [v, c] : b) require_legal(v);
  AlgElement out;
  for (const auto& [va, ca] : a) {
    for (const auto& [vb, cb] : b) {
      out.add_scaled(bracket_basis(va, vb), ca * cb);
    }
  }
  return out;
}

std::vector<BasisVector> Algebra::atoms_of_degree(int n) const {
  std::vector<BasisVector> out;
  if (allows(Family::D)) out.push_back(BasisVector::d(n));
  if (allows(Family::H)) out.push_back(BasisVector::h(n));
  if (allows(Family::Q)) out.push_back(BasisVector::q(n));
  if (allows(Family::G)) out.push_back(BasisVector::g(n));
  if (allows(Family::EV)) {
    for (int s = 0; s < g_->dim(); ++s) out.push_back(BasisVector::ev(s, n));
  }
  if (allows(Family::OD)) {
    for (int s = 0; s < g_->dim(); ++s) out.push_back(BasisVector::od(s, n));
  }
  if (n == 0 && allows(Family::CEN)) out.push_back(BasisVector::cen());
  return out;
}

namespace {

std::vector<BasisVector> atoms_in_window(const Algebra& alg, int window) {
  std::vector<BasisVector> atoms;
  for (int n = -window; n <= window; ++n) {
    for (const BasisVector& v : alg.atoms_of_degree(n)) atoms.push_back(v);
  }
  return atoms;
}

std::string triple_witness(const BasisVector& a, const BasisVector& b,
                           const BasisVector& c, const AlgElement& lhs,
                           const AlgElement& rhs) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << "): lhs = " << to_string(lhs)
     << ", rhs = " << to_string(rhs);
  return os.str();
}

}  // namespace

SweepReport verify_jacobi(const Algebra& alg, int window) {
  SweepReport report;
  report.name = "jacobi";
  report.window = window;
  std::vector<BasisVector> atoms = atoms_in_window(alg, window);
  std::vector<int> par(atoms.size());
  for (std::size_t k = 0; k < atoms.size(); ++k)
    par[k] = alg.parity_of(atoms[k]);

  for (std::size_t ia = 0; ia < atoms.size(); ++ia) {
    for (std::size_t ib = 0; ib < atoms.size(); ++ib) {
      AlgElement ab = alg.bracket_basis(atoms[ia], atoms[ib]);
      Rational sign = (par[ia] && par[ib]) ? -1 : 1;
      for (std::size_t ic = 0; ic < atoms.size(); ++ic) {
        const BasisVector& a = atoms[ia];
        const BasisVector& b = atoms[ib];
        const BasisVector& c = atoms[ic];
        // lhs = [a,[b,c]]; rhs = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]
        AlgElement lhs;
        for (const auto& [v, k] : alg.bracket_basis(b, c)) {
          lhs.add_scaled(alg.bracket_basis(a, v), k);
        }
        AlgElement rhs;
        for (const auto& [v, k] : ab) {
          rhs.add_scaled(alg.bracket_basis(v, c), k);
        }
        for (const auto& [v, k] : alg.bracket_basis(a, c)) {
          rhs.add_scaled(alg.bracket_basis(b, v), sign * k);
        }
        ++report.cases_checked;
        if (!(lhs == rhs)) {
          report.fail(triple_witness(a, b, c, lhs, rhs));
        }
      }
    }
  }
  return report;
}

SweepReport verify_super_antisymmetry(const Algebra& alg, int window) {
  SweepReport report;
  report.name = "super-antisymmetry";
  report.window = window;
  std::vector<BasisVector> atoms = atoms_in_window(alg, window);
  for (const BasisVector& a : atoms) {
    for (const BasisVector& b : atoms) {
      AlgElement defect = alg.bracket_basis(a, b);
      Rational sign = (alg.parity_of(a) && alg.parity_of(b)) ? -1 : 1;
      defect.add_scaled(alg.bracket_basis(b, a), sign);
      ++report.cases_checked;
      if (!defect.empty()) {
        std::ostringstream os;
        os << "(" << a << ", " << b << "): defect = " << to_string(defect);
        report.fail(os.str());
      }
    }
  }
  return report;
}

SweepReport verify_degree_parity_additivity(const Algebra& alg, int window) {
  SweepReport report;
  report.name = "degree-parity-additivity";
  report.window = window;
  std::vector<BasisVector> atoms = atoms_in_window(alg, window);
  for (const BasisVector& a : atoms) {
    for (const BasisVector& b : atoms) {
      AlgElement br = alg.bracket_basis(a, b);
      int want_deg = a.degree + b.degree;
      int want_par = (alg.parity_of(a) + alg.parity_of(b)) % 2;
      ++report.cases_checked;
      for (const auto& [v, c] : br) {
        if (v.degree != want_deg || alg.parity_of(v) != want_par) {
          std::ostringstream os;
          os << "(" << a << ", " << b << "): term " << v
             << " breaks additivity";
          report.fail(os.str());
        }
      }
    }
  }
  return report;
}

SweepReport verify_center_central(const Algebra& alg, int window) {
  SweepReport report;
  report.name = "center-central";
  report.window = window;
  if (alg.tag() != VariantTag::LHat) {
    report.notes.push_back("variant has no center; nothing to check");
    return report;
  }
  BasisVector c = BasisVector::cen();
  for (const BasisVector& v : atoms_in_window(alg, window)) {
    AlgElement lhs = alg.bracket_basis(c, v);
    AlgElement rhs = alg.bracket_basis(v, c);
    ++report.cases_checked;
    if (!lhs.empty() || !rhs.empty()) {
      report.fail("[C, " + to_string(v) + "] != 0");
    }
  }
  return report;
}

SweepReport verify_central_extension_consistency(const Algebra& lhat,
                                                 const Algebra& l,
                                                 int window) {
  SweepReport report;
  report.name = "central-extension-consistency";
  report.window = window;
  std::vector<BasisVector> atoms = atoms_in_window(l, window);
  for (const BasisVector& a : atoms) {
    for (const BasisVector& b : atoms) {
      AlgElement big = lhat.bracket_basis(a, b);
      AlgElement noncentral;
      for (const auto& [v, c] : big) {
        if (v.family != Family::CEN) noncentral.add_term(v, c);
      }
      ++report.cases_checked;
      if (!(noncentral == l.bracket_basis(a, b))) {
        std::ostringstream os;
        os << "(" << a << ", " << b
           << "): non-central part differs from the centerless bracket";
        report.fail(os.str());
      }
    }
  }
  return report;
}

}  // namespace savlie
