// savlie: exact-arithmetic workbench for the super affine-Virasoro algebra.
//
// Subcommands: verify, cohomology, module, filtration, lemma22, dbar.
// Exit codes: 0 all checks pass, 1 a verified check failed, 2 usage or
// input errors.

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "savlie/cohomology.hpp"
#include "savlie/filtration.hpp"
#include "savlie/operators.hpp"
#include "savlie/report.hpp"
#include "savlie/tensor_module.hpp"

namespace {

using namespace savlie;

struct CommonFlags {
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", flags.out_path, "write the report to a file");
  cmd->add_option("--seed", flags.seed, "seed recorded for randomized sweeps");
}

int emit(const RunReport& report, const CommonFlags& flags, int fail_code) {
  std::string text =
      flags.format == "json" ? report.to_json() : report.to_text();
  if (!flags.out_path.empty()) {
    std::ofstream out(flags.out_path);
    out << text;
  } else {
    std::cout << text;
  }
  return report.all_passed() ? 0 : fail_code;
}

std::shared_ptr<const Algebra> make_algebra(const std::string& variant,
                                            const std::string& g_name) {
  auto tag = variant_from_name(variant);
  if (!tag) throw ParseError("unknown variant '" + variant + "'");
  std::shared_ptr<const GSpec> g;
  if (variant_has_g(*tag)) {
    g = std::make_shared<GSpec>(gspec_by_name(g_name));
  }
  return std::make_shared<Algebra>(*tag, g);
}

int cmd_verify(const std::string& variant, const std::string& g_name,
               int window, int max_k, const CommonFlags& flags) {
  if (window < 1) throw ParseError("window must be >= 1");
  auto alg = make_algebra(variant, g_name);

  RunReport report;
  report.command = "verify";
  report.config = {{"variant", variant}, {"window", std::to_string(window)}};
  if (alg->g() != nullptr) report.config["g"] = alg->g()->name;
  report.seed = flags.seed;
  report.conventions = convention_notes();

  report.add(Suite::from_sweep(
      verify_jacobi(*alg, window),
      "super Jacobi identity on all windowed basis triples"));
  report.add(Suite::from_sweep(verify_super_antisymmetry(*alg, window),
                               "graded antisymmetry of the bracket"));
  report.add(
      Suite::from_sweep(verify_degree_parity_additivity(*alg, window),
                        "brackets respect the degree and parity grading"));
  if (alg->tag() == VariantTag::LHat) {
    report.add(Suite::from_sweep(verify_center_central(*alg, window),
                                 "C is central"));
    Algebra centerless(VariantTag::L, alg->g_ptr());
    report.add(Suite::from_sweep(
        verify_central_extension_consistency(*alg, centerless, window),
        "dropping central terms recovers the centerless bracket"));
  }
  if (alg->g() != nullptr) {
    Algebra l(VariantTag::L, alg->g_ptr());
    report.add(Suite::from_sweep(lemma22_sweep(l, 3, std::min(window, 3)),
                                 "closed-form brackets of (t-1)-shifted "
                                 "elements against first principles"));
    report.add(Suite::from_sweep(verify_filtration_laws(l, max_k, window),
                                 "filtration chain, ideal and step laws"));
  } else {
    report.add(Suite::from_sweep(lemma22_sweep(*alg, 3, std::min(window, 3)),
                                 "closed-form brackets of (t-1)-shifted "
                                 "elements against first principles"));
  }
  if (alg->g() != nullptr && !alg->g()->perfect) {
    report.conventions.push_back("warning: the supplied g is not perfect");
  }
  return emit(report, flags, 1);
}

int cmd_cohomology(const std::string& variant, const std::string& g_name,
                   int window, const CommonFlags& flags) {
  auto alg = make_algebra(variant, g_name);
  CocycleSolution sol = solve_h2(*alg, window);

  RunReport report;
  report.command = "cohomology";
  report.config = {{"variant", variant}, {"window", std::to_string(window)}};
  if (alg->g() != nullptr) report.config["g"] = alg->g()->name;
  report.seed = flags.seed;
  report.conventions = convention_notes();

  Suite dims;
  dims.name = "h2-dimension";
  dims.anchor = "dimension of the degree-zero second cohomology";
  dims.passed = sol.window_stable;
  dims.cases_checked = 1;
  dims.certified_window = window;
  dims.extras["h2_dimension"] = std::to_string(sol.h2_dimension);
  dims.extras["z_dimension"] = std::to_string(sol.z_dimension);
  dims.extras["b_dimension"] = std::to_string(sol.b_dimension);
  dims.extras["stability_window"] = std::to_string(window + 1);
  dims.extras["stable"] = sol.window_stable ? "yes" : "no";
  dims.notes = sol.notes;
  if (!sol.window_stable) {
    dims.witnesses.push_back("window-unstable dimension; enlarge the window");
  }
  report.add(dims);

  for (std::size_t r = 0; r < sol.representatives.size(); ++r) {
    Suite rep;
    rep.name = "representative-" + std::to_string(r);
    rep.anchor = "canonical cocycle representative";
    rep.certified_window = window;
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : sol.representatives[r]) {
      if (!first) os << "; ";
      os << pair_to_string(sol.unknowns.pairs[std::size_t(idx)]) << " = "
         << rational_to_string(c);
      first = false;
    }
    rep.extras["entries"] = os.str();

    SweepReport axioms =
        verify_cocycle(sol.representative_table(r), *alg, window + 2);
    rep.passed = axioms.passed;
    rep.cases_checked = axioms.cases_checked;
    for (const auto& w : axioms.witnesses) rep.witnesses.push_back(w);
    report.add(rep);
  }
  return emit(report, flags, 1);
}

int cmd_module(const std::string& lambda_str, const std::string& v_name,
               const std::string& g_name, int window, int guard,
               bool check_omega, bool check_annihilators, bool probe,
               const std::string& sample_mode, long sample_count,
               const CommonFlags& flags) {
  if (window < 1) throw ParseError("window must be >= 1");
  Rational lambda = rational_from_string(lambda_str);
  auto alg = make_algebra("l", g_name);
  QuotientTable quotient = quotient_a0_table(*alg, 4);
  VSpec vspec = vspec_by_name(v_name, quotient);  // throws on rep violations
  TensorModule mod(alg, lambda, vspec);

  RunReport report;
  report.command = "module";
  report.config = {{"lambda", lambda_str},
                   {"v", vspec.name},
                   {"g", alg->g()->name},
                   {"window", std::to_string(window)},
                   {"guard", std::to_string(guard)}};
  report.seed = flags.seed;
  report.conventions = convention_notes();

  SampleSpec sample = SampleSpec::everything();
  if (sample_mode == "random") {
    sample = SampleSpec::random(flags.seed, sample_count);
  }
  report.add(Suite::from_sweep(
      verify_module_axioms(mod, window, guard, sample),
      "module super-commutator and polynomial-action laws"));

  {
    WeightReport wr = weight_report(mod, window);
    Suite s;
    s.name = "weight-report";
    s.anchor = "weight slice dimensions and uniform boundedness";
    s.certified_window = window;
    s.cases_checked = long(wr.support_offsets.size());
    s.passed = wr.bounded && wr.weight_action_diagonal;
    std::ostringstream os;
    for (std::size_t i = 0; i < wr.slice_dimensions.size(); ++i) {
      if (i) os << ",";
      os << wr.slice_dimensions[i];
    }
    s.extras["slice_dimensions"] = os.str();
    s.extras["bounded"] = wr.bounded ? "yes" : "no";
    s.extras["weight_diagonal"] = wr.weight_action_diagonal ? "yes" : "no";
    if (!s.passed) s.witnesses.push_back("weight grading defect");
    report.add(s);
  }

  std::optional<int> minimal_m;
  if (check_omega || check_annihilators) {
    AnnihilatorSearch search =
        minimal_annihilating_m(mod, -2, 2, -2, 2, window);
    Suite s;
    s.name = "differentiator-search";
    s.anchor = "alternating-binomial quadratic operators annihilate the "
               "module from the minimal order on";
    s.certified_window = window;
    s.cases_checked = search.limit + 1;
    s.passed = search.minimal_m.has_value();
    if (search.minimal_m) {
      s.extras["minimal_m"] = std::to_string(*search.minimal_m);
      minimal_m = *search.minimal_m;
    } else {
      s.witnesses.push_back("no annihilating order found up to limit " +
                            std::to_string(search.limit));
    }
    for (const auto& w : search.witnesses) s.notes.push_back(w);
    report.add(s);
  }
  if (check_annihilators) {
    int m = minimal_m ? *minimal_m + 2 : 4;
    Suite s = Suite::from_sweep(
        verify_loop_annihilators(mod, m, std::min(window, 2)),
        "loop-atom annihilator families at the shifted order");
    s.extras["m"] = std::to_string(m);
    report.add(s);
  }
  if (probe) {
    std::vector<ModuleVec> gens = {ModuleVec::unit(MKey{0, 0, 0})};
    SubmoduleProbe pr = submodule_probe(mod, window, gens);
    Suite s;
    s.name = "submodule-probe";
    s.anchor = "windowed action closure of a cyclic generator";
    s.certified_window = window;
    s.cases_checked = long(pr.span_dimension);
    s.passed = true;  // informational: only non-properness is conclusive
    s.extras["span_dimension"] = std::to_string(pr.span_dimension);
    s.extras["full_dimension"] = std::to_string(pr.full_dimension);
    s.extras["proper_in_window"] = pr.proper_in_window ? "yes" : "no";
    s.notes = pr.notes;
    report.add(s);
  }
  return emit(report, flags, 1);
}

int cmd_filtration(const std::string& g_name, int max_k, int window,
                   const CommonFlags& flags) {
  auto alg = make_algebra("l", g_name);

  RunReport report;
  report.command = "filtration";
  report.config = {{"g", alg->g()->name},
                   {"max_k", std::to_string(max_k)},
                   {"window", std::to_string(window)}};
  report.seed = flags.seed;
  report.conventions = convention_notes();

  report.add(Suite::from_sweep(verify_filtration_laws(*alg, max_k, window),
                               "filtration chain, ideal and step laws"));

  QuotientTable mdelta = quotient_mdelta_table(*alg, window);
  Suite md = Suite::from_sweep(match_gl11_invariants(mdelta),
                               "the depth-one Witt quotient has the gl(1,1) "
                               "invariants");
  for (std::size_t a = 0; a < std::size_t(mdelta.dim()); ++a) {
    for (std::size_t b = a; b < std::size_t(mdelta.dim()); ++b) {
      if (mdelta.constants[a][b].empty()) continue;
      std::ostringstream os;
      bool first = true;
      for (const auto& [z, c] : mdelta.constants[a][b]) {
        if (!first) os << " + ";
        os << rational_to_string(c) << "*" << mdelta.gen_names[std::size_t(z)];
        first = false;
      }
      md.extras["[" + mdelta.gen_names[a] + "," + mdelta.gen_names[b] + "]"] =
          os.str();
    }
  }
  report.add(md);

  QuotientTable a0 = quotient_a0_table(*alg, window);
  Suite split;
  split.name = "a0-quotient-split";
  split.anchor = "the depth-zero quotient splits as gl(1,1) plus g";
  split.certified_window = window;
  split.passed = a0.jacobi_ok;
  split.cases_checked = a0.dim() * a0.dim();
  split.extras["dimension"] = std::to_string(a0.dim());
  bool cross_zero = true;
  for (int a = 0; a < 4; ++a) {
    for (int b = 4; b < a0.dim(); ++b) {
      if (!a0.constants[std::size_t(a)][std::size_t(b)].empty() ||
          !a0.constants[std::size_t(b)][std::size_t(a)].empty()) {
        cross_zero = false;
        split.witnesses.push_back("cross bracket [" + a0.gen_names[std::size_t(a)] +
                                  ", " + a0.gen_names[std::size_t(b)] +
                                  "] is nonzero in the quotient");
      }
    }
  }
  bool g_matches = true;
  for (int a = 4; a < a0.dim(); ++a) {
    for (int b = 4; b < a0.dim(); ++b) {
      SparseVec<int> want;
      for (const auto& [z, c] :
           alg->g()->bracket(a - 4, b - 4)) {
        want.add_term(z + 4, c);
      }
      if (!(a0.constants[std::size_t(a)][std::size_t(b)] == want)) {
        g_matches = false;
        split.witnesses.push_back("g-part bracket [" +
                                  a0.gen_names[std::size_t(a)] + ", " +
                                  a0.gen_names[std::size_t(b)] +
                                  "] differs from the structure constants");
      }
    }
  }
  split.extras["cross_brackets_vanish"] = cross_zero ? "yes" : "no";
  split.extras["g_part_matches"] = g_matches ? "yes" : "no";
  split.passed = split.passed && cross_zero && g_matches;
  report.add(split);

  return emit(report, flags, 1);
}

int cmd_lemma22(const std::string& g_name, int kmax, int imax,
                const CommonFlags& flags) {
  auto alg = make_algebra("l", g_name);
  RunReport report;
  report.command = "lemma22";
  report.config = {{"g", alg->g()->name},
                   {"kmax", std::to_string(kmax)},
                   {"imax", std::to_string(imax)}};
  report.seed = flags.seed;
  report.conventions = convention_notes();
  report.add(Suite::from_sweep(lemma22_sweep(*alg, kmax, imax),
                               "closed-form brackets of (t-1)-shifted "
                               "elements against first principles"));
  return emit(report, flags, 1);
}

int cmd_dbar(const std::string& g_name, int range, const CommonFlags& flags) {
  auto alg = make_algebra("l-hat", g_name);
  DbarReport dr = dbar_bracket_check(*alg, range);

  RunReport report;
  report.command = "dbar";
  report.config = {{"g", alg->g()->name}, {"range", std::to_string(range)}};
  report.seed = flags.seed;
  report.conventions = convention_notes();

  Suite s;
  s.name = "dbar-virasoro";
  s.anchor = "shifted generators close a Virasoro subalgebra with an odd "
             "cubic central coefficient";
  s.certified_window = range;
  s.cases_checked = dr.cases_checked;
  s.passed = dr.noncentral_matches && dr.central_is_odd_cubic;
  s.extras["cubic_coeff"] = rational_to_string(dr.cubic_coeff);
  s.extras["linear_coeff"] = rational_to_string(dr.linear_coeff);
  s.witnesses = dr.witnesses;
  s.notes = dr.notes;
  report.add(s);
  return emit(report, flags, 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for the super affine-Virasoro "
               "algebra and its tensor modules"};
  app.require_subcommand(1);

  CommonFlags flags;

  // verify
  auto* verify = app.add_subcommand(
      "verify", "bracket-table verification suites (Jacobi, antisymmetry, "
                "gradings, shifted-basis relations, filtration laws)");
  std::string v_variant = "l-hat", v_g = "sl2";
  int v_window = 4, v_maxk = 3;
  verify->add_option("--variant", v_variant, "frak-w|w-super|frak-l|l|l-hat");
  verify->add_option("--g", v_g, "sl2|osp12|@file.json");
  verify->add_option("--window", v_window, "degree window");
  verify->add_option("--max-k", v_maxk, "largest filtration level checked");
  add_common(verify, flags);

  // cohomology
  auto* coh = app.add_subcommand(
      "cohomology", "degree-zero second cohomology of a centerless variant");
  std::string c_variant = "l", c_g = "sl2";
  int c_window = 4;
  coh->add_option("--variant", c_variant, "frak-w|w-super|frak-l|l");
  coh->add_option("--g", c_g, "sl2|osp12|@file.json");
  coh->add_option("--window", c_window, "degree window (>= 3)");
  add_common(coh, flags);

  // module
  auto* mod = app.add_subcommand(
      "module", "build a tensor module and run its verification suites");
  std::string m_lambda = "1/2", m_v = "trivial", m_g = "sl2";
  int m_window = 3, m_guard = 2;
  bool m_omega = false, m_ann = false, m_probe = false;
  std::string m_sample = "all";
  long m_count = 2000;
  mod->add_option("--lambda", m_lambda, "weight, a rational p/q");
  mod->add_option("--v", m_v, "trivial|gl11|adjoint-sl2|@file.json");
  mod->add_option("--g", m_g, "sl2|osp12|@file.json");
  mod->add_option("--window", m_window, "degree window");
  mod->add_option("--guard", m_guard, "extra key margin for the sweeps");
  mod->add_flag("--check-omega", m_omega, "search the minimal annihilating order");
  mod->add_flag("--check-annihilators", m_ann,
                "verify the loop annihilator families");
  mod->add_flag("--probe", m_probe, "windowed submodule probe from t^0 v0");
  mod->add_option("--sample", m_sample, "all|random")
      ->check(CLI::IsMember({"all", "random"}));
  mod->add_option("--count", m_count, "sample count when --sample random");
  add_common(mod, flags);

  // filtration
  auto* filt = app.add_subcommand(
      "filtration", "filtration laws and the quotient structure tables");
  std::string f_g = "sl2";
  int f_maxk = 3, f_window = 6;
  filt->add_option("--g", f_g, "sl2|osp12|@file.json");
  filt->add_option("--max-k", f_maxk, "largest filtration level checked");
  filt->add_option("--window", f_window, "degree window");
  add_common(filt, flags);

  // lemma22
  auto* l22 = app.add_subcommand(
      "lemma22", "closed-form (t-1)-shifted bracket relations");
  std::string l_g = "sl2";
  int l_kmax = 3, l_imax = 3;
  l22->add_option("--g", l_g, "sl2|osp12|@file.json");
  l22->add_option("--kmax", l_kmax, "largest (t-1) power");
  l22->add_option("--imax", l_imax, "largest |degree|");
  add_common(l22, flags);

  // dbar
  auto* db = app.add_subcommand(
      "dbar", "shifted Virasoro generators and their central cubic");
  std::string d_g = "sl2";
  int d_range = 6;
  db->add_option("--g", d_g, "sl2|osp12|@file.json");
  db->add_option("--range", d_range, "largest |index|");
  add_common(db, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(v_variant, v_g, v_window, v_maxk, flags);
    if (*coh) return cmd_cohomology(c_variant, c_g, c_window, flags);
    if (*mod) {
      return cmd_module(m_lambda, m_v, m_g, m_window, m_guard, m_omega, m_ann,
                        m_probe, m_sample, m_count, flags);
    }
    if (*filt) return cmd_filtration(f_g, f_maxk, f_window, flags);
    if (*l22) return cmd_lemma22(l_g, l_kmax, l_imax, flags);
    if (*db) return cmd_dbar(d_g, d_range, flags);
  } catch (const savlie::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const savlie::RepViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const savlie::JacobiViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const savlie::IllegalVariant& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const savlie::IllegalFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
