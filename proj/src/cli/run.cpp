#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "swk/assembler.hpp"
#include "swk/cli.hpp"
#include "swk/clifford.hpp"
#include "swk/errors.hpp"
#include "swk/exalg_verify.hpp"
#include "swk/kahlerid.hpp"

namespace swk::cli {

namespace {

using json = nlohmann::ordered_json;
using Defaults = std::map<std::string, std::string>;

struct Outcome {
  json checks = json::array();
  json results = json::object();
  bool pass = true;
  std::string first_failure;

  void check(const std::string& name, const std::string& clause, bool ok, const std::string& value,
             const std::string& tolerance) {
    checks.push_back({{"name", name}, {"clause", clause}, {"pass", ok}, {"value", value}, {"tolerance", tolerance}});
    if (!ok && pass) first_failure = name;
    pass = pass && ok;
  }
  void below(const std::string& name, const std::string& clause, double value, double tol) {
    check(name, clause, value <= tol, decimal(value), decimal(tol));
  }
};

json nested(const std::map<std::string, std::string>& flat) {
  json out = json::object();
  for (const auto& [k, v] : flat) {
    auto dot = k.find('.');
    out[k.substr(0, dot)][k.substr(dot + 1)] = v;
  }
  return out;
}

std::string cstr(std::complex<double> z) { return decimal(z.real()) + (z.imag() < 0 ? "" : "+") + decimal(z.imag()) + "i"; }

json constants_json(const std::map<std::string, ConstantValue>& c) {
  json out = json::object();
  for (const auto& [k, v] : c) out[k] = {{"value", decimal(v.value)}, {"provenance", v.provenance}};
  return out;
}

json norms(const ComponentNorms& n) { return {{"sup", decimal(n.sup)}, {"l2", decimal(n.l2)}}; }

json report_json(const ResidualReport& r) {
  json eqs = json::array();
  for (const auto& e : r.equations) {
    json parts = json::object();
    for (const auto& [k, v] : e.parts) parts[k] = norms(v);
    eqs.push_back({{"name", e.name}, {"formula", e.formula}, {"total", norms(e.total)}, {"parts", parts}});
  }
  json scalars = json::object();
  for (const auto& [k, v] : r.scalars) scalars[k] = decimal(v);
  return {{"case", r.case_tag},
          {"grid", r.grid},
          {"unknowns", std::to_string(r.unknowns)},
          {"grid points", std::to_string(r.grid_points)},
          {"total", norms(r.total)},
          {"equations", eqs},
          {"d*beta path difference", decimal(r.dstar_paths_diff)},
          {"d beta path difference", decimal(r.dbeta_paths_diff)},
          {"feasible", r.feasible},
          {"infeasibility", r.infeasibility},
          {"scalars", scalars}};
}

json kw_json(const KWDiagnostics& d) {
  json h = json::array();
  for (double x : d.history) h.push_back(decimal(x));
  return {{"iterations", std::to_string(d.iterations)},
          {"cg iterations", std::to_string(d.cg_iterations)},
          {"residual sup", decimal(d.residual_sup)},
          {"residual l2", decimal(d.residual_l2)},
          {"q min", decimal(d.q_min)},
          {"q mean", decimal(d.q_mean)},
          {"positive operator", d.positive_operator},
          {"history", h}};
}

void identity_outcome(const IdentityReport& rep, Outcome& o) {
  for (const auto& c : rep.checks) o.check(c.name, rep.suite, c.pass, c.pass ? "exact" : c.detail, "0");
}

KWOptions solver_options(const RunConfig& c) {
  KWOptions k;
  k.tolerance = c.real("solver.tolerance");
  k.max_iterations = c.integer("solver.max_iterations");
  k.max_cg_iterations = c.integer("solver.max_cg_iterations");
  k.initial = c.str("solver.initial");
  return k;
}

void add_solver_defaults(Defaults& d, const std::string& tol) {
  d["solver.tolerance"] = tol;
  d["solver.max_iterations"] = "50";
  d["solver.max_cg_iterations"] = "500";
  d["solver.initial"] = "balance";
  d["output.dump"] = "";
}

bool is_reduced(const std::string& c) { return c == "sigma-c2" || c == "5d-reduced"; }

Defaults assemble_defaults(const std::string& c) {
  Defaults d;
  d["run.case"] = c;
  if (is_reduced(c)) {
    d["reduced.variant"] = c == "sigma-c2" ? "phi" : "1";
    d["reduced.density"] = "theta";
    d["reduced.degree"] = "1";
    d["reduced.g_amplitude"] = "1";
    d["reduced.g_offset"] = "0";
    d["grid.samples"] = "128";
    d["constants.constant"] = "2";
    d["constants.free_constant"] = "0";
    d["report.tolerance"] = "1e-8";
    add_solver_defaults(d, "1e-9");
    return d;
  }
  const bool eight = c == "8d" || c == "8d-perturbed";
  const bool perturbed = c == "6d-perturbed" || c == "8d-perturbed";
  if (!eight && c != "6d" && c != "6d-perturbed") throw ConfigError("unknown case: " + c);
  d["grid.kind"] = "symmetric";
  d["grid.samples"] = eight ? "12" : "16";
  d["bundle.degrees0"] = eight ? "0 0 0 0" : "0 0 0";
  if (!eight) d["bundle.degrees1"] = "0 0 0";
  d["constants.r0"] = perturbed ? "1" : "0";
  d["constants.r1"] = perturbed ? "1" : "0";
  if (eight) d["constants.a"] = "computed";
  d["report.tolerance"] = "1e-6";
  add_solver_defaults(d, "1e-10");
  return d;
}

AssembleConfig assemble_config(const RunConfig& c) {
  AssembleConfig a;
  a.case_tag = c.str("run.case");
  a.grid.kind = c.str("grid.kind");
  a.grid.samples = c.integer("grid.samples");
  a.degrees0 = c.integers("bundle.degrees0");
  if (c.has("bundle.degrees1")) a.degrees1 = c.integers("bundle.degrees1");
  a.r0 = c.real("constants.r0");
  a.r1 = c.real("constants.r1");
  if (c.has("constants.a") && c.str("constants.a") != "computed") {
    a.a_given = true;
    a.a = c.real("constants.a");
  }
  a.kw = solver_options(c);
  a.tolerance = c.real("report.tolerance");
  return a;
}

std::string read_case(const std::string& path, const std::string& flag, const std::string& fallback) {
  if (!flag.empty()) return flag;
  if (path.empty()) return fallback;
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("cannot read config " + path + ": " + e.message());
  }
  return tree.get<std::string>("run.case", fallback);
}

RunConfig resolve(const Defaults& d, const std::set<std::string>& extra, const std::string& path,
                  const std::vector<std::string>& sets) {
  RunConfig c(d, extra);
  if (!path.empty()) c.load_file(path);
  for (const auto& s : sets) c.set(s);
  return c;
}

std::vector<int> dump_dims(const Discretization& g) {
  if (auto t = dynamic_cast<const TorusGrid*>(&g)) return t->dims();
  auto s = dynamic_cast<const SymmetricProductGrid*>(&g);
  return std::vector<int>(std::size_t(s->n()), s->factor().modes());
}

void dump_tuple(const std::string& dir, const SolutionTuple& t) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  auto dims = dump_dims(*t.grid);
  write_field_dump(dir + "/re_f.swkf", dims, t.re_f);
  write_field_dump(dir + "/im_f.swkf", dims, t.im_f);
  write_field_dump(dir + "/lambda.swkf", dims, t.lambda);
  write_field_dump(dir + "/phi2.swkf", dims, t.phi2);
  if (t.dim == 6) {
    write_field_dump(dir + "/lambda_tilde.swkf", dims, t.lambda_tilde);
    write_field_dump(dir + "/psi2.swkf", dims, t.psi2);
  }
}

void assembly_outcome(const Assembly& a, Outcome& o) {
  const auto& r = a.report;
  for (const auto& e : r.equations) o.below(e.name + " residual sup", e.formula, e.total.sup, r.tolerance);
  o.below("d*beta: ansatz vs closed form", "d*beta = 2i ddbar(Re f) + Delta(Re f) omega", r.dstar_paths_diff, 1e-9);
  if (a.tuple.dim == 6)
    o.below("d beta: ansatz vs closed form", "d beta = 2i ddbar(Im f) ^ omega", r.dbeta_paths_diff, 1e-9);
  else
    o.below("(d beta)^+: projection vs closed form", "(d beta)^+ = -1/4 Delta(Im f) omega^2", r.dbeta_paths_diff, 1e-9);
  o.check("feasibility", a.tuple.dim == 6 ? "a0 < r0, a1 > -r1" : "r0 = r1 > a", r.feasible,
          r.feasible ? "feasible" : r.infeasibility, "-");
  o.results["constants"] = constants_json(a.tuple.constants);
  o.results["beta ansatz"] = a.tuple.beta_ansatz;
  json notes = json::array();
  for (const auto& n : a.tuple.bundle_notes) notes.push_back(n);
  o.results["bundles"] = notes;
  o.results["kw phi"] = kw_json(a.tuple.kw0);
  if (a.tuple.dim == 6) o.results["kw psi"] = kw_json(a.tuple.kw1);
  o.results["residual"] = report_json(r);
}

void reduced_outcome(const ReducedSolution& s, const ReducedReport& r, Outcome& o) {
  o.below("pre-split equation 1", r.eq1_formula, r.eq1_sup, r.tolerance);
  o.below("pre-split equation 2", r.eq2_formula, r.eq2_sup, r.tolerance);
  o.below("merge relation", r.merge_formula, r.merge_sup, 1e-12);
  o.results["case"] = r.which;
  o.results["constants"] = constants_json(s.constants);
  o.results["beta ansatz"] = s.beta_ansatz;
  o.results["linear-side integral"] = decimal(r.linear_integral);
  o.results["KW-side integral"] = decimal(r.kw_integral);
  o.results["kw"] = kw_json(s.kw);
  o.results["Re f mean"] = decimal(s.grid->mean(s.re_f));
  o.results["lambda mean"] = decimal(s.grid->mean(s.lambda));
}

std::pair<ReducedSolution, ReducedReport> run_reduced(const RunConfig& c) {
  const std::string cs = c.str("run.case"), v = c.str("reduced.variant");
  ReducedCase which;
  if (cs == "sigma-c2") {
    if (v != "phi" && v != "psi") throw ConfigError("reduced.variant for sigma-c2 must be phi or psi");
    which = parse_reduced_case("sigma-c2-" + v);
  } else {
    which = parse_reduced_case("5d-case" + v);
  }
  ReducedData d;
  const int N = c.integer("grid.samples");
  d.grid = TorusGrid::cube(1, N);
  const std::string dens = c.str("reduced.density");
  if (dens == "theta") {
    int deg = c.integer("reduced.degree");
    d.W = d.grid->sample([deg](const std::vector<double>& x) { return theta_density_at(deg, x[0], x[1]); });
  } else if (dens == "constant") {
    d.W = Array::Ones(Eigen::Index(d.grid->size()));
  } else {
    throw ConfigError("reduced.density must be theta or constant");
  }
  const double amp = c.real("reduced.g_amplitude"), off = c.real("reduced.g_offset");
  d.g = d.grid->sample([&](const std::vector<double>& x) {
    return amp * (std::cos(kTwoPi * x[0]) + std::sin(kTwoPi * (x[0] + 2 * x[1]))) + off;
  });
  d.constant = c.real("constants.constant");
  d.free_constant = c.real("constants.free_constant");
  d.kw = solver_options(c);
  d.tolerance = c.real("report.tolerance");
  return reduce_solve_2d(which, d);
}

int finish(const std::string& command, const RunConfig* cfg, Outcome& o, const std::string& out_path,
           std::ostream& out) {
  json rep;
  rep["command"] = command;
  rep["config"] = cfg ? nested(cfg->values()) : json::object();
  rep["status"] = o.pass ? "PASS" : "FAIL";
  rep["checks"] = o.checks;
  rep["results"] = o.results;
  for (const auto& c : o.checks)
    out << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["name"].get<std::string>() << "  ["
        << c["clause"].get<std::string>() << "]  " << c["value"].get<std::string>() << "\n";
  out << (o.pass ? "PASS" : "FAIL") << ": " << command << " (" << o.checks.size() << " checks)\n";
  if (!o.pass) out << "first failing check: " << o.first_failure << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw ConfigError("cannot write report " + out_path);
    f << rep.dump(2) << "\n";
  }
  return o.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructive solutions of Seiberg-Witten-type equations on flat tori"};
  app.require_subcommand(1);
  std::string out_path, config_path;
  std::vector<std::string> sets;

  auto* verify = app.add_subcommand("verify", "exact identity suites");
  verify->require_subcommand(1);
  int dim = 6, kn = 3, trials = 200;
  std::uint64_t seed = 1;
  auto* vc = verify->add_subcommand("clifford", "Clifford module identities");
  vc->add_option("--dim", dim, "5, 6 or 8")->required()->check(CLI::IsMember({5, 6, 8}));
  auto* vk = verify->add_subcommand("kahler", "Kahler identities for Hessian data");
  vk->add_option("--n", kn, "3 or 4")->required()->check(CLI::IsMember({3, 4}));
  vk->add_option("--trials", trials, "random rational Hessians")->check(CLI::NonNegativeNumber);
  vk->add_option("--seed", seed, "seed");
  auto* ve = verify->add_subcommand("exalg", "exterior algebra identities");

  auto* kw = app.add_subcommand("kw", "Kazdan-Warner solver");
  kw->require_subcommand(1);
  auto* kws = kw->add_subcommand("solve", "solve Delta u + W e^{kappa u} = c on a torus");

  std::string case_flag;
  auto* as = app.add_subcommand("assemble", "assemble and verify a solution");
  as->add_option("--case", case_flag, "6d | 6d-perturbed | 8d | 8d-perturbed | sigma-c2 | 5d-reduced");

  std::string t_values;
  auto* fam = app.add_subcommand("family", "beta + t theta family on a 6d tuple");
  fam->add_option("--t", t_values, "comma-separated t values");

  std::string a_val, b_val;
  auto* sc = app.add_subcommand("scale", "gauge scaling of the holomorphic data");
  sc->add_option("--a", a_val, "complex scale of phi");
  sc->add_option("--b", b_val, "complex scale of psi");

  for (auto* s : {vc, vk, ve, kws, as, fam, sc}) s->add_option("--out", out_path, "machine-readable report path");
  for (auto* s : {kws, as, fam, sc}) {
    s->add_option("--config", config_path, "INI config")->check(CLI::ExistingFile);
    s->add_option("--set", sets, "override section.key=value");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Outcome o;
    if (*vc) {
      identity_outcome(verify_clifford_suite(dim), o);
      return finish("verify clifford --dim " + std::to_string(dim), nullptr, o, out_path, out);
    }
    if (*vk) {
      identity_outcome(verify_kahler_suite(kn, trials, seed), o);
      return finish("verify kahler --n " + std::to_string(kn) + " --trials " + std::to_string(trials) + " --seed " +
                        std::to_string(seed),
                    nullptr, o, out_path, out);
    }
    if (*ve) {
      identity_outcome(verify_exalg_suite(), o);
      return finish("verify exalg", nullptr, o, out_path, out);
    }
    if (*kws) {
      Defaults d{{"grid.samples", "64"}, {"grid.n", "1"},   {"kw.density", "theta"},
                 {"kw.degree", "1"},     {"kw.kappa", "1"}, {"kw.c", "1"}};
      add_solver_defaults(d, "1e-10");
      RunConfig c = resolve(d, {}, config_path, sets);
      const int n = c.integer("grid.n");
      auto g = TorusGrid::cube(n, c.integer("grid.samples"));
      Array W;
      if (c.str("kw.density") == "theta")
        W = product_density(*g, std::vector<int>(std::size_t(n), c.integer("kw.degree")));
      else if (c.str("kw.density") == "constant")
        W = Array::Ones(Eigen::Index(g->size()));
      else
        throw ConfigError("kw.density must be theta or constant");
      KWProblem<TorusGrid> p{ScalarField(g, W), c.real("kw.kappa"), c.real("kw.c")};
      auto [u, diag] = kw_solve(p, solver_options(c));
      o.below("KW residual sup", "Delta u + W e^{kappa u} = c", diag.residual_sup, c.real("solver.tolerance"));
      o.check("Newton operator positive", "Delta + kappa W e^{kappa u} > 0", diag.positive_operator,
              diag.positive_operator ? "true" : "false", "-");
      o.results["kw"] = kw_json(diag);
      o.results["u mean"] = decimal(u.mean());
      o.results["u min"] = decimal(u.values.minCoeff());
      o.results["u max"] = decimal(u.values.maxCoeff());
      if (!c.str("output.dump").empty()) {
        std::filesystem::create_directories(c.str("output.dump"));
        write_field_dump(c.str("output.dump") + "/u.swkf", g->dims(), u.values);
      }
      return finish("kw solve", &c, o, out_path, out);
    }
    if (*as) {
      const std::string cs = read_case(config_path, case_flag, "6d-perturbed");
      RunConfig c = resolve(assemble_defaults(cs), {}, config_path, sets);
      c.set("run.case", cs);
      if (is_reduced(cs)) {
        auto [s, r] = run_reduced(c);
        reduced_outcome(s, r, o);
      } else {
        Assembly a = assemble(assemble_config(c));
        assembly_outcome(a, o);
        dump_tuple(c.str("output.dump"), a.tuple);
        out << "runtime: " << a.report.runtimes.at("total") << " s\n";
      }
      return finish("assemble --case " + cs, &c, o, out_path, out);
    }
    if (*fam) {
      const std::string cs = read_case(config_path, "", "6d-perturbed");
      RunConfig c = resolve(assemble_defaults(cs), {"family.t"}, config_path, sets);
      if (!c.has("family.t")) c.set("family.t", "0,1,10");
      if (!t_values.empty()) c.set("family.t", t_values);
      Assembly a = assemble(assemble_config(c));
      FamilyReport f = noncompact_family_sweep(a.tuple, c.reals("family.t"));
      const auto& ct = f.certificate;
      o.check("theta ^ omega = 0", "theta^{1,2} primitive", ct.theta_primitive, "exact", "0");
      o.check("c(*theta) phi = 0", "phi in the degree-0 summand", ct.star_theta_kills_phi, "exact", "0");
      o.check("c(theta) psi = 0", "psi in the (0,3) summand", ct.theta_kills_psi, "exact", "0");
      o.check("d theta = 0", "constant coefficients", ct.theta_closed, "exact", "0");
      o.check("d* theta = 0", "constant coefficients", ct.theta_coclosed, "exact", "0");
      o.below("residual drift over t", "(A, phi, B, psi, beta + t theta) solves the equations", f.max_drift, 1e-10);
      json per = json::array();
      for (std::size_t k = 0; k < f.t_values.size(); ++k)
        per.push_back({{"t", decimal(f.t_values[k])}, {"residual", report_json(f.reports[k])}});
      o.results["family"] = per;
      return finish("family", &c, o, out_path, out);
    }
    if (*sc) {
      const std::string cs = read_case(config_path, "", "6d-perturbed");
      RunConfig c = resolve(assemble_defaults(cs), {"scale.a", "scale.b"}, config_path, sets);
      if (!c.has("scale.a")) c.set("scale.a", "1");
      if (!c.has("scale.b")) c.set("scale.b", "1");
      if (!a_val.empty()) c.set("scale.a", a_val);
      if (!b_val.empty()) c.set("scale.b", b_val);
      Assembly a = assemble(assemble_config(c));
      ScaleReport s = gauge_scale_equivalence(a.tuple, c.complex("scale.a"), c.complex("scale.b"));
      o.below("gauge-invariant fields agree", "scaled data is gauge-equivalent", s.invariant_diff, 1e-10);
      o.below("Re f shift", "Re f -> Re f + 1/2 ln|a|", s.re_shift_error, 1e-12);
      o.below("Im f shift", "Im f -> Im f + 1/2 ln|b|", s.im_shift_error, 1e-12);
      o.below("unit phases", "|a/|a| e^{-i ln|b|}| = 1", s.phase_modulus_error, 1e-15);
      json diffs = json::object();
      for (const auto& [k, v] : s.field_diffs) diffs[k] = decimal(v);
      o.results["field differences"] = diffs;
      o.results["predicted Re shift"] = decimal(s.predicted_re_shift);
      o.results["predicted Im shift"] = decimal(s.predicted_im_shift);
      o.results["phase phi"] = cstr(s.phase0);
      o.results["phase psi"] = cstr(s.phase1);
      o.results["base"] = report_json(s.base);
      o.results["scaled"] = report_json(s.scaled);
      return finish("scale", &c, o, out_path, out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "FAIL: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace swk::cli
