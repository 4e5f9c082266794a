#include "trigdunkl/cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "trigdunkl/bethe.hpp"
#include "trigdunkl/config.hpp"
#include "trigdunkl/errors.hpp"
#include "trigdunkl/grid_eval.hpp"

namespace trigdunkl {

namespace {

SpectralParam need_lambda(const Setting& st, const RunConfig& cfg) {
  if (cfg.lambda.empty()) throw ConfigError("this command needs \"lambda\" in the config");
  return make_spectral(st, cfg.lambda);
}

Vec need_m(const WaModule& mod, const RunConfig& cfg) {
  if (cfg.m.empty()) {
    Vec m = Vec::Zero(mod.dim);
    m(0) = 1.0;
    return m;
  }
  if (static_cast<int>(cfg.m.size()) != mod.dim)
    throw ConfigError("\"m\" has " + std::to_string(cfg.m.size()) +
                      " entries, module dimension is " + std::to_string(mod.dim));
  Vec m(mod.dim);
  for (int i = 0; i < mod.dim; ++i) m(i) = cfg.m[i];
  return m;
}

std::string cmd_info(const RunConfig& cfg) {
  Instance inst = build_instance(cfg);
  const Setting& st = *inst.st;
  json j;
  j["kind"] = std::string(1, root_kind_char(cfg.kind));
  j["rank"] = cfg.rank;
  j["dim"] = st.rs.dim;
  j["positive_roots"] = st.rs.npos;
  j["weyl_order"] = st.W.size();
  j["lattice_mode"] = lattice_mode_name(st.lat.mode);
  j["lattice_rank"] = st.lat.rank;
  j["omega_table"] = st.omega->table_size();
  j["omega_central_rank"] = st.omega->central_rank();
  json gens = json::array();
  for (const auto& g : st.omega->generators()) gens.push_back(g.name);
  j["omega_generators"] = gens;
  json classes = json::array();
  for (int c = 0; c < st.orbits.num_classes; ++c)
    classes.push_back(st.orbits.class_name(st.rs, c));
  j["classes"] = classes;
  json k = json::array();
  for (cd v : inst.mult.k_class) k.push_back(complex_json(v));
  j["k"] = k;
  j["theta_period"] = st.orbits.theta_period;
  j["module"] = inst.mod.name;
  j["module_dim"] = inst.mod.dim;
  j["module_unitary"] = inst.mod.unitary;
  return j.dump(2) + "\n";
}

std::string cmd_cocycle(const RunConfig& cfg) {
  Instance inst = build_instance(cfg);
  const Setting& st = *inst.st;
  SpectralParam lam = need_lambda(st, cfg);
  if (!cfg.raw.contains("element"))
    throw ConfigError("cocycle needs \"element\" in the config");
  AffineWeylElement g = element_from_json(st, cfg.raw.at("element"));
  GroupAlgebraElement J = j_element(st, inst.mult, g, lam);
  json j;
  j["element"] = element_to_json(st, g);
  j["terms"] = algebra_to_json(st, J);
  j["chi"] = complex_json(J.chi());
  j["scalar"] = complex_json(j_scalar(st, inst.mult, g, lam));
  return j.dump(2) + "\n";
}

std::string cmd_psi(const RunConfig& cfg) {
  Instance inst = build_instance(cfg);
  const Setting& st = *inst.st;
  SpectralParam lam = need_lambda(st, cfg);
  Vec m = need_m(inst.mod, cfg);
  PlaneWaveVector psi = psi_vector(st, inst.mult, inst.mod, lam, m);
  return pwv_to_json(psi).dump(2) + "\n";
}

PlaneWaveVector initial_vector(const Instance& inst, const RunConfig& cfg) {
  const Setting& st = *inst.st;
  SpectralParam lam = need_lambda(st, cfg);
  Vec m = need_m(inst.mod, cfg);
  std::string initial = "psi";
  if (cfg.raw.contains("initial")) initial = cfg.raw.at("initial").get<std::string>();
  if (initial == "psi") return psi_vector(st, inst.mult, inst.mod, lam, m);
  if (initial == "basis") return pw_basis(st, inst.mod, lam, 0, m);
  throw ConfigError("initial must be \"psi\" or \"basis\", got \"" + initial + "\"");
}

std::string cmd_propagate(const RunConfig& cfg, const std::string& format) {
  Instance inst = build_instance(cfg);
  const Setting& st = *inst.st;
  PlaneWaveVector g = initial_vector(inst, cfg);
  if (!cfg.raw.contains("grid"))
    throw ConfigError("propagate needs \"grid\" with lo, hi, and steps");
  const json& gj = cfg.raw.at("grid");
  GridSpec spec;
  spec.lo = gj.at("lo").get<std::vector<double>>();
  spec.hi = gj.at("hi").get<std::vector<double>>();
  spec.steps = gj.at("steps").get<std::vector<int>>();
  ChamberFunction f(st, inst.mult, inst.mod, g);
  std::vector<GridRow> rows = grid_eval(f, spec, true);
  if (format == "csv") return grid_csv(rows, st.rs.dim, inst.mod.dim);
  json arr = json::array();
  for (const GridRow& r : rows) {
    json row;
    row["x"] = r.x;
    row["chamber"] = r.chamber;
    json v = json::array();
    for (int c = 0; c < r.value.size(); ++c) v.push_back(complex_json(r.value(c)));
    row["value"] = v;
    arr.push_back(row);
  }
  return arr.dump(2) + "\n";
}

std::pair<int, std::string> cmd_check(const RunConfig& cfg) {
  Instance inst = build_instance(cfg);
  const Setting& st = *inst.st;
  std::vector<std::string> suites = {"relations", "cocycle", "invariance", "jump",
                                     "hamiltonian"};
  if (cfg.raw.contains("suites"))
    suites = cfg.raw.at("suites").get<std::vector<std::string>>();
  json out = json::array();
  bool all_pass = true;
  for (const std::string& s : suites) {
    json r;
    r["suite"] = s;
    if (s == "relations") {
      RelationReport rep = verify_relations(inst.mod, cfg.tol.verify);
      r["pass"] = rep.pass;
      r["max_residual"] = rep.max_residual;
      r["failures"] = rep.failures;
      all_pass = all_pass && rep.pass;
    } else if (s == "cocycle") {
      SpectralParam lam = need_lambda(st, cfg);
      double worst = 0.0;
      GroupAlgebraElement one = GroupAlgebraElement::of(awe_identity(st.rs.dim));
      for (int a = 0; a < st.letters.size(); ++a) {
        SpectralParam mu = transform(st, st.rs.refl[st.letters.letters[a].root], lam);
        GroupAlgebraElement prod = j_letter(st, inst.mult, a, mu).mul(
            j_letter(st, inst.mult, a, lam));
        worst = std::max(worst, prod.max_abs_diff(one));
      }
      for (int i = 0; i < st.lat.rank; ++i) {
        GroupAlgebraElement J =
            j_element(st, inst.mult, awe_translation(st.lat.basis[i]), lam);
        worst = std::max(
            worst, std::abs(J.chi() - j_translation_scalar(st, inst.mult, st.lat.basis[i],
                                                           lam)));
      }
      r["pass"] = worst <= cfg.tol.cocycle;
      r["max_residual"] = worst;
      all_pass = all_pass && worst <= cfg.tol.cocycle;
    } else if (s == "invariance") {
      SpectralParam lam = need_lambda(st, cfg);
      Vec m = need_m(inst.mod, cfg);
      PlaneWaveVector psi = psi_vector(st, inst.mult, inst.mod, lam, m);
      InvarianceResult w = w_invariance_criterion(st, inst.mult, psi, cfg.tol.invariance);
      InvarianceResult s0 = s0_invariance_criterion(st, inst.mult, psi, cfg.tol.invariance);
      r["pass"] = w.invariant;
      r["w_residual"] = w.max_residual;
      r["s0_invariant"] = s0.invariant;
      r["s0_residual"] = s0.max_residual;
      all_pass = all_pass && w.invariant;
    } else if (s == "jump" || s == "hamiltonian") {
      SpectralParam lam = need_lambda(st, cfg);
      Vec m = need_m(inst.mod, cfg);
      PlaneWaveVector psi = psi_vector(st, inst.mult, inst.mod, lam, m);
      ChamberFunction f(st, inst.mult, inst.mod, psi);
      if (s == "jump") {
        AffineWeylElement id = awe_identity(st.rs.dim);
        double worst = 0.0;
        for (int a = 0; a < st.letters.size(); ++a) {
          auto pts = chamber_wall_points(st, id, a, 3, cfg.seed);
          for (int order = 1; order <= 2; ++order)
            worst = std::max(worst,
                             check_jump(f, id, st.letters.letters[a], order, pts));
        }
        r["pass"] = worst <= cfg.tol.jump;
        r["max_residual"] = worst;
        all_pass = all_pass && worst <= cfg.tol.jump;
      } else {
        std::vector<AffineWeylElement> chambers = {awe_identity(st.rs.dim)};
        for (int a = 0; a < st.letters.size(); ++a) chambers.push_back(st.letters.refl[a]);
        HamiltonianReport rep = hamiltonian_residual(f, chambers, 3, cfg.seed, cfg.tol.jump);
        r["pass"] = rep.pass;
        r["continuity"] = rep.continuity_max;
        r["jump"] = rep.jump_max;
        r["eigen_dev"] = rep.eigen_dev;
        r["eigenvalue"] = complex_json(rep.eigenvalue);
        if (!rep.diagnostic.empty()) r["diagnostic"] = rep.diagnostic;
        all_pass = all_pass && rep.pass;
      }
    } else if (s == "bae") {
      SpectralParam lam = need_lambda(st, cfg);
      Vec m = need_m(inst.mod, cfg);
      BaeReport rep = bae_verify(st, inst.mult, inst.mod, lam, m, cfg.tol.bae);
      r["pass"] = rep.pass;
      r["max_residual"] = rep.max_residual;
      r["residuals"] = rep.residuals;
      all_pass = all_pass && rep.pass;
    } else {
      throw ConfigError("unknown check suite \"" + s + "\"");
    }
    out.push_back(r);
  }
  json j;
  j["suites"] = out;
  j["pass"] = all_pass;
  return {all_pass ? 0 : 4, j.dump(2) + "\n"};
}

json solution_json(const Setting& st, const Multiplicity& mult, const WaModule& mod,
                   const BaeSolution& s) {
  json js;
  json lam = json::array();
  for (cd c : s.lambda.lambda) lam.push_back(complex_json(c));
  js["lambda"] = lam;
  json m = json::array();
  for (int i = 0; i < s.m.size(); ++i) m.push_back(complex_json(s.m(i)));
  js["m"] = m;
  js["residuals"] = s.report.residuals;
  js["max_residual"] = s.report.max_residual;
  js["regular"] = s.report.regular;
  js["imaginary"] = s.report.imaginary;
  js["iterations"] = s.iterations;
  RealityVerdict v = repulsive_reality_filter(st, mult, mod, s);
  js["reality"] = {{"applicable", v.applicable}, {"accepted", v.accepted},
                   {"reason", v.reason}};
  return js;
}

std::string cmd_bae_solve(const RunConfig& cfg) {
  Instance inst = build_instance(cfg);
  const Setting& st = *inst.st;
  BaeProblem prob;
  prob.tol = cfg.tol.bae;
  prob.max_iter = cfg.raw.value("max_iter", prob.max_iter);
  if (cfg.raw.contains("q"))
    prob.q = cfg.raw.at("q").get<std::vector<long long>>();
  else
    prob.q.assign(st.lat.rank, 0);
  if (!cfg.lambda.empty()) prob.seed_lambda = cfg.lambda;
  std::vector<BaeSolution> sols;
  if (inst.mod.dim == 1) {
    sols.push_back(bae_solve_scalar(st, inst.mult, prob));
  } else {
    int num_seeds = cfg.raw.value("num_seeds", 8);
    sols = bae_module_search(st, inst.mult, inst.mod, prob, num_seeds, cfg.seed);
  }
  json arr = json::array();
  for (const BaeSolution& s : sols) arr.push_back(solution_json(st, inst.mult, inst.mod, s));
  json j;
  j["solutions"] = arr;
  return j.dump(2) + "\n";
}

std::pair<int, std::string> cmd_bae_verify(const RunConfig& cfg) {
  Instance inst = build_instance(cfg);
  const Setting& st = *inst.st;
  SpectralParam lam = need_lambda(st, cfg);
  Vec m = need_m(inst.mod, cfg);
  BaeReport rep = bae_verify(st, inst.mult, inst.mod, lam, m, cfg.tol.bae);
  json j;
  j["pass"] = rep.pass;
  j["max_residual"] = rep.max_residual;
  j["residuals"] = rep.residuals;
  j["regular"] = rep.regular;
  j["imaginary"] = rep.imaginary;
  return {rep.pass ? 0 : 4, j.dump(2) + "\n"};
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file " + out_path);
  f << text;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"chamber-wise propagation toolkit for trigonometric Dunkl operators",
               "trigdunkl"};
  app.require_subcommand(1);

  struct SubOpts {
    CLI::App* cmd = nullptr;
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
  };
  std::vector<std::string> names = {"info",  "cocycle",   "psi",       "propagate",
                                    "check", "bae-solve", "bae-verify"};
  std::vector<std::string> descs = {
      "group, lattice, and class summary for a config",
      "expand the cocycle value of a group element",
      "the Bethe wave vector as plane-wave data",
      "evaluate the propagated function on a grid",
      "run verification suites against the config",
      "solve the Bethe equations",
      "verify a configured Bethe solution"};
  std::vector<SubOpts> subs(names.size());
  uint64_t seed_override = 0;
  for (size_t i = 0; i < names.size(); ++i) {
    SubOpts& s = subs[i];
    s.cmd = app.add_subcommand(names[i], descs[i]);
    s.cmd->add_option("--config", s.config_path, "JSON config file")->required();
    s.cmd->add_option("--seed", seed_override, "override the config seed");
    s.cmd->add_option("--out", s.out_path, "write the result to a file");
    if (names[i] == "propagate")
      s.cmd->add_option("--format", s.format, "output format")
          ->check(CLI::IsMember({"csv", "json"}));
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    for (const SubOpts& s : subs) {
      if (!s.cmd->parsed()) continue;
      RunConfig cfg = load_config_file(s.config_path);
      if (s.cmd->count("--seed") > 0) cfg.seed = seed_override;
      int rc = 0;
      std::string text;
      const std::string& name = s.cmd->get_name();
      if (name == "info") {
        text = cmd_info(cfg);
      } else if (name == "cocycle") {
        text = cmd_cocycle(cfg);
      } else if (name == "psi") {
        text = cmd_psi(cfg);
      } else if (name == "propagate") {
        text = cmd_propagate(cfg, s.format);
      } else if (name == "check") {
        std::tie(rc, text) = cmd_check(cfg);
      } else if (name == "bae-solve") {
        text = cmd_bae_solve(cfg);
      } else {
        std::tie(rc, text) = cmd_bae_verify(cfg);
      }
      emit(text, s.out_path, out);
      return rc;
    }
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace trigdunkl
