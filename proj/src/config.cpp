#include "trigdunkl/config.hpp"

#include <fstream>
#include <set>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

namespace {

// Config complex values are a plain number or {"re", "im"}; the two-element
// array form is reserved for serialized output, where it cannot be mistaken
// for a list of two real values.
cd config_complex(const json& j, const std::string& where) {
  if (j.is_number()) return cd(j.get<double>(), 0.0);
  if (j.is_object() && (j.contains("re") || j.contains("im")))
    return cd(j.value("re", 0.0), j.value("im", 0.0));
  throw ConfigError(where + ": expected a number or {\"re\", \"im\"}, got " + j.dump());
}

CVec config_complex_vec(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + " must be an array");
  CVec out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(config_complex(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key))
      throw ConfigError("unknown key \"" + key + "\" in " + where);
}

void tighten(double& slot, const json& j, const std::string& name) {
  if (!j.contains(name)) return;
  double v = j.at(name).get<double>();
  if (!(v > 0.0)) throw ConfigError("tolerance " + name + " must be positive");
  if (v > slot)
    throw ConfigError("tolerance " + name + " may only be tightened (default " +
                      fmt17(slot) + ", got " + fmt17(v) + ")");
  slot = v;
}

}  // namespace

Rat rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    size_t slash = s.find('/');
    try {
      size_t used = 0;
      long long p = std::stoll(s, &used);
      if (slash == std::string::npos) {
        if (used != s.size()) throw std::invalid_argument(s);
        return Rat(p);
      }
      if (used != slash) throw std::invalid_argument(s);
      size_t used2 = 0;
      long long q = std::stoll(s.substr(slash + 1), &used2);
      if (slash + 1 + used2 != s.size() || q == 0) throw std::invalid_argument(s);
      return Rat(p, q);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse rational \"" + s + "\" (use an integer or \"p/q\")");
    }
  }
  throw ConfigError("rational values must be integers or \"p/q\" strings, got " + j.dump());
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  check_keys(j,
             {"kind", "rank", "lattice", "k", "module", "lambda", "m", "seed", "tolerances",
              "grid", "initial", "q", "num_seeds", "max_iter", "points_per_wall", "element",
              "elements", "suites"},
             "config");
  RunConfig cfg;
  cfg.raw = j;
  if (!j.contains("kind")) throw ConfigError("config needs \"kind\" (A, B, C, or D)");
  cfg.kind = parse_root_kind(j.at("kind").get<std::string>());
  if (!j.contains("rank")) throw ConfigError("config needs \"rank\"");
  cfg.rank = j.at("rank").get<int>();

  if (j.contains("lattice")) {
    const json& l = j.at("lattice");
    if (!l.is_object()) throw ConfigError("\"lattice\" must be an object");
    check_keys(l, {"mode", "basis"}, "lattice");
    cfg.lattice_mode = parse_lattice_mode(l.value("mode", "coroot_lattice"));
    if (l.contains("basis")) {
      if (cfg.lattice_mode != LatticeMode::Custom)
        throw ConfigError("lattice basis is only accepted with mode \"custom\"");
      RatMat basis;
      for (const auto& row : l.at("basis")) {
        RatVec r;
        for (const auto& cell : row) r.push_back(rational_from_json(cell));
        basis.push_back(r);
      }
      cfg.custom_basis = basis;
    } else if (cfg.lattice_mode == LatticeMode::Custom) {
      throw ConfigError("lattice mode \"custom\" needs a \"basis\"");
    }
  }

  if (j.contains("k")) {
    const json& k = j.at("k");
    if (k.is_array())
      cfg.k_values = config_complex_vec(k, "k");
    else
      cfg.k_values = {config_complex(k, "k")};
  }

  if (j.contains("module")) {
    const json& m = j.at("module");
    if (m.is_string()) {
      cfg.module.type = m.get<std::string>();
    } else if (m.is_object()) {
      check_keys(m, {"type", "t", "local_dim", "contragredient"}, "module");
      cfg.module.type = m.value("type", "trivial");
      if (m.contains("t")) cfg.module.t = config_complex_vec(m.at("t"), "module.t");
      cfg.module.local_dim = m.value("local_dim", 2);
      cfg.module.contragredient = m.value("contragredient", false);
    } else {
      throw ConfigError("\"module\" must be a string or an object");
    }
  }

  if (j.contains("lambda")) cfg.lambda = config_complex_vec(j.at("lambda"), "lambda");
  if (j.contains("m")) cfg.m = config_complex_vec(j.at("m"), "m");
  if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();

  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    check_keys(t, {"jump", "invariance", "bae", "cocycle", "verify"}, "tolerances");
    tighten(cfg.tol.jump, t, "jump");
    tighten(cfg.tol.invariance, t, "invariance");
    tighten(cfg.tol.bae, t, "bae");
    tighten(cfg.tol.cocycle, t, "cocycle");
    tighten(cfg.tol.verify, t, "verify");
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

Instance build_instance(const RunConfig& cfg) {
  Instance inst;
  inst.st = build_setting(cfg.kind, cfg.rank, cfg.lattice_mode, cfg.custom_basis);
  inst.mult = make_multiplicity(inst.st->orbits, cfg.k_values);
  const std::string& type = cfg.module.type;
  if (type == "trivial") {
    inst.mod = trivial_module(*inst.st);
  } else if (type == "principal_series") {
    CVec t = cfg.module.t;
    if (t.empty()) t.assign(inst.st->rs.dim, cd(0.0));
    if (static_cast<int>(t.size()) != inst.st->rs.dim)
      throw ConfigError("module.t needs " + std::to_string(inst.st->rs.dim) + " coordinates");
    inst.mod = principal_series_module(*inst.st, t);
  } else if (type == "spin") {
    inst.mod = spin_module(*inst.st, cfg.module.local_dim);
  } else {
    throw ConfigError("unknown module type \"" + type +
                      "\" (trivial, principal_series, or spin)");
  }
  if (cfg.module.contragredient) inst.mod = contragredient_module(inst.mod);
  return inst;
}

}  // namespace trigdunkl
