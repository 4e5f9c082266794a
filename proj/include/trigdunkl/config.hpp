#pragma once

#include <memory>
#include <optional>
#include <string>

#include "trigdunkl/serialize.hpp"

namespace trigdunkl {

// Acceptance thresholds; a config may tighten these but never loosen them.
struct Tolerances {
  double jump = 1e-8;
  double invariance = 1e-9;
  double bae = 1e-10;
  double cocycle = 1e-10;
  double verify = 1e-12;
};

struct ModuleSpec {
  std::string type = "trivial";  // trivial | principal_series | spin
  CVec t;                        // principal series character, ambient coordinates
  int local_dim = 2;
  bool contragredient = false;
};

struct RunConfig {
  RootKind kind = RootKind::A;
  int rank = 1;
  LatticeMode lattice_mode = LatticeMode::CorootLattice;
  std::optional<RatMat> custom_basis;
  std::vector<cd> k_values{cd(0.0)};  // one per affine class, or a single value
  ModuleSpec module;
  CVec lambda;
  CVec m;
  uint64_t seed = 0;
  Tolerances tol;
  json raw;  // command-specific keys are read from here
};

Rat rational_from_json(const json& j);

RunConfig parse_config(const json& j);
RunConfig load_config_file(const std::string& path);

// The three objects almost every command needs, built once from a config.
struct Instance {
  std::unique_ptr<Setting> st;
  Multiplicity mult;
  WaModule mod;
};

Instance build_instance(const RunConfig& cfg);

}  // namespace trigdunkl
