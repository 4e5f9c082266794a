#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace trigdunkl {

// Error hierarchy mapped onto process exit codes:
//   ConfigError (and subclasses) -> 2, GenericityError -> 3,
//   VerificationError -> 4, SolverError -> 5.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual int exit_code() const { return 1; }
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
  int exit_code() const override { return 2; }
};

// Invalid or unsupported lattice for the chosen root system.
class LatticeError : public ConfigError {
public:
  explicit LatticeError(const std::string& msg) : ConfigError(msg) {}
};

// Geometric preconditions violated (degenerate point, bad dimension, ...).
class GeometryError : public ConfigError {
public:
  explicit GeometryError(const std::string& msg) : ConfigError(msg) {}
};

// A query point lies on an affine wall where a chamber-wise object is
// multivalued.  Carries the wall alpha + m that was hit.
class OnWallError : public GeometryError {
public:
  OnWallError(const std::string& msg, std::vector<double> alpha, long m)
      : GeometryError(msg), alpha_(std::move(alpha)), m_(m) {}
  const std::vector<double>& wall_root() const { return alpha_; }
  long wall_offset() const { return m_; }

private:
  std::vector<double> alpha_;
  long m_;
};

// Spectral parameter too close to the singular locus of a cocycle factor.
class GenericityError : public Error {
public:
  explicit GenericityError(const std::string& msg) : Error(msg) {}
  int exit_code() const override { return 3; }
};

class VerificationError : public Error {
public:
  explicit VerificationError(const std::string& msg) : Error(msg) {}
  int exit_code() const override { return 4; }
};

class SolverError : public Error {
public:
  explicit SolverError(const std::string& msg) : Error(msg) {}
  int exit_code() const override { return 5; }
};

}  // namespace trigdunkl
