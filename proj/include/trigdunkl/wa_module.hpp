#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "trigdunkl/setting.hpp"
#include "trigdunkl/spectral.hpp"

namespace trigdunkl {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Finite-dimensional representation of W ltimes Y, given by matrices for
// the simple affine letters, the length-zero torsion generators, and the
// lattice basis translations.  Arbitrary elements act through a reduced
// word plus the length-zero decomposition.
struct WaModule {
  const Setting* st = nullptr;
  int dim = 0;
  std::string name;
  bool unitary = false;

  std::vector<Mat> simple_action;  // per letter
  std::vector<Mat> omega_action;   // per torsion generator
  std::vector<Mat> trans_action;   // per lattice basis vector
  std::vector<Mat> trans_action_inv;
  std::vector<Mat> table_action;   // cached per length-zero table index

  Mat act(const AffineWeylElement& g) const;
  Mat act_word(const std::vector<int>& word) const;
  Mat act_translation(const IntVec& ycoords) const;
  Mat act_omega(const OmegaElement& e) const;

  // Call after the generator matrices are set; builds the table cache.
  void finalize();
};

WaModule trivial_module(const Setting& st);
WaModule principal_series_module(const Setting& st, const CVec& t);
// Tensor power of a local site space of dimension `local_dim`; type A with
// the standard lattice only.  The symmetric group permutes the factors and
// translations act trivially.
WaModule spin_module(const Setting& st, int local_dim);
WaModule contragredient_module(const WaModule& m);

struct RelationReport {
  bool pass = true;
  double max_residual = 0.0;
  std::vector<std::string> failures;
};

// Defining relations: letter involutions, braid relations of finite order,
// conjugation of letters by the length-zero generators, translation
// commutativity, the conjugation t -> w t w^{-1} between letters and
// translations, and unitarity when claimed.
RelationReport verify_relations(const WaModule& m, double tol = 1e-12);

}  // namespace trigdunkl
