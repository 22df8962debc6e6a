#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qfock {

/**
 * A labeled Hermitian matrix of inner products with diagnostics against an
 * optional target matrix.
 *
 * Deviations are reported twice: the plain max |G - T| and a normalized form
 * max |G_ij - T_ij| / sqrt(|T_ii T_jj|) (diagonal of G when no target is set),
 * which is the relative measure used for Grams whose diagonal spans many
 * orders of magnitude.
 */
struct GramReport {
  std::string name;
  std::vector<std::string> labels;
  Eigen::MatrixXcd matrix;
  std::optional<Eigen::MatrixXcd> target;

  double max_abs_deviation = 0.0;
  double max_normalized_deviation = 0.0;
  double hermitian_defect = 0.0;  ///< max |G - G^*|
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double trace = 0.0;
  int rank = 0;  ///< eigenvalues above rank_rel_tol * trace
  double rank_rel_tol = 1e-10;

  int size() const { return static_cast<int>(matrix.rows()); }
  bool full_rank() const { return rank == size(); }
};

GramReport make_gram_report(std::string name, std::vector<std::string> labels,
                            Eigen::MatrixXcd matrix,
                            std::optional<Eigen::MatrixXcd> target = std::nullopt,
                            double rank_rel_tol = 1e-10);

}  // namespace qfock
