#include "qfock/gram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qfock {

GramReport make_gram_report(std::string name, std::vector<std::string> labels,
                            Eigen::MatrixXcd matrix, std::optional<Eigen::MatrixXcd> target,
                            double rank_rel_tol) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("Gram matrix must be square");
  if (static_cast<Eigen::Index>(labels.size()) != matrix.rows()) {
    throw std::invalid_argument("Gram labels do not match the matrix size");
  }
  if (target && (target->rows() != matrix.rows() || target->cols() != matrix.cols())) {
    throw std::invalid_argument("Gram target has the wrong shape");
  }

  GramReport r;
  r.name = std::move(name);
  r.labels = std::move(labels);
  r.rank_rel_tol = rank_rel_tol;
  const Eigen::Index n = matrix.rows();

  r.hermitian_defect = n ? (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() : 0.0;
  r.trace = matrix.trace().real();

  if (n > 0) {
    const Eigen::MatrixXcd sym = 0.5 * (matrix + matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    r.min_eigenvalue = ev.minCoeff();
    r.max_eigenvalue = ev.maxCoeff();
    const double floor = rank_rel_tol * std::abs(r.trace);
    r.rank = static_cast<int>((ev.array() > floor).count());

    const Eigen::MatrixXcd& ref = target ? *target : matrix;
    const Eigen::MatrixXcd diff = target ? Eigen::MatrixXcd(matrix - *target)
                                         : Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const double d = std::abs(diff(i, j));
        r.max_abs_deviation = std::max(r.max_abs_deviation, d);
        const double scale = std::sqrt(std::abs(ref(i, i).real() * ref(j, j).real()));
        if (scale > 0.0) r.max_normalized_deviation = std::max(r.max_normalized_deviation, d / scale);
      }
    }
  }
  r.matrix = std::move(matrix);
  r.target = std::move(target);
  return r;
}

}  // namespace qfock
