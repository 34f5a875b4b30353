#include "peaking/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace peaking {

SymmetricMatrix::SymmetricMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw std::domain_error("SymmetricMatrix: need a square matrix of dimension >= 1");
  }
  if (!entries_.allFinite()) {
    throw std::invalid_argument("SymmetricMatrix: non-finite entries");
  }
  const double asym = (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) {
    throw std::invalid_argument("SymmetricMatrix: asymmetry " + std::to_string(asym) +
                                " exceeds 1e-10");
  }
}

EigenDecomposition eigen_decompose(const SymmetricMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.dense());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigen_decompose: solver did not converge");
  }
  // Eigen returns ascending order; flip to non-increasing.
  const Eigen::Index n = m.dim();
  EigenDecomposition d;
  d.eigenvalues = solver.eigenvalues().reverse();
  d.eigenvectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    d.eigenvectors.col(j) = solver.eigenvectors().col(n - 1 - j);
  }
  return d;
}

SymmetricMatrix truncated_pseudo_inverse(const SymmetricMatrix& m, Eigen::Index rank,
                                         double rel_tol) {
  if (rank < 0 || rank > m.dim()) {
    throw std::domain_error("truncated_pseudo_inverse: rank out of [0, dim]");
  }
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw std::domain_error("pseudo_inverse: rel_tol must be a positive real");
  }
  const EigenDecomposition d = eigen_decompose(m);
  const double lambda_max = d.eigenvalues(0);
  // PSD up to rounding: eigenvalues in [-1e-8 * lambda_max, 0) are clamped to
  // zero by the threshold below, anything more negative is rejected.
  if (d.eigenvalues(m.dim() - 1) < -1e-8 * std::max(lambda_max, 0.0)) {
    throw std::invalid_argument("pseudo_inverse: matrix is not positive semi-definite");
  }

  Eigen::VectorXd inv = Eigen::VectorXd::Zero(m.dim());
  for (Eigen::Index i = 0; i < rank; ++i) {
    const double lambda = d.eigenvalues(i);
    if (lambda > rel_tol * lambda_max) {
      inv(i) = 1.0 / lambda;
    }
  }
  Eigen::MatrixXd p = d.eigenvectors * inv.asDiagonal() * d.eigenvectors.transpose();
  p = 0.5 * (p + p.transpose()).eval();
  return SymmetricMatrix(std::move(p));
}

SymmetricMatrix pseudo_inverse(const SymmetricMatrix& m, double rel_tol) {
  return truncated_pseudo_inverse(m, m.dim(), rel_tol);
}

PcaModel pca_fit(const Eigen::MatrixXd& data, double variance_fraction) {
  if (data.rows() < 2) {
    throw std::invalid_argument("pca_fit: need at least 2 rows");
  }
  if (!data.allFinite()) {
    throw std::invalid_argument("pca_fit: non-finite entries");
  }
  if (!(variance_fraction > 0.0) || variance_fraction > 1.0) {
    throw std::domain_error("pca_fit: variance_fraction must lie in (0, 1]");
  }
  const Eigen::Index n = data.rows();
  const Eigen::Index p = data.cols();

  PcaModel model;
  model.mean = data.colwise().mean();
  const Eigen::MatrixXd centered = data.rowwise() - model.mean.transpose();
  Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(n - 1);
  cov = 0.5 * (cov + cov.transpose()).eval();

  EigenDecomposition d = eigen_decompose(SymmetricMatrix(std::move(cov)));
  const double lambda_max = d.eigenvalues.maxCoeff();
  if (!(lambda_max > 0.0)) {
    throw std::runtime_error("pca_fit: degenerate data, total variance is zero");
  }
  // Clamp eigensolver noise so that rank-deficient data reaches the total
  // exactly at its true rank.
  Eigen::VectorXd lambda = d.eigenvalues;
  for (Eigen::Index i = 0; i < p; ++i) {
    if (lambda(i) <= 1e-12 * lambda_max) lambda(i) = 0.0;
  }
  const double total = lambda.sum();

  double cumulative = 0.0;
  Eigen::Index retained = p;
  for (Eigen::Index i = 0; i < p; ++i) {
    cumulative += lambda(i);
    if (cumulative >= variance_fraction * total) {
      retained = i + 1;
      break;
    }
  }

  model.retained = retained;
  model.components = d.eigenvectors.leftCols(retained);
  model.explained_variance = lambda.head(retained);
  return model;
}

Eigen::MatrixXd pca_transform(const PcaModel& model, const Eigen::MatrixXd& data) {
  if (data.cols() != model.mean.size()) {
    throw std::domain_error("pca_transform: column count does not match the model");
  }
  return (data.rowwise() - model.mean.transpose()) * model.components;
}

double normal_cdf(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("normal_cdf: x must be finite");
  }
  static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Branch on sign so the two tails come from the same erfc evaluation,
  // making Phi(x) + Phi(-x) == 1 exact.
  if (x < 0.0) return 0.5 * std::erfc(-x * inv_sqrt2);
  return 1.0 - 0.5 * std::erfc(x * inv_sqrt2);
}

}  // namespace peaking
