#pragma once

#include <Eigen/Dense>

namespace peaking {

// Relative eigenvalue cutoff used when the caller does not supply one.
// Scale-aware: directions with eigenvalue <= tol * lambda_max are dropped.
inline double default_rel_tol(Eigen::Index dim) { return 1e-10 * static_cast<double>(dim); }

// Dense square matrix validated to be symmetric (1e-10 absolute per entry),
// finite and of dimension >= 1. Immutable after construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Eigen::MatrixXd entries);

  Eigen::Index dim() const { return entries_.rows(); }
  const Eigen::MatrixXd& dense() const { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

// Eigenvalues sorted non-increasing; eigenvector columns orthonormal and
// aligned with the eigenvalues.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

EigenDecomposition eigen_decompose(const SymmetricMatrix& m);

// Moore-Penrose pseudo-inverse of a PSD matrix via symmetric
// eigendecomposition. Eigenvalues <= rel_tol * lambda_max are treated as zero
// and their directions dropped. Eigenvalues down to -1e-8 * lambda_max are
// clamped to zero; anything more negative is rejected as not PSD.
SymmetricMatrix pseudo_inverse(const SymmetricMatrix& m, double rel_tol);

// Pseudo-inverse restricted to the `rank` largest eigenvalues (zero-threshold
// still applied among those); remaining directions map to zero. rank == dim
// runs the exact same path as pseudo_inverse.
SymmetricMatrix truncated_pseudo_inverse(const SymmetricMatrix& m, Eigen::Index rank,
                                         double rel_tol);

struct PcaModel {
  Eigen::VectorXd mean;
  Eigen::MatrixXd components;          // p x retained, orthonormal columns
  Eigen::VectorXd explained_variance;  // non-increasing, length retained
  Eigen::Index retained = 0;
};

// Retains the smallest k components whose cumulative explained variance
// reaches variance_fraction of the total. Variances use the n-1 denominator.
PcaModel pca_fit(const Eigen::MatrixXd& data, double variance_fraction);

// Centers by the model mean and projects onto the retained components.
Eigen::MatrixXd pca_transform(const PcaModel& model, const Eigen::MatrixXd& data);

// Standard normal CDF, absolute error below 1e-12.
// normal_cdf(x) + normal_cdf(-x) == 1 holds bitwise.
double normal_cdf(double x);

}  // namespace peaking
