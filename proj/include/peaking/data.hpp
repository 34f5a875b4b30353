#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

namespace peaking {

// Two Gaussian classes with identity covariance and a Euclidean distance of
// delta between the true means.
struct GaussianProblem {
  int p = 0;
  double delta = 0.0;
  Eigen::VectorXd mu1, mu2;

  // mu1 = -(delta / (2 sqrt(p))) * 1, mu2 = +(delta / (2 sqrt(p))) * 1.
  static GaussianProblem symmetric(int p, double delta);

  // Arbitrary means; delta is derived from them.
  static GaussianProblem from_means(Eigen::VectorXd mu1, Eigen::VectorXd mu2);
};

struct LabeledDataset {
  Eigen::MatrixXd X;  // L x p design matrix
  Eigen::VectorXi y;  // labels in {1, 2}

  Eigen::Index size() const { return X.rows(); }
  Eigen::Index dim() const { return X.cols(); }
};

struct UnlabeledDataset {
  Eigen::MatrixXd X;  // U x p

  Eigen::Index size() const { return X.rows(); }
  Eigen::Index dim() const { return X.cols(); }
};

using Rng = std::mt19937_64;

// Master seed with a stable stream-derivation rule:
//   derive(i).master = splitmix64(master + (i + 1) * 0x9E3779B97F4A7C15)
// where splitmix64 is the standard SplitMix64 finalizer. Identical
// (master, index) chains give bit-identical draws within one build.
struct Seed {
  std::uint64_t master = 0;

  Seed derive(std::uint64_t index) const;
  Rng engine() const { return Rng(master); }
};

// 2 * n_per_class rows alternating class 1 / class 2, so every even-length
// prefix is exactly balanced. Class c rows ~ N(mu_c, I). Rows are generated
// in order: prefixes are stable under growing n_per_class.
LabeledDataset sample_labeled(const GaussianProblem& problem, int n_per_class, Rng& rng);

// n rows from the equal-prior mixture 1/2 N(mu1, I) + 1/2 N(mu2, I);
// memberships are discarded.
UnlabeledDataset sample_unlabeled(const GaussianProblem& problem, int n, Rng& rng);

// Comma-separated file with a header row, '.' decimal point, UTF-8.
// label_column selects by header name, or by 0-based index when it parses as
// an integer. The column must hold exactly two distinct values; they map to
// {1, 2} in ascending lexicographic order of their string form.
LabeledDataset load_csv_dataset(const std::filesystem::path& path,
                                const std::string& label_column);

// n rows drawn uniformly with replacement, labels carried along.
LabeledDataset bootstrap_sample(const LabeledDataset& data, int n, Rng& rng);

}  // namespace peaking
