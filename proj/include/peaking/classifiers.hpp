#pragma once

#include <optional>

#include "peaking/data.hpp"
#include "peaking/numerics.hpp"

namespace peaking {

// Sample moments of a training set. Class means and W come from the labeled
// rows only; the pooled mean and T cover labeled plus unlabeled rows. Each
// scatter is divided by its own object count (W by the labeled count, T by
// the total), matching the 1/n convention of Fisher's criterion.
struct ScatterStats {
  Eigen::VectorXd m1, m2;  // class sample means
  Eigen::VectorXd m;       // pooled mean over all rows
  SymmetricMatrix W;       // within-class scatter
  SymmetricMatrix T;       // total scatter about the pooled mean
  Eigen::Index n = 0;      // labeled + unlabeled
  Eigen::Index n1 = 0, n2 = 0;
};

ScatterStats scatter_stats(const LabeledDataset& labeled,
                           const UnlabeledDataset* unlabeled = nullptr);

// score(x) = w . x + b; score > 0 -> class 1, otherwise class 2.
struct LinearClassifier {
  Eigen::VectorXd w;
  double b = 0.0;
};

// All fits accept an optional eigenvalue cutoff for the pseudo-inverse and
// fall back to default_rel_tol(dim) of the inverted matrix.

// w = pinv(W) (m1 - m2), intercept halfway between the class means.
LinearClassifier fit_fisher_within(const ScatterStats& stats,
                                   std::optional<double> rel_tol = {});

// Same rule with the total scatter T in place of W.
LinearClassifier fit_fisher_total(const ScatterStats& stats,
                                  std::optional<double> rel_tol = {});

// Least squares on the constant-augmented design matrix with labels encoded
// +1 (class 1) / -1 (class 2), solved through the pseudo-inverse of the
// (p+1) x (p+1) Gram matrix.
LinearClassifier fit_ls_supervised(const LabeledDataset& labeled,
                                   std::optional<double> rel_tol = {});

// Least squares with the Gram matrix estimated from labeled plus unlabeled
// rows, rescaled by L / (L + U); the moment vector uses labeled rows only.
// U == 0 reproduces fit_ls_supervised bit for bit.
LinearClassifier fit_ls_semisupervised(const LabeledDataset& labeled,
                                       const UnlabeledDataset& unlabeled,
                                       std::optional<double> rel_tol = {});

// Supervised least squares whose Gram pseudo-inverse keeps only the `rank`
// largest eigenvalues. rank == p + 1 equals fit_ls_supervised exactly.
LinearClassifier fit_fixed_rank(const LabeledDataset& labeled, Eigen::Index rank,
                                std::optional<double> rel_tol = {});

// Semi-supervised limit of infinitely many unlabeled objects for the
// symmetric-means problem: the total scatter converges to
// I + (delta^2 / 4p) * ones*ones^T, inverted in closed form; class means come
// from the labeled sample.
LinearClassifier fit_infinite_unlabeled(const LabeledDataset& labeled,
                                        const GaussianProblem& problem,
                                        std::optional<double> rel_tol = {});

Eigen::VectorXi predict(const LinearClassifier& clf, const Eigen::MatrixXd& X);

}  // namespace peaking
