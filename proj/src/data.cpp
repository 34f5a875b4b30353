#include "peaking/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace peaking {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

GaussianProblem GaussianProblem::symmetric(int p, double delta) {
  if (p < 1) throw std::domain_error("GaussianProblem: p must be >= 1");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::domain_error("GaussianProblem: delta must be a positive real");
  }
  GaussianProblem problem;
  problem.p = p;
  problem.delta = delta;
  const double half = delta / (2.0 * std::sqrt(static_cast<double>(p)));
  problem.mu1 = Eigen::VectorXd::Constant(p, -half);
  problem.mu2 = Eigen::VectorXd::Constant(p, half);
  return problem;
}

GaussianProblem GaussianProblem::from_means(Eigen::VectorXd mu1, Eigen::VectorXd mu2) {
  if (mu1.size() < 1 || mu1.size() != mu2.size()) {
    throw std::domain_error("GaussianProblem: means must share a dimension >= 1");
  }
  GaussianProblem problem;
  problem.p = static_cast<int>(mu1.size());
  problem.delta = (mu1 - mu2).norm();
  if (!(problem.delta > 0.0)) {
    throw std::domain_error("GaussianProblem: means must be distinct");
  }
  problem.mu1 = std::move(mu1);
  problem.mu2 = std::move(mu2);
  return problem;
}

Seed Seed::derive(std::uint64_t index) const {
  return Seed{splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL)};
}

LabeledDataset sample_labeled(const GaussianProblem& problem, int n_per_class, Rng& rng) {
  if (n_per_class < 1) throw std::domain_error("sample_labeled: n_per_class must be >= 1");
  const int rows = 2 * n_per_class;
  LabeledDataset data;
  data.X.resize(rows, problem.p);
  data.y.resize(rows);
  std::normal_distribution<double> normal;
  for (int i = 0; i < n_per_class; ++i) {
    for (int j = 0; j < problem.p; ++j) {
      data.X(2 * i, j) = normal(rng) + problem.mu1(j);
    }
    data.y(2 * i) = 1;
    for (int j = 0; j < problem.p; ++j) {
      data.X(2 * i + 1, j) = normal(rng) + problem.mu2(j);
    }
    data.y(2 * i + 1) = 2;
  }
  return data;
}

UnlabeledDataset sample_unlabeled(const GaussianProblem& problem, int n, Rng& rng) {
  if (n < 1) throw std::domain_error("sample_unlabeled: n must be >= 1");
  UnlabeledDataset data;
  data.X.resize(n, problem.p);
  std::normal_distribution<double> normal;
  std::bernoulli_distribution pick_second(0.5);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd& mu = pick_second(rng) ? problem.mu2 : problem.mu1;
    for (int j = 0; j < problem.p; ++j) {
      data.X(i, j) = normal(rng) + mu(j);
    }
  }
  return data;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell.push_back(c);
    }
  }
  cells.push_back(cell);
  return cells;
}

double parse_cell(const std::string& cell, std::size_t line_no, std::size_t col) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || cell.empty()) {
    throw std::runtime_error("load_csv_dataset: non-numeric feature cell \"" + cell +
                             "\" at line " + std::to_string(line_no) + ", column " +
                             std::to_string(col + 1));
  }
  return value;
}

}  // namespace

LabeledDataset load_csv_dataset(const std::filesystem::path& path,
                                const std::string& label_column) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_csv_dataset: cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("load_csv_dataset: missing header row in " + path.string());
  }
  const std::vector<std::string> header = split_csv_line(line);
  const std::size_t n_cols = header.size();

  // Label column by name first, falling back to a 0-based index.
  std::size_t label_idx = n_cols;
  for (std::size_t i = 0; i < n_cols; ++i) {
    if (header[i] == label_column) {
      label_idx = i;
      break;
    }
  }
  if (label_idx == n_cols) {
    int parsed = -1;
    auto [ptr, ec] = std::from_chars(label_column.data(),
                                     label_column.data() + label_column.size(), parsed);
    if (ec == std::errc{} && ptr == label_column.data() + label_column.size() &&
        parsed >= 0 && static_cast<std::size_t>(parsed) < n_cols) {
      label_idx = static_cast<std::size_t>(parsed);
    } else {
      throw std::runtime_error("load_csv_dataset: label column \"" + label_column +
                               "\" not found in header");
    }
  }
  if (n_cols < 2) {
    throw std::runtime_error("load_csv_dataset: need at least one feature column");
  }

  std::vector<std::vector<double>> features;
  std::vector<std::string> labels;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != n_cols) {
      throw std::runtime_error("load_csv_dataset: line " + std::to_string(line_no) + " has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(n_cols));
    }
    std::vector<double> row;
    row.reserve(n_cols - 1);
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (c == label_idx) continue;
      row.push_back(parse_cell(cells[c], line_no, c));
    }
    features.push_back(std::move(row));
    labels.push_back(cells[label_idx]);
  }
  if (features.empty()) {
    throw std::runtime_error("load_csv_dataset: no data rows in " + path.string());
  }

  const std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != 2) {
    throw std::runtime_error("load_csv_dataset: label column must hold exactly 2 distinct "
                             "values, found " + std::to_string(distinct.size()));
  }
  // Ascending lexicographic order of the string form -> {1, 2}.
  std::map<std::string, int> encoding;
  int next = 1;
  for (const std::string& value : distinct) encoding[value] = next++;

  LabeledDataset data;
  data.X.resize(static_cast<Eigen::Index>(features.size()),
                static_cast<Eigen::Index>(n_cols - 1));
  data.y.resize(static_cast<Eigen::Index>(labels.size()));
  for (std::size_t i = 0; i < features.size(); ++i) {
    for (std::size_t j = 0; j + 1 < n_cols; ++j) {
      data.X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = features[i][j];
    }
    data.y(static_cast<Eigen::Index>(i)) = encoding.at(labels[i]);
  }
  return data;
}

LabeledDataset bootstrap_sample(const LabeledDataset& data, int n, Rng& rng) {
  if (data.size() == 0) throw std::domain_error("bootstrap_sample: empty source dataset");
  if (n < 1) throw std::domain_error("bootstrap_sample: n must be >= 1");
  std::uniform_int_distribution<Eigen::Index> pick(0, data.size() - 1);
  LabeledDataset out;
  out.X.resize(n, data.dim());
  out.y.resize(n);
  for (int i = 0; i < n; ++i) {
    const Eigen::Index j = pick(rng);
    out.X.row(i) = data.X.row(j);
    out.y(i) = data.y(j);
  }
  return out;
}

}  // namespace peaking
