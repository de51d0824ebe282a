#include <Eigen/SVD>
#include <cmath>

#include "json.hpp"
#include "phyloag/flattening.hpp"
#include "phyloag/pipeline.hpp"

namespace phyloag {

namespace {

// Split of a quartet with leaves 0..3: {0, partner} | rest.
Split quartet(std::size_t partner) {
  Split s;
  s.below = {0, partner};
  for (std::size_t i = 1; i < 4; ++i) {
    if (i != partner) s.complement.push_back(i);
  }
  return s;
}

std::string split_name(const std::vector<std::string>& labels, std::size_t partner) {
  std::string left = "(" + labels[0] + labels[partner] + ")";
  std::string right = "(";
  for (std::size_t i = 1; i < 4; ++i) {
    if (i != partner) right += labels[i];
  }
  return left + right + ")";
}

double residual(const Matrix<double>& m, std::size_t r) {
  Eigen::MatrixXd a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  double cutoff = 1e-12 * (s.size() > 0 ? s(0) : 0.0);
  double sum = 0;
  for (Eigen::Index i = static_cast<Eigen::Index>(r); i < s.size(); ++i) {
    if (s(i) > cutoff) sum += s(i) * s(i);
  }
  return std::sqrt(sum);
}

void check_shape(std::size_t size, unsigned k, std::size_t r, const std::vector<std::string>& labels) {
  if (size != std::size_t{k} * k * k * k) throw ValidationError("quartet scoring needs a k^4 tensor");
  if (labels.size() != 4) throw ValidationError("quartet scoring needs four leaf labels");
  if (r >= std::size_t{k} * k) throw ValidationError("rank must be below the flattening size");
}

void pick_best(QuartetScores& out) {
  out.best = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (out.splits[i].score < out.splits[out.best].score) out.best = i;
  }
  out.tie = false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != out.best && out.splits[i].score == out.splits[out.best].score) out.tie = true;
  }
}

}  // namespace

QuartetScores score_splits(const std::vector<double>& tensor, unsigned k, std::size_t r,
                           const std::vector<std::string>& labels) {
  check_shape(tensor.size(), k, r, labels);
  bool zero = true;
  for (double x : tensor) zero = zero && x == 0;
  if (zero) throw DegeneracyError("all-zero tensor cannot be scored");
  QuartetScores out;
  out.rank = r;
  for (std::size_t i = 0; i < 3; ++i) {
    out.splits[i].name = split_name(labels, i + 1);
    out.splits[i].score = residual(flatten(tensor, k, quartet(i + 1)), r);
  }
  pick_best(out);
  return out;
}

QuartetScores score_splits(const std::vector<Rat>& tensor, unsigned k, std::size_t r,
                           const std::vector<std::string>& labels) {
  check_shape(tensor.size(), k, r, labels);
  std::vector<double> approx;
  for (const auto& x : tensor) approx.push_back(x.get_d());
  QuartetScores out = score_splits(approx, k, r, labels);
  for (std::size_t i = 0; i < 3; ++i) {
    out.splits[i].exact_rank = mat_rank(flatten(tensor, k, quartet(i + 1)));
    if (*out.splits[i].exact_rank <= r) out.splits[i].score = 0;
  }
  pick_best(out);
  return out;
}

std::string quartet_report_json(const QuartetScores& scores, std::size_t sites) {
  nlohmann::json j;
  j["rank"] = scores.rank;
  j["sites"] = sites;
  j["best"] = scores.splits[scores.best].name;
  j["tie"] = scores.tie;
  j["splits"] = nlohmann::json::array();
  for (const auto& s : scores.splits) {
    nlohmann::json e;
    e["split"] = s.name;
    e["score"] = s.score;
    if (s.exact_rank) e["exact_rank"] = *s.exact_rank;
    j["splits"].push_back(e);
  }
  return j.dump(2);
}

}  // namespace phyloag
