#include "phyloag/pipeline.hpp"

namespace phyloag {

std::vector<Rat> exact_distribution(const ModelSpec& model, const Assignment& params) {
  auto report = validate_stochastic(model, params);
  if (!report.stochastic) {
    for (const auto& row : report.rows) {
      if (!row.sums_to_one || !row.entries_in_unit_interval) {
        throw ValidationError("parameters are not stochastic: " + row.owner + " row " + std::to_string(row.row) +
                              " sums to " + to_string(row.sum));
      }
    }
  }
  JointMap map(model);
  auto p = map.evaluate(params);
  Rat total(0);
  for (const auto& x : p) total += x;
  if (total != 1) throw ValidationError("distribution sums to " + to_string(total));
  return p;
}

std::string alphabet(unsigned k) {
  if (k == 4) return "ACGT";
  std::string out;
  for (unsigned s = 0; s < k; ++s) out += static_cast<char>('0' + s);
  return out;
}

double total_variation(const std::vector<double>& empirical, const std::vector<Rat>& exact) {
  if (empirical.size() != exact.size()) throw ValidationError("distributions differ in length");
  double sum = 0;
  for (std::size_t i = 0; i < exact.size(); ++i) sum += std::abs(empirical[i] - exact[i].get_d());
  return sum / 2;
}

}  // namespace phyloag
