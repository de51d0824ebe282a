#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phyloag/paramap.hpp"

namespace phyloag {

// Exact joint distribution via the circuit. Throws ValidationError for
// non-stochastic parameters or a total mass other than 1.
std::vector<Rat> exact_distribution(const ModelSpec& model, const Assignment& params);

// State characters: "ACGT" for k = 4, otherwise the digits 0..k-1.
std::string alphabet(unsigned k);

struct Alignment {
  unsigned k = 4;
  std::vector<std::string> labels;
  std::vector<std::string> sequences;

  std::size_t length() const { return sequences.empty() ? 0 : sequences.front().size(); }
};

// Site i is drawn from a CounterRng with stream i under the seed, so the
// output does not depend on how sites are split across workers. Leaves
// appear in tree order.
Alignment sample_alignment(const ModelSpec& model, const Assignment& params, std::size_t length,
                           std::uint64_t seed, std::size_t workers = 1);

struct EmpiricalTensor {
  unsigned k = 4;
  std::size_t leaves = 0;
  std::size_t length = 0;
  std::vector<std::uint64_t> counts;
  std::vector<double> frequencies;
};

// Throws ValidationError on unequal lengths or characters outside the
// alphabet.
EmpiricalTensor empirical_tensor(const Alignment& alignment);
// Lines "flat,count,frequency" after a header.
std::string tensor_csv(const EmpiricalTensor& tensor);
// Reads the tensor_csv format; every flat index 0..k^n-1 must appear once.
// Throws ParseError on malformed lines, ValidationError on a bad layout.
EmpiricalTensor parse_tensor_csv(const std::string& text, unsigned k);
double total_variation(const std::vector<double>& empirical, const std::vector<Rat>& exact);

// Aligned, uppercase FASTA. The alphabet is ACGT unless k = 2 is given.
Alignment parse_fasta(const std::string& text, unsigned k = 4);
Alignment read_fasta(const std::string& path, unsigned k = 4);
std::string to_fasta(const Alignment& alignment, std::size_t width = 60);

struct SplitScore {
  std::string name;       // e.g. "(12)(34)" for leaves 1,2,3,4
  double score = 0;       // Frobenius norm of the rank-r residual
  std::optional<std::size_t> exact_rank;
};

struct QuartetScores {
  std::array<SplitScore, 3> splits;
  std::size_t best = 0;
  bool tie = false;
  std::size_t rank = 2;
};

// Scores the three quartet flattenings of a k^4 tensor by the singular
// values beyond the r-th (those below 1e-12 of the largest count as zero).
// Throws DegeneracyError for an all-zero tensor, ValidationError on shape.
QuartetScores score_splits(const std::vector<double>& tensor, unsigned k, std::size_t r,
                           const std::vector<std::string>& labels);
// Exact tensors: a split whose exact flattening rank is at most r scores 0.
QuartetScores score_splits(const std::vector<Rat>& tensor, unsigned k, std::size_t r,
                           const std::vector<std::string>& labels);

std::string quartet_report_json(const QuartetScores& scores, std::size_t sites);

}  // namespace phyloag
