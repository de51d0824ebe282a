#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include "phyloag/pipeline.hpp"
#include "phyloag/random.hpp"

namespace phyloag {

Alignment sample_alignment(const ModelSpec& model, const Assignment& params, std::size_t length,
                           std::uint64_t seed, std::size_t workers) {
  if (length == 0) throw ValidationError("alignment length must be at least 1");
  if (model.observe_internal()) throw ValidationError("simulation needs hidden internal nodes");
  auto p = exact_distribution(model, params);
  std::vector<double> cumulative;
  double acc = 0;
  for (const auto& x : p) cumulative.push_back(acc += x.get_d());

  const unsigned k = model.k();
  const std::size_t n = model.tree().leaf_count();
  const std::string chars = alphabet(k);
  Alignment out;
  out.k = k;
  for (std::size_t l = 0; l < n; ++l) out.labels.push_back(model.tree().leaf_label(l));
  out.sequences.assign(n, std::string(length, chars[0]));

  auto draw = [&](std::size_t begin, std::size_t end) {
    for (std::size_t site = begin; site < end; ++site) {
      CounterRng rng(seed, site);
      double u = rng.uniform01() * acc;
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      std::size_t flat = std::min<std::size_t>(it - cumulative.begin(), cumulative.size() - 1);
      for (std::size_t l = n; l-- > 0;) {
        out.sequences[l][site] = chars[flat % k];
        flat /= k;
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, length));
  if (workers == 1) {
    draw(0, length);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (length + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(length, begin + chunk);
      if (begin < end) pool.emplace_back(draw, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  return out;
}

EmpiricalTensor empirical_tensor(const Alignment& alignment) {
  if (alignment.sequences.empty()) throw ValidationError("alignment has no sequences");
  const unsigned k = alignment.k;
  const std::string chars = alphabet(k);
  EmpiricalTensor t;
  t.k = k;
  t.leaves = alignment.sequences.size();
  t.length = alignment.length();
  std::size_t total = 1;
  for (std::size_t i = 0; i < t.leaves; ++i) total *= k;
  t.counts.assign(total, 0);
  for (const auto& s : alignment.sequences) {
    if (s.size() != t.length) throw ValidationError("sequences differ in length");
  }
  if (t.length == 0) throw ValidationError("alignment has no sites");
  for (std::size_t site = 0; site < t.length; ++site) {
    std::size_t flat = 0;
    for (const auto& s : alignment.sequences) {
      auto pos = chars.find(s[site]);
      if (pos == std::string::npos) throw ValidationError(std::string("character '") + s[site] + "' outside the alphabet");
      flat = flat * k + pos;
    }
    ++t.counts[flat];
  }
  for (auto c : t.counts) t.frequencies.push_back(static_cast<double>(c) / static_cast<double>(t.length));
  return t;
}

std::string tensor_csv(const EmpiricalTensor& tensor) {
  std::ostringstream out;
  out.precision(17);
  out << "flat,count,frequency\n";
  for (std::size_t i = 0; i < tensor.counts.size(); ++i) {
    out << i << ',' << tensor.counts[i] << ',' << tensor.frequencies[i] << '\n';
  }
  return out.str();
}

EmpiricalTensor parse_tensor_csv(const std::string& text, unsigned k) {
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  std::map<std::size_t, std::pair<std::uint64_t, double>> rows;
  bool header = true;
  while (std::getline(in, line)) {
    std::size_t start = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("flat", 0) == 0) continue;
    }
    std::istringstream fields(line);
    std::string flat, count, freq;
    if (!std::getline(fields, flat, ',') || !std::getline(fields, count, ',') || !std::getline(fields, freq)) {
      throw ParseError("expected flat,count,frequency", start);
    }
    try {
      std::size_t used = 0;
      std::size_t f = std::stoull(flat, &used);
      if (used != flat.size()) throw ParseError("invalid flat index", start);
      std::uint64_t c = std::stoull(count, &used);
      if (used != count.size()) throw ParseError("invalid count", start);
      double q = std::stod(freq, &used);
      if (used != freq.size() || q < 0) throw ParseError("invalid frequency", start);
      if (!rows.emplace(f, std::make_pair(c, q)).second) throw ValidationError("flat index repeated in tensor CSV");
    } catch (const std::logic_error&) {
      throw ParseError("invalid number", start);
    }
  }
  EmpiricalTensor t;
  t.k = k;
  std::size_t size = 1;
  while (size < rows.size()) {
    size *= k;
    ++t.leaves;
  }
  if (rows.empty() || size != rows.size() || rows.rbegin()->first != size - 1) {
    throw ValidationError("tensor CSV must list flat indices 0..k^n-1");
  }
  for (const auto& [flat, row] : rows) {
    t.counts.push_back(row.first);
    t.frequencies.push_back(row.second);
    t.length += row.first;
  }
  return t;
}

}  // namespace phyloag
