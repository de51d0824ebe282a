#include <cctype>
#include <fstream>
#include <sstream>

#include "phyloag/pipeline.hpp"

namespace phyloag {

Alignment parse_fasta(const std::string& text, unsigned k) {
  Alignment out;
  out.k = k;
  const std::string chars = alphabet(k);
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t line_start = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>') {
      std::string label = line.substr(1);
      while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
      if (label.empty()) throw ParseError("empty FASTA header", line_start);
      out.labels.push_back(label);
      out.sequences.emplace_back();
      continue;
    }
    if (out.labels.empty()) throw ParseError("sequence before the first header", line_start);
    for (std::size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (chars.find(c) == std::string::npos) throw ParseError(std::string("invalid character '") + c + "'", line_start + i);
      out.sequences.back() += c;
    }
  }
  if (out.sequences.empty()) throw ParseError("no sequences", 0);
  for (const auto& s : out.sequences) {
    if (s.size() != out.sequences.front().size()) throw ValidationError("sequences differ in length");
  }
  return out;
}

Alignment read_fasta(const std::string& path, unsigned k) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_fasta(buffer.str(), k);
}

std::string to_fasta(const Alignment& alignment, std::size_t width) {
  std::string out;
  for (std::size_t i = 0; i < alignment.sequences.size(); ++i) {
    out += '>' + alignment.labels.at(i) + '\n';
    const auto& s = alignment.sequences[i];
    for (std::size_t pos = 0; pos < s.size(); pos += width) out += s.substr(pos, width) + '\n';
  }
  return out;
}

}  // namespace phyloag
