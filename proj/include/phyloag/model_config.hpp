#pragma once

#include <optional>
#include <string>

#include "phyloag/models.hpp"

namespace phyloag {

// JSON model description:
//   {"newick": "...", "kind": "jc-dna", "root": "uniform", "k": 4,
//    "homogeneous": false, "params": {"a0": "3/4", ...}}
// Rationals are strings "p/q" (or "p").
struct ModelConfig {
  ModelSpec model;
  std::optional<Assignment> params;
};

ModelConfig parse_model_config(const std::string& json_text);
ModelConfig read_model_config(const std::string& path);
std::string to_json(const ModelSpec& model, const std::optional<Assignment>& params);

// Symbol-name keyed rationals, {"a0": "1/2"} -> Assignment.
Assignment parse_params_json(const std::string& json_text);
std::string params_to_json(const Assignment& params);

}  // namespace phyloag
