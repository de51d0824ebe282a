#include "phyloag/model_config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace phyloag {

using nlohmann::json;

namespace {

Assignment params_from(const json& j) {
  if (!j.is_object()) throw ValidationError("params must be an object");
  Assignment out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Rat value;
    if (it.value().is_string()) {
      value = parse_rat(it.value().get<std::string>());
    } else if (it.value().is_number_integer()) {
      value = Rat(it.value().get<long>());
    } else {
      throw ValidationError("parameter '" + it.key() + "' must be a \"p/q\" string");
    }
    out[var(it.key())] = value;
  }
  return out;
}

json params_to(const Assignment& params) {
  // Sorted by name for stable output.
  std::map<std::string, std::string> sorted;
  for (const auto& [v, q] : params) sorted[var_name(v)] = to_string(q);
  json j = json::object();
  for (const auto& [name, value] : sorted) j[name] = value;
  return j;
}

}  // namespace

ModelConfig parse_model_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.contains("newick") || !j.contains("kind")) {
    throw ValidationError("model config needs 'newick' and 'kind'");
  }
  Tree tree = parse_newick(j.at("newick").get<std::string>());
  ModelOptions options;
  if (j.contains("k")) options.k = j.at("k").get<unsigned>();
  if (j.contains("homogeneous")) options.homogeneous = j.at("homogeneous").get<bool>();
  if (j.contains("observe_internal")) options.observe_internal = j.at("observe_internal").get<bool>();
  RootMode root = parse_root_mode(j.value("root", std::string("free")));
  ModelSpec model(tree, parse_model_kind(j.at("kind").get<std::string>()), root, options);
  std::optional<Assignment> params;
  if (j.contains("params")) params = params_from(j.at("params"));
  return {std::move(model), std::move(params)};
}

ModelConfig read_model_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open model config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model_config(buf.str());
}

std::string to_json(const ModelSpec& model, const std::optional<Assignment>& params) {
  json j;
  j["newick"] = to_newick(model.tree());
  j["kind"] = to_string(model.kind());
  j["root"] = to_string(model.root().mode);
  j["k"] = model.k();
  if (model.homogeneous()) j["homogeneous"] = true;
  if (model.observe_internal()) j["observe_internal"] = true;
  if (params) j["params"] = params_to(*params);
  return j.dump(2);
}

Assignment parse_params_json(const std::string& json_text) {
  try {
    return params_from(json::parse(json_text));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

std::string params_to_json(const Assignment& params) { return params_to(params).dump(2); }

}  // namespace phyloag
