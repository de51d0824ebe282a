#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "phyloag/flattening.hpp"
#include "phyloag/fourier.hpp"
#include "phyloag/invariants.hpp"
#include "phyloag/mixture.hpp"
#include "phyloag/model_config.hpp"
#include "phyloag/pipeline.hpp"

using namespace phyloag;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kDegenerate = 3;

struct ModelArgs {
  std::string tree;
  std::string model = "jc-dna";
  std::string root;
  std::string config;
  unsigned k = 0;
  bool homogeneous = false;
  bool observe_internal = false;
};

struct Common {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void add_model_options(CLI::App* cmd, ModelArgs& args) {
  cmd->add_option("--tree", args.tree, "Newick file, or inline Newick text ending in ';'");
  cmd->add_option("--model", args.model, "general-markov, jc-binary, jc-dna, kimura2, kimura3, reversible");
  cmd->add_option("--root", args.root, "uniform or free (default: free for general-markov, else uniform)");
  cmd->add_option("--config", args.config, "model config JSON (replaces --tree/--model/--root)");
  cmd->add_option("--k", args.k, "number of states for general-markov");
  cmd->add_flag("--homogeneous", args.homogeneous, "tie all edges to one template");
  cmd->add_flag("--observe-internal", args.observe_internal, "treat internal nodes as observed");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Tree load_tree(const std::string& arg) {
  if (arg.empty()) throw ValidationError("--tree is required");
  auto last = arg.find_last_not_of(" \t\r\n");
  if (last != std::string::npos && arg[last] == ';') return parse_newick(arg);
  return read_newick_file(arg);
}

struct Loaded {
  ModelSpec model;
  std::optional<Assignment> params;
};

Loaded load_model(const ModelArgs& args) {
  if (!args.config.empty()) {
    auto cfg = read_model_config(args.config);
    return {std::move(cfg.model), std::move(cfg.params)};
  }
  ModelKind kind = parse_model_kind(args.model);
  RootMode root = args.root.empty() ? (kind == ModelKind::GeneralMarkov ? RootMode::Free : RootMode::Uniform)
                                    : parse_root_mode(args.root);
  ModelOptions options;
  if (args.k != 0) options.k = args.k;
  options.homogeneous = args.homogeneous;
  options.observe_internal = args.observe_internal;
  return {ModelSpec(load_tree(args.tree), kind, root, options), std::nullopt};
}

std::vector<std::string> read_lines(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<std::string> read_tokens(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    for (char& c : tok) {
      if (c == ',') c = ' ';
    }
    std::istringstream parts(tok);
    std::string p;
    while (parts >> p) out.push_back(p);
  }
  return out;
}

void emit(const Common& common, const json& j, const std::string& text) {
  if (common.json()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string matrix_text(const MatP& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? "  " : "") + to_string(m(r, c));
    out += '\n';
  }
  return out;
}

json matrix_json(const MatP& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

// --- param -----------------------------------------------------------------

struct ParamArgs {
  ModelArgs model;
  std::string coordinate;
  bool accumulated = false;
  bool circuit_stats = false;
};

int run_param(const ParamArgs& args, const Common& common) {
  auto loaded = load_model(args.model);
  JointMap map(loaded.model);
  json j;
  std::ostringstream text;
  j["parameters"] = parameter_count(loaded.model);
  j["coordinates"] = map.coordinate_count();
  text << "parameters: " << parameter_count(loaded.model) << "\ncoordinates: " << map.coordinate_count() << '\n';

  std::vector<std::size_t> chosen;
  if (!args.coordinate.empty()) {
    chosen.push_back(map.parse_pattern(args.coordinate));
  } else if (!args.accumulated) {
    for (std::size_t i = 0; i < map.coordinate_count(); ++i) chosen.push_back(i);
  }
  if (args.accumulated) {
    auto classes = symmetry_classes(map);
    auto sums = accumulate_classes(map, classes);
    j["classes"] = json::array();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::string name = accumulated_name(map, classes[c]);
      j["classes"].push_back({{"name", name}, {"size", classes[c].size()}, {"polynomial", to_string(sums[c])}});
      text << name << " [" << classes[c].size() << "] = " << to_string(sums[c]) << '\n';
    }
  }
  if (!chosen.empty()) {
    j["polynomials"] = json::object();
    for (std::size_t i : chosen) {
      const Poly& p = map.coordinate(i);
      j["polynomials"][map.coordinate_name(i)] = to_string(p);
      text << map.coordinate_name(i) << " = " << to_string(p) << '\n';
    }
    j["degree"] = degree_profile(map);
    text << "degree: " << degree_profile(map) << '\n';
  }
  if (args.circuit_stats) {
    auto all = map.circuit().count_all();
    j["circuit"] = {{"nodes", map.circuit().size()}, {"multiplications", all.multiplications},
                    {"additions", all.additions}};
    text << "circuit: " << map.circuit().size() << " nodes, " << all.multiplications << " multiplications, "
         << all.additions << " additions\n";
    if (!args.coordinate.empty()) {
      std::size_t flat = chosen.front();
      auto c = map.circuit_cost(flat);
      auto e = expanded_cost(map.coordinate(flat));
      j["coordinate_cost"] = {{"circuit", {{"multiplications", c.multiplications}, {"additions", c.additions}}},
                              {"expanded", {{"multiplications", e.multiplications}, {"additions", e.additions}}}};
      text << map.coordinate_name(flat) << " circuit: " << c.multiplications << " multiplications, " << c.additions
           << " additions; expanded: " << e.multiplications << " multiplications, " << e.additions << " additions\n";
    }
  }
  emit(common, j, text.str());
  return kOk;
}

// --- fourier ---------------------------------------------------------------

struct FourierArgs {
  ModelArgs model;
  bool coordinates = false;
  bool map = false;
  unsigned binomials = 0;
  bool accumulated = false;
  bool relations = false;
};

int run_fourier(const FourierArgs& args, const Common& common) {
  auto loaded = load_model(args.model);
  MonomialMap fm(loaded.model);
  json j;
  std::ostringstream text;
  bool any = false;
  if (args.map) {
    any = true;
    j["exponent_matrix_csv"] = fm.exponent_matrix_csv();
    text << fm.exponent_matrix_csv();
  }
  if (args.binomials > 0) {
    any = true;
    auto b = binomials_up_to_degree(fm, args.binomials);
    j["binomials"] = json::array();
    for (const auto& p : b) {
      j["binomials"].push_back(to_string(p));
      text << to_string(p) << '\n';
    }
  }
  if (args.accumulated || args.relations) {
    any = true;
    JointMap jm(loaded.model);
    auto classes = symmetry_classes(jm);
    if (args.accumulated) {
      auto forms = accumulated_fourier_forms(jm, fm, classes);
      j["accumulated_forms"] = json::object();
      for (std::size_t i = 0; i < forms.size(); ++i) {
        j["accumulated_forms"][fm.coordinate_name(i)] = to_string(forms[i]);
        text << fm.coordinate_name(i) << " = " << to_string(forms[i]) << '\n';
      }
    }
    if (args.relations) {
      auto sums = accumulate_classes(jm, classes);
      auto rel = linear_relations(sums);
      j["accumulated_coordinates"] = sums.size();
      j["span_rank"] = rel.rank;
      j["relations"] = json::array();
      text << "accumulated coordinates: " << sums.size() << "\nspan rank: " << rel.rank << '\n';
      for (const auto& v : rel.nullspace) {
        Poly form;
        for (std::size_t c = 0; c < v.size(); ++c) {
          if (v[c] != 0) form += Poly::variable(accumulated_name(jm, classes[c])) * v[c];
        }
        form = normalize(form);
        j["relations"].push_back(to_string(form));
        text << to_string(form) << " = 0\n";
      }
    }
  }
  if (args.coordinates || !any) {
    j["coordinates"] = json::object();
    for (std::size_t i = 0; i < fm.coordinate_count(); ++i) {
      j["coordinates"][fm.coordinate_name(i)] = to_string(fm.coordinate(i));
      text << fm.coordinate_name(i) << " = " << to_string(fm.coordinate(i)) << '\n';
    }
    j["transformed_parameters"] = json::object();
    const auto& tp = fm.transformed();
    for (std::size_t e = 0; e < tp.forms.size(); ++e) {
      for (std::size_t g = 0; g < tp.forms[e].size(); ++g) {
        j["transformed_parameters"][var_name(tp.symbols[e][g])] = to_string(tp.forms[e][g]);
      }
    }
  }
  emit(common, j, text.str());
  return kOk;
}

// --- invariants / check / dim ---------------------------------------------

struct MapChoice {
  std::unique_ptr<JointMap> joint;
  std::unique_ptr<MixtureMap> mixture;
  std::unique_ptr<MonomialMap> fourier;
  std::unique_ptr<PolyListMap> accumulated;
  std::unique_ptr<PolyListMap> fourier_mixture;
  const PolynomialMap* map = nullptr;
  unsigned k = 2;
};

MapChoice choose_map(const Loaded& loaded, std::size_t mixture, bool fourier) {
  MapChoice c;
  c.k = loaded.model.k();
  if (fourier && mixture > 1) {
    c.fourier_mixture = std::make_unique<PolyListMap>(PolyListMap::fourier_mixture(loaded.model, mixture));
    c.map = c.fourier_mixture.get();
  } else if (fourier) {
    c.fourier = std::make_unique<MonomialMap>(loaded.model);
    c.map = c.fourier.get();
  } else if (mixture > 1) {
    const auto& m = loaded.model;
    ModelOptions options;
    options.k = m.k();
    options.homogeneous = m.homogeneous();
    options.observe_internal = m.observe_internal();
    c.mixture = std::make_unique<MixtureMap>(
        std::vector<MixtureComponent>(mixture, MixtureComponent{m.tree(), m.kind(), m.root().mode, options}));
    c.map = c.mixture.get();
  } else {
    c.joint = std::make_unique<JointMap>(loaded.model);
    c.map = c.joint.get();
  }
  return c;
}

// Coordinate indices by name; accumulated names switch to the accumulated map.
std::vector<std::size_t> resolve_coordinates(MapChoice& c, const std::vector<std::string>& names) {
  const PolynomialMap* map = c.map;
  bool accumulated = !names.empty() && names.front().size() > 1 && names.front()[0] == 'P';
  if (accumulated) {
    if (!c.joint) throw ValidationError("accumulated coordinates need a single joint map");
    c.accumulated = std::make_unique<PolyListMap>(PolyListMap::accumulated(*c.joint));
    c.map = map = c.accumulated.get();
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < map->coordinate_count(); ++i) index.emplace(map->coordinate_name(i), i);
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    auto it = index.find(n);
    if (it == index.end()) throw ValidationError("unknown coordinate '" + n + "'");
    out.push_back(it->second);
  }
  return out;
}

json vanish_json(const std::string& form, const VanishResult& r) {
  json j = {{"form", form}, {"vanishes", r.vanishes}, {"points", r.points}};
  if (r.witness) {
    json w = json::object();
    for (const auto& [v, q] : *r.witness) w[var_name(v)] = to_string(q);
    j["witness"] = w;
    j["witness_value"] = to_string(r.witness_value);
  }
  return j;
}

struct CheckArgs {
  ModelArgs model;
  std::string forms;
  std::string mode = "randomized";
  std::size_t mixture = 1;
  bool fourier = false;
  std::size_t points = 25;
  std::uint64_t seed = kDefaultSeed;
};

int run_check(const CheckArgs& args, const Common& common) {
  auto loaded = load_model(args.model);
  auto choice = choose_map(loaded, args.mixture, args.fourier);
  VanishMode mode = args.mode == "symbolic" ? VanishMode::Symbolic : VanishMode::Randomized;
  if (args.mode != "symbolic" && args.mode != "randomized") throw ValidationError("--mode must be symbolic or randomized");
  json j = json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& line : read_lines(args.forms)) {
    Poly form = parse_poly(line);
    std::vector<std::string> names;
    for (VarId v : form.variables()) names.push_back(var_name(v));
    if (!names.empty() && names.front()[0] == 'P' && choice.joint && !choice.accumulated) {
      resolve_coordinates(choice, names);
    }
    auto r = vanishing_check(form, *choice.map, mode, args.seed, args.points);
    all = all && r.vanishes;
    j.push_back(vanish_json(line, r));
    text << (r.vanishes ? "vanishes: " : "nonzero:  ") << line << '\n';
  }
  emit(common, json{{"results", j}, {"all_vanish", all}}, text.str());
  return kOk;
}

struct DimArgs {
  ModelArgs model;
  std::size_t mixture = 1;
  bool fourier = false;
  std::size_t points = 3;
  std::uint64_t seed = kDefaultSeed;
};

int run_dim(const DimArgs& args, const Common& common) {
  auto loaded = load_model(args.model);
  auto choice = choose_map(loaded, args.mixture, args.fourier);
  auto d = jacobian_dimension(*choice.map, args.points, args.seed);
  json j = {{"affine_rank", d.affine_rank}, {"projective_dimension", d.projective_dim}, {"ranks", d.ranks},
            {"parameters", choice.map->parameters().size()}};
  std::ostringstream text;
  text << "affine rank: " << d.affine_rank << "\nprojective dimension: " << d.projective_dim << '\n';
  emit(common, j, text.str());
  return kOk;
}

struct InvariantArgs {
  ModelArgs model;
  std::string flatten;
  std::size_t minors = 0;
  unsigned interpolate = 0;
  std::string coords;
  bool dim = false;
  std::size_t mixture = 1;
  std::string check;
  bool fourier = false;
  std::uint64_t seed = kDefaultSeed;
};

int run_invariants(const InvariantArgs& args, const Common& common) {
  auto loaded = load_model(args.model);
  auto choice = choose_map(loaded, args.mixture, args.fourier);
  json j;
  std::ostringstream text;
  if (!args.flatten.empty()) {
    if (args.fourier) throw ValidationError("--flatten applies to probability coordinates");
    Split split = parse_split(loaded.model.tree(), args.flatten);
    MatP m = flatten(coordinate_symbols(*choice.map), choice.k, split);
    j["flattening"] = matrix_json(m);
    text << matrix_text(m);
    if (args.minors > 0) {
      auto ms = minors(m, args.minors);
      j["minors"] = json::array();
      for (const auto& p : ms) {
        j["minors"].push_back(to_string(p));
        text << to_string(p) << '\n';
      }
    }
  }
  if (args.interpolate > 0) {
    std::vector<std::size_t> basis;
    if (!args.coords.empty()) {
      basis = resolve_coordinates(choice, read_tokens(args.coords));
    } else {
      for (std::size_t i = 0; i < choice.map->coordinate_count(); ++i) basis.push_back(i);
    }
    auto r = interpolate_vanishing_forms(*choice.map, args.interpolate, basis, args.seed);
    j["interpolation"] = {{"monomials", r.monomials}, {"points", r.points}, {"nullity", r.forms.size()},
                          {"forms", json::array()}};
    text << "monomials: " << r.monomials << "\nnullity: " << r.forms.size() << '\n';
    for (const auto& f : r.forms) {
      j["interpolation"]["forms"].push_back({{"terms", f.size()}, {"form", to_string(f)}});
      text << "[" << f.size() << " terms] " << to_string(f) << '\n';
    }
  }
  if (args.dim) {
    auto d = jacobian_dimension(*choice.map, 3, args.seed);
    j["dimension"] = {{"affine_rank", d.affine_rank}, {"projective_dimension", d.projective_dim}};
    text << "projective dimension: " << d.projective_dim << '\n';
  }
  if (!args.check.empty()) {
    json results = json::array();
    for (const auto& line : read_lines(args.check)) {
      auto r = vanishing_check(parse_poly(line), *choice.map, VanishMode::Randomized, args.seed);
      results.push_back(vanish_json(line, r));
      text << (r.vanishes ? "vanishes: " : "nonzero:  ") << line << '\n';
    }
    j["checks"] = results;
  }
  emit(common, j, text.str());
  return kOk;
}

// --- simulate / infer-quartet ---------------------------------------------

struct SimulateArgs {
  ModelArgs model;
  std::string params;
  std::size_t length = 1000;
  std::uint64_t seed = 1;
  std::string out;
  std::string tensor_csv;
  std::size_t workers = 1;
};

int run_simulate(const SimulateArgs& args, const Common& common) {
  auto loaded = load_model(args.model);
  Assignment params;
  if (!args.params.empty()) {
    params = parse_params_json(read_file(args.params));
  } else if (loaded.params) {
    params = *loaded.params;
  } else {
    throw ValidationError("--params (or params in --config) is required");
  }
  auto alignment = sample_alignment(loaded.model, params, args.length, args.seed, args.workers);
  std::string fasta = to_fasta(alignment);
  if (!args.out.empty()) {
    std::ofstream(args.out) << fasta;
  }
  auto tensor = empirical_tensor(alignment);
  if (!args.tensor_csv.empty()) std::ofstream(args.tensor_csv) << tensor_csv(tensor);
  auto exact = exact_distribution(loaded.model, params);
  double tv = total_variation(tensor.frequencies, exact);
  json j = {{"sites", alignment.length()}, {"seed", args.seed}, {"total_variation", tv}};
  if (args.out.empty()) j["fasta"] = fasta;
  std::ostringstream text;
  if (args.out.empty()) {
    text << fasta;
  } else {
    text << "wrote " << alignment.length() << " sites to " << args.out << "\ntotal variation: " << tv << '\n';
  }
  emit(common, j, text.str());
  return kOk;
}

struct QuartetArgs {
  std::string alignment;
  std::string tensor;
  std::size_t rank = 2;
  unsigned k = 4;
};

int run_quartet(const QuartetArgs& args, const Common& common) {
  if (args.alignment.empty() && args.tensor.empty()) throw ValidationError("--alignment or --tensor is required");
  EmpiricalTensor tensor;
  std::vector<std::string> labels = {"1", "2", "3", "4"};
  if (!args.alignment.empty()) {
    auto alignment = read_fasta(args.alignment, args.k);
    if (alignment.sequences.size() != 4) throw ValidationError("quartet inference needs exactly four sequences");
    tensor = empirical_tensor(alignment);
    labels = alignment.labels;
  } else {
    tensor = parse_tensor_csv(read_file(args.tensor), args.k);
  }
  auto scores = score_splits(tensor.frequencies, args.k, args.rank, labels);
  std::ostringstream text;
  for (const auto& s : scores.splits) text << s.name << " " << s.score << '\n';
  text << "best: " << scores.splits[scores.best].name << (scores.tie ? " (tie)" : "") << '\n';
  if (common.json()) {
    std::cout << quartet_report_json(scores, tensor.length) << '\n';
  } else {
    std::cout << text.str();
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phylogenetic algebraic geometry toolkit"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  ParamArgs param;
  auto* cmd_param = app.add_subcommand("param", "joint-probability polynomials and circuit statistics");
  add_model_options(cmd_param, param.model);
  cmd_param->add_option("--coordinate", param.coordinate, "pattern such as AAA or 010");
  cmd_param->add_flag("--accumulated", param.accumulated, "symmetry classes and accumulated coordinates");
  cmd_param->add_flag("--circuit-stats", param.circuit_stats, "operation counts");

  FourierArgs fourier;
  auto* cmd_fourier = app.add_subcommand("fourier", "Fourier coordinates of group-based models");
  add_model_options(cmd_fourier, fourier.model);
  cmd_fourier->add_flag("--coordinates", fourier.coordinates, "monomial parameterization");
  cmd_fourier->add_flag("--map", fourier.map, "exponent matrix as CSV");
  cmd_fourier->add_option("--binomials", fourier.binomials, "binomials up to this degree (1-3)");
  cmd_fourier->add_flag("--accumulated", fourier.accumulated, "Fourier coordinates in accumulated coordinates");
  cmd_fourier->add_flag("--relations", fourier.relations, "linear relations among accumulated coordinates");

  InvariantArgs inv;
  auto* cmd_inv = app.add_subcommand("invariants", "flattenings, minors, interpolation, dimension, checks");
  add_model_options(cmd_inv, inv.model);
  cmd_inv->add_option("--flatten", inv.flatten, "split such as 12|34");
  cmd_inv->add_option("--minors", inv.minors, "minor size for --flatten");
  cmd_inv->add_option("--interpolate", inv.interpolate, "degree of vanishing forms");
  cmd_inv->add_option("--coords", inv.coords, "file listing coordinate names");
  cmd_inv->add_flag("--dim", inv.dim, "Jacobian dimension");
  cmd_inv->add_option("--mixture", inv.mixture, "number of mixture components");
  cmd_inv->add_option("--check", inv.check, "file with one form per line");
  cmd_inv->add_flag("--fourier", inv.fourier, "use the Fourier monomial map");
  cmd_inv->add_option("--seed", inv.seed, "random point seed");

  CheckArgs check;
  auto* cmd_check = app.add_subcommand("check", "vanishing checks of forms on a model");
  add_model_options(cmd_check, check.model);
  cmd_check->add_option("--forms", check.forms, "file with one form per line")->required();
  cmd_check->add_option("--mode", check.mode, "symbolic or randomized");
  cmd_check->add_option("--mixture", check.mixture, "number of mixture components");
  cmd_check->add_flag("--fourier", check.fourier, "use the Fourier monomial map");
  cmd_check->add_option("--points", check.points, "random points");
  cmd_check->add_option("--seed", check.seed, "random point seed");

  DimArgs dim;
  auto* cmd_dim = app.add_subcommand("dim", "projective dimension from the Jacobian rank");
  add_model_options(cmd_dim, dim.model);
  cmd_dim->add_option("--mixture", dim.mixture, "number of mixture components");
  cmd_dim->add_flag("--fourier", dim.fourier, "use the Fourier monomial map");
  cmd_dim->add_option("--points", dim.points, "random points");
  cmd_dim->add_option("--seed", dim.seed, "random point seed");

  SimulateArgs sim;
  auto* cmd_sim = app.add_subcommand("simulate", "sample an alignment");
  add_model_options(cmd_sim, sim.model);
  cmd_sim->add_option("--params", sim.params, "parameter JSON file");
  cmd_sim->add_option("--length", sim.length, "number of sites");
  cmd_sim->add_option("--seed", sim.seed, "seed");
  cmd_sim->add_option("--out", sim.out, "FASTA output path");
  cmd_sim->add_option("--tensor-csv", sim.tensor_csv, "empirical tensor CSV output path");
  cmd_sim->add_option("--workers", sim.workers, "sampling threads");

  QuartetArgs quartet;
  auto* cmd_quartet = app.add_subcommand("infer-quartet", "score the three quartet splits");
  auto* opt_alignment = cmd_quartet->add_option("--alignment", quartet.alignment, "FASTA alignment");
  auto* opt_tensor = cmd_quartet->add_option("--tensor", quartet.tensor, "empirical tensor CSV (flat,count,frequency)");
  opt_alignment->excludes(opt_tensor);
  cmd_quartet->add_option("--rank", quartet.rank, "flattening rank");
  cmd_quartet->add_option("--k", quartet.k, "number of states (4 for ACGT, 2 for 01)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*cmd_param) return run_param(param, common);
    if (*cmd_fourier) return run_fourier(fourier, common);
    if (*cmd_inv) return run_invariants(inv, common);
    if (*cmd_check) return run_check(check, common);
    if (*cmd_dim) return run_dim(dim, common);
    if (*cmd_sim) return run_simulate(sim, common);
    if (*cmd_quartet) return run_quartet(quartet, common);
  } catch (const DegeneracyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}
