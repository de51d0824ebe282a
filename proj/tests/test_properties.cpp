#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "support.hpp"
#include "phyloag/flattening.hpp"
#include "phyloag/fourier.hpp"
#include "phyloag/invariants.hpp"
#include "phyloag/pipeline.hpp"
#include "phyloag/random.hpp"

using namespace phyloag;

namespace {

// Random rooted binary tree on leaves 1..n by repeated random joins.
std::string random_binary_newick(std::size_t n, CounterRng& rng) {
  std::vector<std::string> parts;
  for (std::size_t i = 1; i <= n; ++i) parts.push_back(std::to_string(i));
  while (parts.size() > 1) {
    std::size_t a = rng.uniform(0, parts.size() - 1);
    std::string left = parts[a];
    parts.erase(parts.begin() + static_cast<long>(a));
    std::size_t b = rng.uniform(0, parts.size() - 1);
    std::string right = parts[b];
    parts.erase(parts.begin() + static_cast<long>(b));
    parts.push_back("(" + left + "," + right + ")");
  }
  return parts.front() + ";";
}

// Random rooted tree whose internal nodes have 2 or 3 children.
std::string random_tree_newick(std::size_t n, CounterRng& rng) {
  std::vector<std::string> parts;
  for (std::size_t i = 1; i <= n; ++i) parts.push_back(std::to_string(i));
  while (parts.size() > 1) {
    std::size_t take = parts.size() >= 3 && rng.uniform(0, 1) ? 3 : 2;
    std::string joined = "(";
    for (std::size_t j = 0; j < take; ++j) {
      std::size_t a = rng.uniform(0, parts.size() - 1);
      joined += (j ? "," : "") + parts[a];
      parts.erase(parts.begin() + static_cast<long>(a));
    }
    parts.push_back(joined + ")");
  }
  return parts.front() + ";";
}

Assignment stochastic_gm(const ModelSpec& model, CounterRng& rng) {
  Assignment p;
  auto row = [&](const std::vector<VarId>& symbols) {
    std::vector<Rat> w;
    Rat total(0);
    for (std::size_t j = 0; j < symbols.size(); ++j) {
      w.push_back(Rat(static_cast<long>(rng.uniform(1, 30))));
      total += w.back();
    }
    for (std::size_t j = 0; j < symbols.size(); ++j) p[symbols[j]] = w[j] / total;
  };
  for (EdgeId e = 0; e < model.tree().edge_count(); ++e) {
    for (unsigned i = 0; i < model.k(); ++i) {
      std::vector<VarId> symbols;
      for (unsigned j = 0; j < model.k(); ++j) symbols.push_back(model.edge_template(e).cell(i, j));
      row(symbols);
    }
  }
  if (model.root().mode == RootMode::Free) row(model.root().symbols);
  return p;
}

}  // namespace

TEST(Property, BinaryTreeSubforestsAreFibonacci) {
  CounterRng rng(100);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      Tree t = parse_newick(random_binary_newick(n, rng));
      auto subforests = enumerate_subforests(t);
      EXPECT_EQ(static_cast<long>(subforests.size()), oracle::fibonacci(static_cast<int>(2 * n - 1))) << to_newick(t);
      for (const auto& s : subforests) EXPECT_TRUE(oracle::subforest_by_degrees(t, s.edges));
    }
  }
}

TEST(Property, NewickRoundTrip) {
  CounterRng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    std::string text = random_tree_newick(2 + trial % 9, rng);
    Tree t = parse_newick(text);
    EXPECT_EQ(to_newick(t), text);
    Tree again = parse_newick(to_newick(t));
    EXPECT_EQ(to_newick(again), to_newick(t));
    EXPECT_EQ(t.edge_count() + 1, t.node_count());
  }
}

TEST(Property, EdgeSplitsPartitionTheLeaves) {
  CounterRng rng(102);
  for (int trial = 0; trial < 20; ++trial) {
    Tree t = parse_newick(random_tree_newick(3 + trial % 6, rng));
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
      Split s = edge_split(t, e);
      std::vector<std::size_t> all = s.below;
      all.insert(all.end(), s.complement.begin(), s.complement.end());
      std::sort(all.begin(), all.end());
      for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);
      EXPECT_EQ(all.size(), t.leaf_count());
    }
  }
}

TEST(Property, CircuitMatchesBruteForce) {
  CounterRng rng(103);
  for (int trial = 0; trial < 12; ++trial) {
    Tree t = parse_newick(random_tree_newick(2 + trial % 4, rng));
    unsigned k = 2 + trial % 2;
    auto model = make_model(t, ModelKind::GeneralMarkov, RootMode::Free, opts(k));
    JointMap map(model);
    auto point = random_point(map.parameters(), rng);
    auto expected = oracle::brute_joint(
        t, k, [&](std::size_t e, unsigned i, unsigned j) { return point.at(model.edge_template(e).cell(i, j)); },
        [&](unsigned u) { return point.at(model.root().symbols[u]); });
    EXPECT_EQ(map.evaluate(point), expected) << to_newick(t);
  }
}

TEST(Property, ExactDistributionSumsToOne) {
  CounterRng rng(104);
  for (int trial = 0; trial < 10; ++trial) {
    Tree t = parse_newick(random_tree_newick(2 + trial % 5, rng));
    auto model = make_model(t, ModelKind::GeneralMarkov, RootMode::Free, opts(2 + trial % 3));
    Rat total(0);
    for (const auto& x : exact_distribution(model, stochastic_gm(model, rng))) total += x;
    EXPECT_EQ(total, 1);
  }
}

TEST(Property, JukesCantorCoordinatesInvariantUnderStateRelabeling) {
  CounterRng rng(105);
  for (int trial = 0; trial < 3; ++trial) {
    Tree t = parse_newick(random_binary_newick(3 + trial % 2, rng));
    JointMap map(make_model(t, ModelKind::JcDna, RootMode::Uniform));
    std::vector<unsigned> perm = {0, 1, 2, 3};
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      std::next_permutation(perm.begin(), perm.end());
      for (std::size_t i = 0; i < map.coordinate_count(); i += 5) {
        auto states = map.pattern(i).states;
        for (auto& s : states) s = perm[s];
        EXPECT_EQ(map.coordinate(i), map.coordinate(map.flat_index(states)));
      }
    }
  }
}

TEST(Property, FourierDiagonalizesRandomTrees) {
  CounterRng rng(106);
  for (int trial = 0; trial < 6; ++trial) {
    Tree t = parse_newick(random_tree_newick(3 + trial % 3, rng));
    ModelKind kind = trial % 2 ? ModelKind::JcDna : ModelKind::JcBinary;
    auto model = make_model(t, kind, RootMode::Uniform);
    JointMap jm(model);
    MonomialMap fm(model);
    auto point = random_point(jm.parameters(), rng);
    auto qraw = transform_tensor(jm.evaluate(point), group_of(model));
    auto tp = fm.transformed().evaluate(point);
    for (std::size_t flat = 0; flat < qraw.size(); ++flat) {
      auto c = fm.coordinate_of_raw(flat);
      ASSERT_EQ(qraw[flat], c ? poly_eval(fm.coordinate(*c), tp) : Rat(0)) << to_newick(t);
    }
    if (kind == ModelKind::JcDna) {
      EXPECT_EQ(fm.coordinate_count(), enumerate_subforests(t).size());
    }
  }
}

TEST(Property, InternalEdgeFlatteningsHaveRankAtMostK) {
  CounterRng rng(107);
  for (int trial = 0; trial < 6; ++trial) {
    Tree t = parse_newick(random_binary_newick(4 + trial % 2, rng));
    auto model = make_model(t, ModelKind::GeneralMarkov, RootMode::Free, opts(2));
    JointMap map(model);
    auto point = random_point(map.parameters(), rng);
    auto tensor = map.evaluate(point);
    EXPECT_TRUE(variety_membership_minors(tensor, t, 2, 2));
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
      Split s = edge_split(t, e);
      if (s.below.size() < 2 || s.complement.size() < 2) continue;
      EXPECT_EQ(mat_rank(flatten(tensor, 2, s)), 2u) << to_newick(t) << " edge " << e;
    }
  }
}

TEST(Property, GeneralMarkovBinaryTreeDimension) {
  CounterRng rng(108);
  for (std::size_t n = 3; n <= 5; ++n) {
    Tree t = parse_newick(random_binary_newick(n, rng));
    JointMap map(make_model(t, ModelKind::GeneralMarkov, RootMode::Free, opts(2)));
    EXPECT_EQ(jacobian_dimension(map).projective_dim, static_cast<long>(4 * n - 5)) << to_newick(t);
  }
}

TEST(Property, CircuitCheaperThanExpansionOnRandomTrees) {
  CounterRng rng(109);
  for (int trial = 0; trial < 5; ++trial) {
    Tree t = parse_newick(random_binary_newick(3 + trial % 3, rng));
    JointMap map(make_model(t, ModelKind::GeneralMarkov, RootMode::Free, opts(2)));
    for (std::size_t i = 0; i < map.coordinate_count(); i += 3) {
      auto c = map.circuit_cost(i);
      auto e = expanded_cost(map.coordinate(i));
      EXPECT_LE(c.multiplications, e.multiplications);
      EXPECT_LE(c.additions, e.additions);
    }
  }
}
