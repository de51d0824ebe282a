#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "support.hpp"
#include "phyloag/fourier.hpp"
#include "phyloag/invariants.hpp"
#include "phyloag/random.hpp"

using namespace phyloag;

namespace {

Tree three() { return parse_newick("(1,(2,3));"); }
Tree four() { return parse_newick("((1,2),(3,4));"); }
Tree five() { return parse_newick("((1,2),(3,(4,5)));"); }

ModelSpec jc(const Tree& t) { return make_model(t, ModelKind::JcDna, RootMode::Uniform); }

Poly q(const std::string& index) { return Poly::variable(var("q" + index)); }

// Z2 supports: edge sets in which every internal node has even degree.
bool even_at_internal_nodes(const Tree& tree, const Subforest& s) {
  std::vector<int> degree(tree.node_count(), 0);
  for (std::size_t e = 0; e < tree.edge_count(); ++e) {
    if (!s.edges[e]) continue;
    ++degree[tree.edge(e).parent];
    ++degree[tree.edge(e).child];
  }
  for (std::size_t v = 0; v < tree.node_count(); ++v) {
    if (!tree.is_leaf(v) && degree[v] % 2 != 0) return false;
  }
  return true;
}

Poly product(const std::vector<std::string>& factors) {
  Poly out(1);
  for (const auto& f : factors) out *= parse_poly(f);
  return out;
}

std::set<std::string> as_strings(const std::vector<Poly>& polys) {
  std::set<std::string> out;
  for (const auto& p : polys) out.insert(to_string(normalize(p)));
  return out;
}

}  // namespace

TEST(Group, CharacterOrthogonality) {
  for (const auto& g : {GroupSpec::z2(), GroupSpec::z2xz2()}) {
    auto table = g.character_table();
    const unsigned k = g.order();
    for (unsigned a = 0; a < k; ++a) {
      for (unsigned b = 0; b < k; ++b) {
        int dot = 0;
        for (unsigned h = 0; h < k; ++h) dot += table[a][h] * table[b][h];
        EXPECT_EQ(dot, a == b ? static_cast<int>(k) : 0);
        for (unsigned h = 0; h < k; ++h) {
          EXPECT_EQ(GroupSpec::character(a, GroupSpec::add(b, h)),
                    GroupSpec::character(a, b) * GroupSpec::character(a, h));
        }
      }
    }
  }
  EXPECT_THROW(GroupSpec::of_order(3), ValidationError);
}

TEST(Transform, SingleLeafZ2) {
  auto q1 = transform_tensor(std::vector<Rat>{make_rat(1, 3), make_rat(2, 3)}, GroupSpec::z2());
  EXPECT_EQ(q1, (std::vector<Rat>{Rat(1), make_rat(-1, 3)}));
}

TEST(Transform, InverseRoundTrip) {
  CounterRng rng(3);
  for (const auto& g : {GroupSpec::z2(), GroupSpec::z2xz2()}) {
    std::size_t size = g.order() * g.order() * g.order();
    std::vector<Rat> p(size);
    for (auto& x : p) x = make_rat(static_cast<long>(rng.uniform(0, 40)) - 20, static_cast<long>(rng.uniform(1, 9)));
    EXPECT_EQ(inverse_transform_tensor(transform_tensor(p, g), g), p);
  }
  EXPECT_THROW(transform_tensor(std::vector<Rat>(5), GroupSpec::z2()), ValidationError);
}

TEST(Transform, MatchesNaiveCharacterSum) {
  CounterRng rng(4);
  auto g = GroupSpec::z2xz2();
  std::vector<Rat> p(16);
  for (auto& x : p) x = Rat(static_cast<long>(rng.uniform(0, 30)));
  auto fast = transform_tensor(p, g);
  for (unsigned g1 = 0; g1 < 4; ++g1) {
    for (unsigned g2 = 0; g2 < 4; ++g2) {
      Rat sum(0);
      for (unsigned s1 = 0; s1 < 4; ++s1)
        for (unsigned s2 = 0; s2 < 4; ++s2) sum += p[s1 * 4 + s2] * GroupSpec::character(g1, s1) * GroupSpec::character(g2, s2);
      EXPECT_EQ(fast[g1 * 4 + g2], sum);
    }
  }
}

TEST(Transform, ParameterForms) {
  auto tp = transform_params(jc(three()));
  EXPECT_EQ(tp.forms[0][0], parse_poly("a0 + 3*a1"));
  EXPECT_EQ(tp.forms[0][1], parse_poly("a0 - a1"));
  EXPECT_EQ(tp.forms[0][2], parse_poly("a0 - a1"));
  EXPECT_EQ(var_name(tp.symbols[0][0]), "A0");
  EXPECT_EQ(var_name(tp.symbols[0][3]), "A1");
  EXPECT_EQ(tp.parameters.size(), 8u);
  auto k3 = transform_params(make_model(three(), ModelKind::Kimura3, RootMode::Uniform));
  EXPECT_EQ(k3.forms[1][1], parse_poly("b0 - b1 + b2 - b3"));
  EXPECT_EQ(k3.parameters.size(), 16u);
}

TEST(LeafLabels, EdgeLabelExamples) {
  Tree t = three();
  auto g = GroupSpec::z2();
  EXPECT_EQ(leaf_to_edge_labels(t, g, {1, 0, 1})->to_string(), "1101");
  EXPECT_EQ(leaf_to_edge_labels(t, g, {1, 1, 0})->to_string(), "1110");
  EXPECT_EQ(leaf_to_edge_labels(t, g, {0, 1, 1})->to_string(), "0011");
  EXPECT_EQ(leaf_to_edge_labels(t, g, {0, 0, 0})->to_string(), "0000");
  EXPECT_FALSE(leaf_to_edge_labels(t, g, {1, 1, 1}).has_value());
  auto z4 = GroupSpec::z2xz2();
  auto h = leaf_to_edge_labels(t, z4, {1, 2, 3});
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->labels, (std::vector<unsigned>{1, 1, 2, 3}));
}

TEST(Support, SubforestsAreZ2xZ2Supports) {
  for (const char* text : {"(1,(2,3));", "((1,2),(3,4));", "((1,2),(3,(4,5)));", "(1,2,3,4);",
                           "(((1,2),3),(4,(5,6)));", "((1,2,3),(4,5,6));", "(1,(2,(3,(4,(5,6)))));"}) {
    Tree t = parse_newick(text);
    EXPECT_EQ(support_classes(t, GroupSpec::z2xz2()), enumerate_subforests(t)) << text;
  }
}

TEST(Support, Z2SupportsHaveEvenInternalDegrees) {
  for (const char* text : {"(1,(2,3));", "((1,2),(3,4));", "((1,2),(3,(4,5)));", "(1,2,3,4);"}) {
    Tree t = parse_newick(text);
    std::vector<Subforest> expected;
    for (std::size_t bits = 0; bits < (std::size_t{1} << t.edge_count()); ++bits) {
      Subforest s;
      for (std::size_t e = 0; e < t.edge_count(); ++e) s.edges.push_back((bits >> (t.edge_count() - 1 - e)) & 1);
      if (even_at_internal_nodes(t, s)) expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(support_classes(t, GroupSpec::z2()), expected) << text;
  }
}

TEST(MonomialMap, CoordinateCounts) {
  EXPECT_EQ(MonomialMap(jc(three())).coordinate_count(), 5u);
  EXPECT_EQ(MonomialMap(jc(four())).coordinate_count(), 13u);
  EXPECT_EQ(MonomialMap(jc(five())).coordinate_count(), 34u);
  EXPECT_THROW(MonomialMap(make_model(three(), ModelKind::GeneralMarkov, RootMode::Free)), ValidationError);
}

TEST(MonomialMap, ThreeLeafFactoredValues) {
  MonomialMap fm(jc(three()));
  auto subst = fm.transformed().substitution();
  auto value = [&](const std::string& name) { return poly_substitute(fm.coordinate(*fm.find(name)), subst); };
  EXPECT_EQ(value("q0000"), product({"a0 + 3*a1", "b0 + 3*b1", "c0 + 3*c1", "d0 + 3*d1"}));
  EXPECT_EQ(value("q0011"), product({"a0 + 3*a1", "b0 + 3*b1", "c0 - c1", "d0 - d1"}));
  EXPECT_EQ(value("q1101"), product({"a0 - a1", "b0 - b1", "c0 + 3*c1", "d0 - d1"}));
  EXPECT_EQ(value("q1110"), product({"a0 - a1", "b0 - b1", "c0 - c1", "d0 + 3*d1"}));
  EXPECT_EQ(value("q1111"), product({"a0 - a1", "b0 - b1", "c0 - c1", "d0 - d1"}));
  EXPECT_EQ(fm.coordinate(*fm.find("q1101")), parse_poly("A1*B1*C0*D1"));
}

TEST(MonomialMap, DiagonalizesTheJointTensor) {
  CounterRng rng(21);
  for (const Tree& t : {three(), four()}) {
    for (ModelKind kind : {ModelKind::JcDna, ModelKind::Kimura2, ModelKind::Kimura3, ModelKind::JcBinary}) {
      auto model = make_model(t, kind, RootMode::Uniform);
      JointMap jm(model);
      MonomialMap fm(model);
      auto point = random_point(jm.parameters(), rng);
      auto qraw = transform_tensor(jm.evaluate(point), group_of(model));
      auto tp = fm.transformed().evaluate(point);
      for (std::size_t flat = 0; flat < qraw.size(); ++flat) {
        auto c = fm.coordinate_of_raw(flat);
        Rat expected = c ? poly_eval(fm.coordinate(*c), tp) : Rat(0);
        ASSERT_EQ(qraw[flat], expected) << to_string(kind) << " " << flat;
      }
    }
  }
}

TEST(MonomialMap, AccumulatedFormsMatchDisplay) {
  JointMap jm(jc(three()));
  MonomialMap fm(jm.model());
  auto classes = symmetry_classes(jm);
  auto forms = accumulated_fourier_forms(jm, fm, classes);
  auto form = [&](const std::string& name) { return forms.at(*fm.find(name)); };
  EXPECT_EQ(form("q0000"), parse_poly("P000 + P001 + P010 + P011 + P012"));
  EXPECT_EQ(form("q0011"), parse_poly("P000 - 1/3*P001 - 1/3*P010 + P011 - 1/3*P012"));
  EXPECT_EQ(form("q1101"), parse_poly("P000 - 1/3*P001 + P010 - 1/3*P011 - 1/3*P012"));
  EXPECT_EQ(form("q1110"), parse_poly("P000 + P001 - 1/3*P010 - 1/3*P011 - 1/3*P012"));
  EXPECT_EQ(form("q1111"), parse_poly("P000 - 1/3*P001 - 1/3*P010 - 1/3*P011 + 1/3*P012"));

  // Substituting the accumulated parameterization gives the monomials.
  auto acc = accumulate_classes(jm, classes);
  std::unordered_map<VarId, Poly> to_params;
  for (std::size_t c = 0; c < classes.size(); ++c) to_params[var(accumulated_name(jm, classes[c]))] = acc[c];
  auto subst = fm.transformed().substitution();
  for (std::size_t i = 0; i < fm.coordinate_count(); ++i) {
    EXPECT_EQ(poly_substitute(forms[i], to_params), poly_substitute(fm.coordinate(i), subst)) << i;
  }
}

TEST(MonomialMap, FourLeafLinearRelations) {
  JointMap jm(jc(four()));
  auto acc = accumulate_classes(jm, symmetry_classes(jm));
  ASSERT_EQ(acc.size(), 15u);
  auto rel = linear_relations(acc);
  EXPECT_EQ(rel.rank, 13u);
  EXPECT_EQ(rel.nullspace.size(), 2u);
  for (const auto& c : rel.nullspace) {
    Poly sum;
    for (std::size_t i = 0; i < acc.size(); ++i) sum += acc[i] * c[i];
    EXPECT_TRUE(sum.is_zero());
  }
}

TEST(Binomials, ThreeLeafCubic) {
  MonomialMap fm(jc(three()));
  auto b = binomials_up_to_degree(fm, 3);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(as_strings(b), as_strings({q("0011") * q("1110") * q("1101") - q("0000") * q("1111") * q("1111")}));
  EXPECT_TRUE(binomials_up_to_degree(fm, 2).empty());
  EXPECT_THROW(binomials_up_to_degree(fm, 4), ValidationError);
}

TEST(Binomials, FourLeafQuadricsAreTheMinors) {
  MonomialMap fm(jc(four()));
  auto m0 = MatP::from_rows({{q("000000"), q("000011")}, {q("110000"), q("110011")}});
  auto m1 = MatP::from_rows({{q("101110"), q("101101"), q("101111")},
                             {q("011110"), q("011101"), q("011111")},
                             {q("111110"), q("111101"), q("111111")}});
  auto expected = minors(m0, 2);
  auto more = minors(m1, 2);
  expected.insert(expected.end(), more.begin(), more.end());
  auto found = binomials_up_to_degree(fm, 2);
  EXPECT_EQ(found.size(), 10u);
  EXPECT_EQ(as_strings(found), as_strings(expected));
  for (const auto& b : found) {
    EXPECT_TRUE(vanishing_check(b, fm, VanishMode::Symbolic).vanishes) << to_string(b);
  }
  // M1 has rank one on the model, so its determinant is not among the quadrics but vanishes too.
  EXPECT_TRUE(vanishing_check(determinant(m1), fm, VanishMode::Symbolic).vanishes);
}

TEST(Binomials, FourLeafCubicFamilies) {
  MonomialMap fm(jc(four()));
  auto cubics = binomials_up_to_degree(fm, 3);
  auto all = as_strings(cubics);
  const std::vector<std::string> pairs = {"00", "01", "10", "11"};
  auto valid = [&](const std::string& index) { return fm.find("q" + index).has_value(); };
  std::size_t checked = 0;
  for (const auto& jk : pairs) {
    for (const auto& lm : pairs) {
      for (const auto& no : pairs) {
        std::vector<std::string> first = {"0000" + jk, "1111" + lm, "1111" + no, "1100" + jk, "1011" + lm, "0111" + no};
        if (std::all_of(first.begin(), first.end(), valid)) {
          Poly b = q(first[0]) * q(first[1]) * q(first[2]) - q(first[3]) * q(first[4]) * q(first[5]);
          if (!b.is_zero()) {
            EXPECT_TRUE(all.count(to_string(normalize(b)))) << to_string(b);
            EXPECT_TRUE(vanishing_check(b, fm, VanishMode::Symbolic).vanishes);
            ++checked;
          }
        }
        std::vector<std::string> second = {jk + "0000", lm + "1111", no + "1111", jk + "0011", lm + "1101", no + "1110"};
        if (std::all_of(second.begin(), second.end(), valid)) {
          Poly b = q(second[0]) * q(second[1]) * q(second[2]) - q(second[3]) * q(second[4]) * q(second[5]);
          if (!b.is_zero()) {
            EXPECT_TRUE(all.count(to_string(normalize(b)))) << to_string(b);
            EXPECT_TRUE(vanishing_check(b, fm, VanishMode::Symbolic).vanishes);
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 0u);
  for (const auto& b : cubics) EXPECT_TRUE(vanishing_check(b, fm, VanishMode::Symbolic).vanishes);
}

TEST(MonomialMap, ExponentMatrixCsv) {
  MonomialMap fm(jc(three()));
  auto csv = fm.exponent_matrix_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "parameter,q0000,q0011,q1101,q1110,q1111");
  auto a = fm.exponent_matrix();
  ASSERT_EQ(a.size(), 8u);
  for (std::size_t c = 0; c < 5; ++c) {
    unsigned degree = 0;
    for (const auto& row : a) degree += row[c];
    EXPECT_EQ(degree, 4u);
  }
}
