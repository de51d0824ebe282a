#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "support.hpp"
#include "phyloag/flattening.hpp"
#include "phyloag/fourier.hpp"
#include "phyloag/invariants.hpp"
#include "phyloag/mixture.hpp"

using namespace phyloag;

namespace {

Tree quartet() { return parse_newick("((1,2),(3,4));"); }
Tree star4() { return parse_newick("(1,2,3,4);"); }
Tree three() { return parse_newick("(1,(2,3));"); }
Tree five() { return parse_newick("((1,2),(3,(4,5)));"); }

ModelSpec jc(const Tree& t) { return make_model(t, ModelKind::JcDna, RootMode::Uniform); }
ModelSpec gm2(const Tree& t) { return make_model(t, ModelKind::GeneralMarkov, RootMode::Free, opts(2)); }

Poly p(const std::string& s) { return Poly::variable("p" + s); }
Poly q(const std::string& s) { return Poly::variable("q" + s); }

MatP rows(std::initializer_list<std::initializer_list<const char*>> entries, Poly (*make)(const std::string&)) {
  std::vector<std::vector<Poly>> out;
  for (const auto& r : entries) {
    std::vector<Poly> row;
    for (const char* e : r) row.push_back(make(e));
    out.push_back(row);
  }
  return MatP::from_rows(out);
}

// Rank-one tensor u (x) v (x) w (x) x with random rational factors.
std::vector<Rat> segre_point(CounterRng& rng) {
  std::vector<std::vector<Rat>> f(4, std::vector<Rat>(2));
  for (auto& v : f)
    for (auto& x : v) x = make_rat(static_cast<long>(rng.uniform(1, 50)), static_cast<long>(rng.uniform(1, 50)));
  std::vector<Rat> t(16);
  for (std::size_t s = 0; s < 16; ++s) t[s] = f[0][(s >> 3) & 1] * f[1][(s >> 2) & 1] * f[2][(s >> 1) & 1] * f[3][s & 1];
  return t;
}

std::size_t index_of(const PolynomialMap& map, const std::string& name) {
  for (std::size_t i = 0; i < map.coordinate_count(); ++i) {
    if (map.coordinate_name(i) == name) return i;
  }
  throw ValidationError("no coordinate " + name);
}

}  // namespace

TEST(Flattening, ThreeQuartetMatricesMatchDisplay) {
  JointMap map(gm2(star4()));
  auto symbols = coordinate_symbols(map);
  Tree t = star4();
  EXPECT_EQ(flatten(symbols, 2, quartet_split(t, QuartetSplit::S12_34)),
            rows({{"0000", "0001", "0010", "0011"},
                  {"0100", "0101", "0110", "0111"},
                  {"1000", "1001", "1010", "1011"},
                  {"1100", "1101", "1110", "1111"}}, p));
  EXPECT_EQ(flatten(symbols, 2, quartet_split(t, QuartetSplit::S13_24)),
            rows({{"0000", "0001", "0100", "0101"},
                  {"0010", "0011", "0110", "0111"},
                  {"1000", "1001", "1100", "1101"},
                  {"1010", "1011", "1110", "1111"}}, p));
  EXPECT_EQ(flatten(symbols, 2, quartet_split(t, QuartetSplit::S14_23)),
            rows({{"0000", "0010", "0100", "0110"},
                  {"0001", "0011", "0101", "0111"},
                  {"1000", "1010", "1100", "1110"},
                  {"1001", "1011", "1101", "1111"}}, p));
  EXPECT_EQ(to_string(QuartetSplit::S13_24), "(13)(24)");
}

TEST(Flattening, LayoutAgreesWithDirectIndexing) {
  Tree t = parse_newick("((1,2),(3,(4,5)));");
  Split s = parse_split(t, "13|245");
  auto layout = flattening_layout(5, 3, s);
  ASSERT_EQ(layout.rows(), 9u);
  ASSERT_EQ(layout.cols(), 27u);
  for (std::size_t r = 0; r < 9; ++r) {
    for (std::size_t c = 0; c < 27; ++c) {
      std::vector<std::size_t> st(5);
      st[0] = r / 3;
      st[2] = r % 3;
      st[1] = c / 9;
      st[3] = (c / 3) % 3;
      st[4] = c % 3;
      std::size_t flat = 0;
      for (auto x : st) flat = flat * 3 + x;
      EXPECT_EQ(layout(r, c), flat);
    }
  }
  EXPECT_THROW(flattening_layout(4, 2, Split{std::nullopt, {}, {0, 1, 2, 3}}), ValidationError);
}

TEST(Flattening, SegreAndSecantRanks) {
  CounterRng rng(5);
  Tree t = star4();
  for (int trial = 0; trial < 5; ++trial) {
    auto segre = segre_point(rng);
    auto other = segre_point(rng);
    std::vector<Rat> secant(16);
    for (std::size_t i = 0; i < 16; ++i) secant[i] = segre[i] + other[i];
    for (auto which : {QuartetSplit::S12_34, QuartetSplit::S13_24, QuartetSplit::S14_23}) {
      Split s = quartet_split(t, which);
      EXPECT_EQ(mat_rank(flatten(segre, 2, s)), 1u);
      EXPECT_EQ(mat_rank(flatten(secant, 2, s)), 2u);
      EXPECT_TRUE(named_variety_check(secant, t, which));
      for (const auto& m : minors(flatten(secant, 2, s), 3)) EXPECT_EQ(m, 0);
    }
  }
}

TEST(Flattening, GeneralMarkovStarIsTheSecantVariety) {
  JointMap map(gm2(star4()));
  CounterRng rng(6);
  auto point = random_point(map.parameters(), rng);
  auto tensor = map.evaluate(point);
  for (auto which : {QuartetSplit::S12_34, QuartetSplit::S13_24, QuartetSplit::S14_23}) {
    EXPECT_EQ(rank_at_point(map, 2, quartet_split(star4(), which), point), 2u);
    EXPECT_TRUE(named_variety_check(tensor, star4(), which));
  }
}

TEST(Flattening, QuartetModelSatisfiesOnlyItsOwnSplit) {
  JointMap map(gm2(quartet()));
  CounterRng rng(7);
  auto point = random_point(map.parameters(), rng);
  auto tensor = map.evaluate(point);
  Tree t = quartet();
  EXPECT_TRUE(named_variety_check(tensor, t, QuartetSplit::S12_34));
  EXPECT_FALSE(named_variety_check(tensor, t, QuartetSplit::S13_24));
  EXPECT_FALSE(named_variety_check(tensor, t, QuartetSplit::S14_23));
  EXPECT_EQ(rank_at_point(map, 2, quartet_split(t, QuartetSplit::S13_24), point), 4u);
  EXPECT_TRUE(variety_membership_minors(tensor, t, 2, 2));
  EXPECT_FALSE(variety_membership_minors(tensor, t, 2, 1));
  std::vector<Rat> wrong_shape(8, Rat(1));
  EXPECT_THROW(named_variety_check(wrong_shape, t, QuartetSplit::S12_34), ValidationError);
}

TEST(Flattening, JukesCantorFiveLeafEdgeRanks) {
  auto model = jc(five());
  JointMap map(model);
  CounterRng rng(8);
  auto point = random_point(map.parameters(), rng);
  auto tensor = map.evaluate(point);
  EXPECT_TRUE(variety_membership_minors(tensor, five(), 4, 4));
  EXPECT_FALSE(variety_membership_minors(tensor, five(), 4, 3));
}

TEST(Flattening, HankelSpecialization) {
  JointMap map(gm2(star4()));
  auto symbols = coordinate_symbols(map);
  auto diag = diagonal_substitution(4);
  for (auto which : {QuartetSplit::S12_34, QuartetSplit::S13_24, QuartetSplit::S14_23}) {
    MatP m = flatten(symbols, 2, quartet_split(star4(), which));
    MatP d(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) d(r, c) = poly_substitute(m(r, c), diag);
    EXPECT_EQ(distinct_rows_cols(d), hankel_matrix());
  }
  EXPECT_EQ(determinant(hankel_matrix()), parse_poly("p0*p2*p4 - p0*p3^2 - p1^2*p4 + 2*p1*p2*p3 - p2^3"));
}

TEST(Vanishing, HankelDeterminantOnHomogeneousSecant) {
  auto model = make_model(star4(), ModelKind::GeneralMarkov, RootMode::Free, opts(2, true));
  JointMap map(model);
  std::unordered_map<VarId, Poly> names;
  for (int i = 0; i <= 4; ++i) {
    std::string bits = std::string(4 - i, '0') + std::string(i, '1');
    names[var("p" + std::to_string(i))] = p(bits);
  }
  Poly cubic = poly_substitute(determinant(hankel_matrix()), names);
  EXPECT_TRUE(vanishing_check(cubic, map, VanishMode::Symbolic).vanishes);
  EXPECT_TRUE(vanishing_check(cubic, map, VanishMode::Randomized).vanishes);
  Poly minor = p("0000") * p("0011") - p("0001") * p("0001");
  auto r = vanishing_check(minor, map, VanishMode::Randomized);
  EXPECT_FALSE(r.vanishes);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness_value, 0);
  EXPECT_EQ(r.points, 1u);
  EXPECT_THROW(vanishing_check(parse_poly("zz_not_a_coordinate"), map, VanishMode::Symbolic), ValidationError);
}

TEST(Interpolation, HankelCubicOnFiveCoordinates) {
  auto model = make_model(star4(), ModelKind::GeneralMarkov, RootMode::Free, opts(2, true));
  JointMap map(model);
  std::vector<std::size_t> basis;
  for (const char* s : {"p0000", "p0001", "p0011", "p0111", "p1111"}) basis.push_back(index_of(map, s));
  auto result = interpolate_vanishing_forms(map, 3, basis);
  ASSERT_EQ(result.forms.size(), 1u);
  EXPECT_EQ(result.monomials, 35u);
  Poly expected = p("0000") * p("0011") * p("1111") - p("0000") * p("0111") * p("0111") -
                  p("0001") * p("0001") * p("1111") + Rat(2) * p("0001") * p("0011") * p("0111") -
                  p("0011") * p("0011") * p("0011");
  EXPECT_EQ(result.forms.front(), normalize(expected));
  EXPECT_TRUE(interpolate_vanishing_forms(map, 2, basis).forms.empty());
}

TEST(Interpolation, JukesCantorThreeLeafCubic) {
  JointMap jm(jc(three()));
  auto acc = PolyListMap::accumulated(jm);
  std::vector<std::size_t> basis = {0, 1, 2, 3, 4};
  auto cubic = interpolate_vanishing_forms(acc, 3, basis);
  ASSERT_EQ(cubic.forms.size(), 1u);
  EXPECT_EQ(cubic.forms.front().size(), 19u);
  EXPECT_TRUE(vanishing_check(cubic.forms.front(), acc, VanishMode::Symbolic).vanishes);
  EXPECT_TRUE(interpolate_vanishing_forms(acc, 1, basis).forms.empty());
  EXPECT_TRUE(interpolate_vanishing_forms(acc, 2, basis).forms.empty());

  // Rewritten in Fourier coordinates the cubic is the binomial.
  MonomialMap fm(jm.model());
  auto forms = accumulated_fourier_forms(jm, fm, symmetry_classes(jm));
  std::vector<Poly> fourier_forms;
  for (const char* name : {"q0011", "q1110", "q1101", "q0000", "q1111"}) fourier_forms.push_back(forms.at(*fm.find(name)));
  Poly binomial = fourier_forms[0] * fourier_forms[1] * fourier_forms[2] -
                  fourier_forms[3] * fourier_forms[4] * fourier_forms[4];
  EXPECT_EQ(normalize(binomial), cubic.forms.front());
}

TEST(Interpolation, HomogeneousLinearRelations) {
  JointMap map(make_model(three(), ModelKind::GeneralMarkov, RootMode::Free, opts(2, true)));
  std::vector<std::size_t> all(8);
  for (std::size_t i = 0; i < 8; ++i) all[i] = i;
  auto result = interpolate_vanishing_forms(map, 1, all);
  ASSERT_EQ(result.forms.size(), 2u);
  std::set<std::string> got;
  for (const auto& f : result.forms) got.insert(to_string(f));
  // Any basis of the span; check membership of the expected relations.
  MatQ m(3, 8, Rat(0));
  auto fill = [&](std::size_t row, const Poly& f) {
    for (std::size_t i = 0; i < 8; ++i) m(row, i) = f.coefficient(Mono::of(var(map.coordinate_name(i))));
  };
  fill(0, result.forms[0]);
  fill(1, result.forms[1]);
  fill(2, p("001") - p("010"));
  EXPECT_EQ(mat_rank(m), 2u);
  fill(2, p("101") - p("110"));
  EXPECT_EQ(mat_rank(m), 2u);
}

TEST(Interpolation, ReproducibleUnderSeeds) {
  JointMap jm(jc(three()));
  auto acc = PolyListMap::accumulated(jm);
  std::vector<std::size_t> basis = {0, 1, 2, 3, 4};
  auto a = interpolate_vanishing_forms(acc, 3, basis, 1);
  auto b = interpolate_vanishing_forms(acc, 3, basis, 1);
  auto c = interpolate_vanishing_forms(acc, 3, basis, 99);
  EXPECT_EQ(a.forms, b.forms);
  EXPECT_EQ(a.forms, c.forms);
}

TEST(Interpolation, MonomialOrder) {
  auto e = monomial_exponents(3, 2);
  ASSERT_EQ(e.size(), 6u);
  EXPECT_EQ(e.front(), (std::vector<unsigned>{2, 0, 0}));
  EXPECT_EQ(e.back(), (std::vector<unsigned>{0, 0, 2}));
  EXPECT_EQ(monomial_exponents(6, 8).size(), 1287u);
}

TEST(Jacobian, MatchesFiniteDifferences) {
  JointMap map(gm2(three()));
  CounterRng rng(9);
  auto point = random_point(map.parameters(), rng);
  auto jac = jacobian_at(map, point);
  auto params = map.parameters();
  FloatAssignment base;
  for (const auto& [v, x] : point) base[v] = x.get_d();
  const double h = 1e-6;
  for (std::size_t c = 0; c < params.size(); ++c) {
    auto plus = base;
    auto minus = base;
    plus[params[c]] += h;
    minus[params[c]] -= h;
    auto fp = map.evaluate(plus);
    auto fm = map.evaluate(minus);
    for (std::size_t r = 0; r < map.coordinate_count(); ++r) {
      double fd = (fp[r] - fm[r]) / (2 * h);
      EXPECT_NEAR(jac(r, c).get_d(), fd, 1e-5 * (1 + std::abs(fd)));
    }
  }
}

TEST(Jacobian, ModelDimensions) {
  EXPECT_EQ(jacobian_dimension(JointMap(jc(three()))).projective_dim, 3);
  EXPECT_EQ(jacobian_dimension(MonomialMap(jc(three()))).projective_dim, 3);
  EXPECT_EQ(jacobian_dimension(JointMap(jc(quartet()))).projective_dim, 5);
  EXPECT_EQ(jacobian_dimension(MonomialMap(jc(five()))).projective_dim, 7);
  EXPECT_EQ(jacobian_dimension(PolyListMap::fourier_mixture(jc(quartet()), 2)).projective_dim, 11);
  auto mix = mixture_map(quartet(), ModelKind::JcDna, RootMode::Uniform, 2);
  EXPECT_EQ(jacobian_dimension(mix).projective_dim, 11);
  auto star = jacobian_dimension(JointMap(gm2(star4())));
  EXPECT_EQ(star.projective_dim, 9);
  for (auto r : star.ranks) EXPECT_EQ(r, star.affine_rank);
}

TEST(Mixture, CoordinatesAreWeightedSums) {
  auto mix = mixture_map(three(), ModelKind::JcDna, RootMode::Uniform, 2);
  EXPECT_EQ(mix.parameters().size(), 18u);
  EXPECT_EQ(var_name(mix.weights()[0]), "s0");
  EXPECT_EQ(mix.coordinate_name(0), "p000");
  std::unordered_map<VarId, Poly> rename;
  for (VarId v : mix.component(0).parameters()) {
    std::string n = var_name(v);
    rename[v] = Poly::variable(n.substr(0, n.size() - 3));
  }
  JointMap single(jc(three()));
  EXPECT_EQ(poly_substitute_partial(mix.component(0).coordinate(5), rename), single.coordinate(5));
  CounterRng rng(10);
  auto point = random_point(mix.parameters(), rng);
  auto values = mix.evaluate(point);
  for (std::size_t i = 0; i < mix.coordinate_count(); i += 7) EXPECT_EQ(values[i], poly_eval(mix.coordinate(i), point));
  auto gm = mixture_map(three(), ModelKind::GeneralMarkov, RootMode::Free, 2, opts(2));
  EXPECT_TRUE(gm.weights().empty());
  std::vector<MixtureComponent> bad = {{three(), ModelKind::JcDna, RootMode::Uniform, {}},
                                       {three(), ModelKind::JcBinary, RootMode::Uniform, {}}};
  EXPECT_THROW(mixture_map(bad), ValidationError);
}

TEST(Mixture, DeterminantOfM1VanishesOnTheSecant) {
  auto mix = PolyListMap::fourier_mixture(jc(quartet()), 2);
  auto m1 = rows({{"101110", "101101", "101111"}, {"011110", "011101", "011111"}, {"111110", "111101", "111111"}}, q);
  auto r = vanishing_check(determinant(m1), mix, VanishMode::Randomized, kDefaultSeed, 25);
  EXPECT_TRUE(r.vanishes);
  EXPECT_EQ(r.points, 25u);
  EXPECT_FALSE(vanishing_check(minors(m1, 2).front(), mix, VanishMode::Randomized).vanishes);
  MonomialMap single(jc(quartet()));
  EXPECT_TRUE(vanishing_check(minors(m1, 2).front(), single, VanishMode::Randomized).vanishes);
}

TEST(JukesCantorFive, DeterminantalClosureMinorsVanish) {
  MonomialMap fm(jc(five()));
  std::vector<MatP> mats = {
      rows({{"11001111", "11000011", "11001110", "11001101", "11000000"},
            {"00001111", "00000011", "00001110", "00001101", "00000000"}}, q),
      rows({{"10111000", "10110101", "10110110", "10111011", "10110111", "10111101", "10111110", "10111111"},
            {"11111000", "11110101", "11110110", "11111011", "11110111", "11111101", "11111110", "11111111"},
            {"01111000", "01110101", "01110110", "01111011", "01110111", "01111101", "01111110", "01111111"}}, q),
      rows({{"11111000", "11000000", "01111000", "10111000", "00000000"},
            {"11111011", "11000011", "01111011", "10111011", "00000011"}}, q),
      rows({{"00001101", "10110101", "01110101", "11001101", "11110101", "10111101", "01111101", "11111101"},
            {"00001111", "10110111", "01110111", "11001111", "11110111", "10111111", "01111111", "11111111"},
            {"00001110", "10110110", "01110110", "11001110", "11110110", "10111110", "01111110", "11111110"}}, q),
  };
  EXPECT_FALSE(fm.find("q10011000").has_value());
  std::size_t count = 0;
  for (const auto& m : mats) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        ASSERT_TRUE(fm.find(var_name(m(r, c).leading_term().mono.factors().front().first)).has_value());
      }
    for (const auto& minor : minors(m, 2)) {
      EXPECT_TRUE(vanishing_check(minor, fm, VanishMode::Randomized, kDefaultSeed, 25).vanishes) << to_string(minor);
      EXPECT_TRUE(vanishing_check(minor, fm, VanishMode::Symbolic).vanishes);
      ++count;
    }
  }
  EXPECT_EQ(count, 10u + 84u + 10u + 84u);
}
