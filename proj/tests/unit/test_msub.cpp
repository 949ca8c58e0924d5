#include "fixtures.hpp"

#include "galois/error.hpp"
#include "galois/msub.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace galois;
using galois::testing::courses;
using galois::testing::half_half;

namespace {

struct CourseFixture : ::testing::Test {
  FormalContext ctx = courses();
  ConceptLattice lat = build_lattice(ctx);
  RuleBase rb = extract_rules(lat, ctx, half_half());
  std::vector<REnsemble> ensembles = group_rensembles(rb, lat);
  MHierarchy h = build_m_hierarchy(lat, ensembles);

  const REnsemble& at(std::initializer_list<std::string_view> intent) {
    auto id = lat.find_by_intent(ctx.motif(intent));
    EXPECT_TRUE(id.has_value());
    return h.node(*id);
  }
  RuleId rule(std::initializer_list<std::string_view> premise, std::initializer_list<std::string_view> conclusion) {
    auto id = rb.find(ctx.motif(premise), ctx.motif(conclusion));
    EXPECT_TRUE(id.has_value());
    return id.value_or(0);
  }
};

} // namespace

TEST_F(CourseFixture, GroupsRulesByOriginConcept) {
  EXPECT_EQ(ensembles.size(), 5u);
  const auto& e = at({"Algèbre", "Algorithmique"});
  std::set<RuleId> members(e.rules.begin(), e.rules.end());
  const std::set<RuleId> expected{rule({}, {"Algèbre"}), rule({"Algorithmique"}, {"Algèbre"}),
                                  rule({}, {"Algorithmique", "Algèbre"}), rule({"Algèbre"}, {"Algorithmique"})};
  EXPECT_EQ(members, expected);
  std::size_t total = 0;
  for (const auto& en : ensembles) {
    total += en.rules.size();
    for (auto id : en.rules) {
      EXPECT_EQ(rb.at(id).origin_concept, en.concept_id);
      EXPECT_EQ(rb.at(id).support, en.support);
    }
  }
  EXPECT_EQ(total, rb.size());
}

TEST(GroupREnsembles, EmptyRuleBase) {
  const auto ctx = courses();
  const auto lat = build_lattice(ctx);
  EXPECT_TRUE(group_rensembles(RuleBase({}, half_half()), lat).empty());
  const auto h = build_m_hierarchy(lat, {});
  EXPECT_TRUE(h.nodes().empty());
  EXPECT_TRUE(h.roots().empty());
}

TEST(GroupREnsembles, ThreeValidRulesOfOneMotifShareAnEnsemble) {
  // Motif {respire, pond, vole}; of its seven candidates only R1..R3 are kept.
  const FormalContext ctx({"a", "b", "c", "d"}, {"respire", "pond", "vole"},
                          {{true, true, true}, {true, true, true}, {true, false, false}, {false, true, false}});
  const auto lat = build_lattice(ctx);
  const auto motif = ctx.motif({"respire", "pond", "vole"});
  const auto concept_id = *lat.find_by_intent(motif);
  std::vector<AssociationRule> rules;
  for (auto premise : {"respire", "pond", "vole"}) {
    AssociationRule r;
    r.premise = ctx.motif({premise});
    r.conclusion = motif - r.premise;
    r.origin_concept = concept_id;
    r.support = lat.support(concept_id);
    r.confidence = rule_stats(ctx, lat, r.premise, r.conclusion).confidence;
    rules.push_back(r);
  }
  const auto ensembles = group_rensembles(RuleBase(rules, {Rational(0), Rational(0)}), lat);
  ASSERT_EQ(ensembles.size(), 1u);
  EXPECT_EQ(ensembles[0].rules.size(), 3u);
  EXPECT_EQ(ensembles[0].motif, motif);
}

TEST_F(CourseFixture, MSubsumption) {
  const auto& algo = at({"Algorithmique"});
  const auto& alg_algo = at({"Algèbre", "Algorithmique"});
  EXPECT_TRUE(m_subsumes(lat, algo, algo));
  EXPECT_TRUE(m_subsumes(lat, algo, alg_algo));
  EXPECT_FALSE(m_subsumes(lat, alg_algo, algo));
  EXPECT_FALSE(m_subsumes(lat, at({"PeertoPeer"}), alg_algo));

  REnsemble foreign = algo;
  foreign.motif = ctx.motif({"Biologie"});
  EXPECT_THROW(m_subsumes(lat, foreign, algo), ArgumentError);
}

TEST_F(CourseFixture, HierarchyStructure) {
  const auto algo = at({"Algorithmique"}).concept_id;
  const auto proba = at({"Probabilité"}).concept_id;
  const auto p2p = at({"PeertoPeer"}).concept_id;
  const auto alg_algo = at({"Algèbre", "Algorithmique"}).concept_id;
  const auto proba_algo = at({"Probabilité", "Algorithmique"}).concept_id;

  auto down = navigate(h, algo, NavDirection::specialize);
  EXPECT_NE(std::find(down.begin(), down.end(), alg_algo), down.end());
  EXPECT_NE(std::find(down.begin(), down.end(), proba_algo), down.end());

  std::vector<ConceptId> roots{algo, proba, p2p};
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(h.roots(), roots);
  for (auto r : h.roots()) EXPECT_TRUE(navigate(h, r, NavDirection::generalize).empty());
  EXPECT_TRUE(navigate(h, alg_algo, NavDirection::specialize).empty());
  EXPECT_EQ(navigate(h, proba_algo, NavDirection::generalize).size(), 2u);
  EXPECT_THROW(navigate(h, lat.top(), NavDirection::specialize), LookupError);
}

TEST(BuildMHierarchy, SingleEnsemble) {
  const FormalContext ctx({"a", "b"}, {"x"}, {{true}, {true}});
  const auto lat = build_lattice(ctx);
  const auto rb = extract_rules(lat, ctx, half_half());
  const auto h = build_m_hierarchy(lat, group_rensembles(rb, lat));
  ASSERT_EQ(h.nodes().size(), 1u);
  EXPECT_TRUE(h.edges().empty());
  EXPECT_EQ(h.roots().size(), 1u);
}

namespace {

void check_hierarchy(const ConceptLattice& lat, const MHierarchy& h) {
  const auto& nodes = h.nodes();
  for (const auto& a : nodes) {
    EXPECT_TRUE(m_subsumes(lat, a, a));
    for (const auto& b : nodes) {
      if (m_subsumes(lat, a, b) && m_subsumes(lat, b, a)) EXPECT_EQ(a.concept_id, b.concept_id);
      for (const auto& c : nodes)
        if (m_subsumes(lat, a, b) && m_subsumes(lat, b, c)) EXPECT_TRUE(m_subsumes(lat, a, c));
    }
  }
  for (auto [g, s] : h.edges()) {
    EXPECT_TRUE(lat.at(s).extent.is_proper_subset_of(lat.at(g).extent));
    EXPECT_LE(h.node(s).support, h.node(g).support);
    // No owning concept strictly between the two ends.
    for (const auto& t : nodes) {
      const bool between = lat.at(s).extent.is_proper_subset_of(lat.at(t.concept_id).extent) &&
                           lat.at(t.concept_id).extent.is_proper_subset_of(lat.at(g).extent);
      EXPECT_FALSE(between);
    }
  }
  // Every pair in the order is connected by a specialize path.
  std::set<ConceptId> reached;
  std::vector<ConceptId> stack(h.roots().begin(), h.roots().end());
  while (!stack.empty()) {
    auto n = stack.back();
    stack.pop_back();
    if (!reached.insert(n).second) continue;
    for (auto c : navigate(h, n, NavDirection::specialize)) stack.push_back(c);
  }
  EXPECT_EQ(reached.size(), nodes.size());
}

} // namespace

TEST_F(CourseFixture, OrderAxioms) { check_hierarchy(lat, h); }

TEST(BuildMHierarchy, OrderAxiomsOnRandomContexts) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ctx = galois::testing::random_context(rng, 8, 7);
    const auto lat = build_lattice(ctx);
    const auto rb = extract_rules(lat, ctx, {Rational(1, 8), Rational(1, 3)});
    check_hierarchy(lat, build_m_hierarchy(lat, group_rensembles(rb, lat)));
  }
}

TEST(BuildMHierarchy, ZooHasLeafEnsembles) {
  const auto ctx = galois::testing::zoo();
  const auto lat = build_lattice(ctx);
  const auto rb = extract_rules(lat, ctx, {Rational(3, 10), Rational(1, 2)});
  const auto h = build_m_hierarchy(lat, group_rensembles(rb, lat));
  std::size_t leaves = 0;
  for (const auto& n : h.nodes())
    if (navigate(h, n.concept_id, NavDirection::specialize).empty()) ++leaves;
  EXPECT_GT(leaves, 0u);
  check_hierarchy(lat, h);
}
