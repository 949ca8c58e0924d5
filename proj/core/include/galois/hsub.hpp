#pragma once

#include "galois/context.hpp"
#include "galois/rules.hpp"
#include "galois/taxonomy.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace galois {

enum class Provenance { seed, right_gen, left_gen };

std::string_view to_string(Provenance p);

struct GeneralizedRule {
  GeneralizedMotif premise;
  GeneralizedMotif conclusion;
  Rational support{0};
  Rational confidence{0};
  Provenance provenance = Provenance::seed;
  /// Hierarchy nodes this rule generalizes by exactly one hat step.
  std::vector<std::size_t> parent_rules;
  /// Rule-base id when the node is a seed.
  std::optional<RuleId> seed_rule;
};

/// Statistics from extended images: support = |img(P ∪ C)| / |I|,
/// confidence = |img(P ∪ C)| / |img(P)|.
RuleStats generalized_stats(const FormalContext& ctx, const Taxonomy& tax, const GeneralizedMotif& premise,
                            const GeneralizedMotif& conclusion);

/// Sides are disjoint and no premise term is an ancestor or descendant of a
/// conclusion term (excludes A ⇒ Â and Â ⇒ A).
bool is_informative(const Taxonomy& tax, const GeneralizedMotif& premise, const GeneralizedMotif& conclusion);

/// Lifts a mined rule into taxonomy terms with its statistics recomputed.
GeneralizedRule lift_rule(const AssociationRule& rule, const FormalContext& ctx, const Taxonomy& tax);

/// True iff `general`'s premise and conclusion are term-wise ancestors of
/// `specific`'s under some bijection. Different side sizes give false.
bool h_subsumes(const Taxonomy& tax, const GeneralizedRule& specific, const GeneralizedRule& general);

/// Scheme ❶: one candidate per hat variant of the conclusion. Support and
/// confidence can only grow, so survivors are not re-thresholded.
std::vector<GeneralizedRule> generalize_right(const GeneralizedRule& rule, const Taxonomy& tax,
                                              const FormalContext& ctx, const Thresholds& th);

/// Scheme ❷: one candidate per hat variant of the premise; candidates whose
/// confidence falls under minconf are dropped.
std::vector<GeneralizedRule> generalize_left(const GeneralizedRule& rule, const Taxonomy& tax,
                                             const FormalContext& ctx, const Thresholds& th);

struct HEdge {
  std::size_t specific = 0;
  std::size_t general = 0;
  Provenance scheme = Provenance::right_gen;

  friend bool operator==(const HEdge&, const HEdge&) = default;
};

class HHierarchy {
public:
  const std::vector<GeneralizedRule>& nodes() const noexcept { return nodes_; }
  const std::vector<HEdge>& edges() const noexcept { return edges_; }
  /// Node indices of the seeds, in the order they were given.
  const std::vector<std::size_t>& seeds() const noexcept { return seeds_; }

  std::optional<std::size_t> find(const GeneralizedMotif& premise, const GeneralizedMotif& conclusion) const;

private:
  friend HHierarchy build_h_hierarchy(std::span<const AssociationRule>, const Taxonomy&, const FormalContext&,
                                      const Thresholds&);

  std::size_t add_node(GeneralizedRule rule);

  std::vector<GeneralizedRule> nodes_;
  std::vector<HEdge> edges_;
  std::vector<std::size_t> seeds_;
  std::map<std::pair<GeneralizedMotif, GeneralizedMotif>, std::size_t> index_;
};

/// Breadth-first closure of both generalization schemes from the seeds.
/// Nodes are deduplicated by (premise, conclusion), so several seeds share
/// one hierarchy. Throws ArgumentError for an invalid or non-informative seed.
HHierarchy build_h_hierarchy(std::span<const AssociationRule> seeds, const Taxonomy& tax, const FormalContext& ctx,
                             const Thresholds& th);

} // namespace galois
