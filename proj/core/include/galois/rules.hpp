#pragma once

#include "galois/context.hpp"
#include "galois/lattice.hpp"
#include "galois/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace galois {

struct Thresholds {
  Rational minsupp{0};
  Rational minconf{0};

  /// Throws ArgumentError when either value lies outside [0, 1].
  void validate() const;
};

enum class RuleStatus { total, partial };

std::string_view to_string(RuleStatus status);

using RuleId = std::size_t;

struct AssociationRule {
  RuleId id = 0;
  Motif premise;
  Motif conclusion;
  /// Concept whose intent is the closure of premise ∪ conclusion.
  ConceptId origin_concept = 0;
  Rational support{0};
  Rational confidence{0};
  RuleStatus status = RuleStatus::partial;
  bool informative = false;
};

struct Classification {
  RuleStatus status;
  bool informative;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Total iff confidence is exactly 1; informative iff the two sides are disjoint.
Classification classify(const AssociationRule& rule);

/// Valid rules in a fixed order: by origin concept, then premise, then conclusion.
/// Rule ids are positions in that order.
class RuleBase {
public:
  RuleBase() = default;
  RuleBase(std::vector<AssociationRule> rules, Thresholds thresholds);

  const std::vector<AssociationRule>& rules() const noexcept { return rules_; }
  const Thresholds& thresholds() const noexcept { return thresholds_; }
  const std::map<ConceptId, std::vector<RuleId>>& by_concept() const noexcept { return by_concept_; }
  std::size_t size() const noexcept { return rules_.size(); }

  const AssociationRule& at(RuleId id) const;
  std::optional<RuleId> find(const Motif& premise, const Motif& conclusion) const;

  std::size_t count_total() const;
  std::size_t count_partial() const { return rules_.size() - count_total(); }

private:
  std::vector<AssociationRule> rules_;
  Thresholds thresholds_;
  std::map<ConceptId, std::vector<RuleId>> by_concept_;
};

struct ExtractOptions {
  /// Concepts with larger intents would need 2^n generator checks; refused with CapacityError.
  std::size_t max_intent_size = 24;
};

/// Depth-first extraction from the top concept.
///
/// A concept is visited only while its support reaches minsupp; pruned
/// concepts stop the descent along that branch. For each visited concept
/// with intent P, every non-empty motif M ⊆ P whose minimal closed superset
/// is that concept yields the candidates A ⇒ M∖A for each strict subset
/// A ⊂ M (empty premise included). Candidates under minconf are dropped.
RuleBase extract_rules(const ConceptLattice& lat, const FormalContext& ctx, const Thresholds& th,
                       ExtractOptions options = {});

struct RuleStats {
  Rational support;
  Rational confidence;

  friend bool operator==(const RuleStats&, const RuleStats&) = default;
};

/// Support and confidence of premise ⇒ conclusion read off the lattice.
/// Throws ArgumentError when both sides are empty.
RuleStats rule_stats(const FormalContext& ctx, const ConceptLattice& lat, const Motif& premise,
                     const Motif& conclusion);

/// "A, B => C"; an empty premise renders as "=> C".
std::string format_rule(const FormalContext& ctx, const Motif& premise, const Motif& conclusion);

/// Parses "A,B=>C" (whitespace tolerant, empty premise allowed) into motifs of `ctx`.
std::pair<Motif, Motif> parse_rule_text(const FormalContext& ctx, std::string_view text);

} // namespace galois
