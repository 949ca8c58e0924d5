#include "galois/hsub.hpp"

#include "galois/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace galois {

std::string_view to_string(Provenance p) {
  switch (p) {
  case Provenance::seed: return "seed";
  case Provenance::right_gen: return "right";
  case Provenance::left_gen: return "left";
  }
  return "seed";
}

RuleStats generalized_stats(const FormalContext& ctx, const Taxonomy& tax, const GeneralizedMotif& premise,
                            const GeneralizedMotif& conclusion) {
  const auto n = static_cast<std::int64_t>(ctx.num_individuals());
  const auto both = static_cast<std::int64_t>(extended_image(ctx, tax, premise | conclusion).size());
  const auto lhs = static_cast<std::int64_t>(extended_image(ctx, tax, premise).size());
  return {Rational(both, n), lhs == 0 ? Rational(0) : Rational(both, lhs)};
}

bool is_informative(const Taxonomy& tax, const GeneralizedMotif& premise, const GeneralizedMotif& conclusion) {
  bool ok = true;
  premise.for_each([&](std::size_t a) {
    conclusion.for_each([&](std::size_t b) {
      if (tax.related(a, b)) ok = false;
    });
  });
  return ok;
}

GeneralizedRule lift_rule(const AssociationRule& rule, const FormalContext& ctx, const Taxonomy& tax) {
  GeneralizedRule g;
  g.premise = tax.lift(rule.premise);
  g.conclusion = tax.lift(rule.conclusion);
  const auto stats = generalized_stats(ctx, tax, g.premise, g.conclusion);
  g.support = stats.support;
  g.confidence = stats.confidence;
  g.provenance = Provenance::seed;
  g.seed_rule = rule.id;
  return g;
}

namespace {

// Perfect matching from specific terms to general terms along "is an ancestor of".
bool ancestor_bijection(const Taxonomy& tax, const GeneralizedMotif& specific, const GeneralizedMotif& general) {
  if (specific.size() != general.size()) return false;
  const auto lower = specific.members();
  const auto upper = general.members();
  std::vector<int> owner(upper.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& used) {
    const auto& anc = tax.ancestor_set(lower[i]);
    for (std::size_t j = 0; j < upper.size(); ++j) {
      if (used[j] || !anc.contains(upper[j])) continue;
      used[j] = true;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), used)) {
        owner[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < lower.size(); ++i) {
    std::vector<bool> used(upper.size(), false);
    if (!augment(i, used)) return false;
  }
  return true;
}

} // namespace

bool h_subsumes(const Taxonomy& tax, const GeneralizedRule& specific, const GeneralizedRule& general) {
  tax.check(specific.premise);
  tax.check(general.premise);
  return ancestor_bijection(tax, specific.premise, general.premise) &&
         ancestor_bijection(tax, specific.conclusion, general.conclusion);
}

namespace {

GeneralizedRule candidate(const FormalContext& ctx, const Taxonomy& tax, GeneralizedMotif premise,
                          GeneralizedMotif conclusion, Provenance provenance) {
  GeneralizedRule g;
  const auto stats = generalized_stats(ctx, tax, premise, conclusion);
  g.premise = std::move(premise);
  g.conclusion = std::move(conclusion);
  g.support = stats.support;
  g.confidence = stats.confidence;
  g.provenance = provenance;
  return g;
}

} // namespace

std::vector<GeneralizedRule> generalize_right(const GeneralizedRule& rule, const Taxonomy& tax,
                                              const FormalContext& ctx, const Thresholds&) {
  std::vector<GeneralizedRule> out;
  for (auto& v : hat_variants(tax, rule.conclusion)) {
    if (!is_informative(tax, rule.premise, v)) continue;
    out.push_back(candidate(ctx, tax, rule.premise, std::move(v), Provenance::right_gen));
  }
  return out;
}

std::vector<GeneralizedRule> generalize_left(const GeneralizedRule& rule, const Taxonomy& tax,
                                             const FormalContext& ctx, const Thresholds& th) {
  std::vector<GeneralizedRule> out;
  for (auto& v : hat_variants(tax, rule.premise)) {
    if (!is_informative(tax, v, rule.conclusion)) continue;
    auto g = candidate(ctx, tax, std::move(v), rule.conclusion, Provenance::left_gen);
    if (g.confidence < th.minconf || g.support < th.minsupp) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::optional<std::size_t> HHierarchy::find(const GeneralizedMotif& premise,
                                            const GeneralizedMotif& conclusion) const {
  auto it = index_.find({premise, conclusion});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t HHierarchy::add_node(GeneralizedRule rule) {
  const auto id = nodes_.size();
  index_.emplace(std::make_pair(rule.premise, rule.conclusion), id);
  nodes_.push_back(std::move(rule));
  return id;
}

HHierarchy build_h_hierarchy(std::span<const AssociationRule> seeds, const Taxonomy& tax, const FormalContext& ctx,
                             const Thresholds& th) {
  th.validate();
  HHierarchy h;
  std::deque<std::size_t> queue;
  for (const auto& seed : seeds) {
    auto g = lift_rule(seed, ctx, tax);
    const auto text = format_rule(ctx, seed.premise, seed.conclusion);
    if (seed.conclusion.empty()) throw ArgumentError("seed '" + text + "' has an empty conclusion");
    if (g.support < th.minsupp || g.confidence < th.minconf) throw ArgumentError("seed '" + text + "' is not valid");
    if (!is_informative(tax, g.premise, g.conclusion))
      throw ArgumentError("seed '" + text + "' is not informative");
    if (auto existing = h.find(g.premise, g.conclusion)) {
      if (std::find(h.seeds_.begin(), h.seeds_.end(), *existing) == h.seeds_.end()) h.seeds_.push_back(*existing);
      continue;
    }
    const auto id = h.add_node(std::move(g));
    h.seeds_.push_back(id);
    queue.push_back(id);
  }

  while (!queue.empty()) {
    const auto current = queue.front();
    queue.pop_front();
    auto candidates = generalize_right(h.nodes_[current], tax, ctx, th);
    auto left = generalize_left(h.nodes_[current], tax, ctx, th);
    candidates.insert(candidates.end(), std::make_move_iterator(left.begin()), std::make_move_iterator(left.end()));
    for (auto& c : candidates) {
      const auto scheme = c.provenance;
      std::size_t target;
      if (auto existing = h.find(c.premise, c.conclusion)) {
        target = *existing;
      } else {
        target = h.add_node(std::move(c));
        queue.push_back(target);
      }
      auto& parents = h.nodes_[target].parent_rules;
      if (std::find(parents.begin(), parents.end(), current) == parents.end()) {
        parents.push_back(current);
        h.edges_.push_back({current, target, scheme});
      }
    }
  }
  return h;
}

} // namespace galois
