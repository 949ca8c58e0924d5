#include "galois/rules.hpp"

#include "galois/error.hpp"

#include <algorithm>
#include <set>

namespace galois {

void Thresholds::validate() const {
  auto in_unit = [](const Rational& r) { return r >= 0 && r <= 1; };
  if (!in_unit(minsupp)) throw ArgumentError("minsupp " + to_fraction_string(minsupp) + " outside [0,1]");
  if (!in_unit(minconf)) throw ArgumentError("minconf " + to_fraction_string(minconf) + " outside [0,1]");
}

std::string_view to_string(RuleStatus status) { return status == RuleStatus::total ? "total" : "partial"; }

Classification classify(const AssociationRule& rule) {
  return {rule.confidence == Rational(1) ? RuleStatus::total : RuleStatus::partial, !rule.premise.intersects(rule.conclusion)};
}

RuleBase::RuleBase(std::vector<AssociationRule> rules, Thresholds thresholds)
    : rules_(std::move(rules)), thresholds_(thresholds) {
  std::sort(rules_.begin(), rules_.end(), [](const AssociationRule& a, const AssociationRule& b) {
    if (a.origin_concept != b.origin_concept) return a.origin_concept < b.origin_concept;
    if (a.premise.size() != b.premise.size()) return a.premise.size() < b.premise.size();
    if (a.premise != b.premise) return a.premise < b.premise;
    return a.conclusion < b.conclusion;
  });
  std::set<std::pair<Motif, Motif>> seen;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    auto& r = rules_[i];
    if (!seen.emplace(r.premise, r.conclusion).second)
      throw std::logic_error("duplicate rule in rule base; the lattice is inconsistent");
    r.id = i;
    by_concept_[r.origin_concept].push_back(i);
  }
}

const AssociationRule& RuleBase::at(RuleId id) const {
  if (id >= rules_.size()) throw LookupError("unknown rule id " + std::to_string(id));
  return rules_[id];
}

std::optional<RuleId> RuleBase::find(const Motif& premise, const Motif& conclusion) const {
  for (const auto& r : rules_)
    if (r.premise == premise && r.conclusion == conclusion) return r.id;
  return std::nullopt;
}

std::size_t RuleBase::count_total() const {
  return static_cast<std::size_t>(
      std::count_if(rules_.begin(), rules_.end(), [](const auto& r) { return r.status == RuleStatus::total; }));
}

namespace {

// Every subset of `members`, as motifs over a universe of `n`.
template <class F>
void for_each_subset(const std::vector<std::size_t>& members, std::size_t n, F&& f) {
  const std::uint64_t count = std::uint64_t{1} << members.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Motif m(n);
    for (std::size_t k = 0; k < members.size(); ++k)
      if (mask & (std::uint64_t{1} << k)) m.insert(members[k]);
    f(m);
  }
}

class Extractor {
public:
  Extractor(const ConceptLattice& lat, const FormalContext& ctx, const Thresholds& th, ExtractOptions options)
      : lat_(lat), ctx_(ctx), th_(th), options_(options), visited_(lat.size(), false) {}

  std::vector<AssociationRule> run() {
    visit(lat_.top());
    return std::move(rules_);
  }

private:
  void visit(ConceptId id) {
    if (visited_[id]) return;
    visited_[id] = true;
    if (lat_.support(id) < th_.minsupp) return;
    extract_from(lat_.at(id));
    for (auto child : lat_.children(id)) visit(child);
  }

  void extract_from(const Concept& c) {
    if (c.intent.empty()) return;
    if (c.intent.size() > options_.max_intent_size)
      throw CapacityError("concept intent of size " + std::to_string(c.intent.size()) + " exceeds the limit of " +
                          std::to_string(options_.max_intent_size));
    const auto members = c.intent.members();
    const auto n = ctx_.num_properties();
    const Rational support = lat_.support(c.id);
    for_each_subset(members, n, [&](const Motif& motif) {
      if (motif.empty() || minimal_closed_superset(lat_, motif) != c.id) return;
      for_each_subset(motif.members(), n, [&](const Motif& premise) {
        if (premise == motif) return;
        const Rational premise_support = lat_.support(minimal_closed_superset(lat_, premise));
        const Rational confidence = premise_support == Rational(0) ? Rational(0) : support / premise_support;
        if (confidence < th_.minconf) return;
        AssociationRule r;
        r.premise = premise;
        r.conclusion = motif - premise;
        r.origin_concept = c.id;
        r.support = support;
        r.confidence = confidence;
        const auto cls = classify(r);
        r.status = cls.status;
        r.informative = cls.informative;
        rules_.push_back(std::move(r));
      });
    });
  }

  const ConceptLattice& lat_;
  const FormalContext& ctx_;
  const Thresholds& th_;
  ExtractOptions options_;
  std::vector<bool> visited_;
  std::vector<AssociationRule> rules_;
};

} // namespace

RuleBase extract_rules(const ConceptLattice& lat, const FormalContext& ctx, const Thresholds& th,
                       ExtractOptions options) {
  th.validate();
  if (lat.num_properties() != ctx.num_properties() || lat.num_individuals() != ctx.num_individuals())
    throw ArgumentError("lattice was not built from this context");
  return RuleBase(Extractor(lat, ctx, th, options).run(), th);
}

RuleStats rule_stats(const FormalContext& ctx, const ConceptLattice& lat, const Motif& premise,
                     const Motif& conclusion) {
  ctx.check(premise);
  ctx.check(conclusion);
  if (premise.empty() && conclusion.empty()) throw ArgumentError("rule with empty premise and conclusion");
  const Rational support = lat.support(minimal_closed_superset(lat, premise | conclusion));
  const Rational premise_support = lat.support(minimal_closed_superset(lat, premise));
  if (premise_support == Rational(0)) return {support, Rational(0)};
  return {support, support / premise_support};
}

std::string format_rule(const FormalContext& ctx, const Motif& premise, const Motif& conclusion) {
  auto join = [](const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
    return out;
  };
  const auto lhs = join(ctx.names(premise));
  return (lhs.empty() ? "" : lhs + " ") + "=> " + join(ctx.names(conclusion));
}

std::pair<Motif, Motif> parse_rule_text(const FormalContext& ctx, std::string_view text) {
  const auto arrow = text.find("=>");
  if (arrow == std::string_view::npos) throw ArgumentError("rule text needs '=>': '" + std::string(text) + "'");
  auto side = [&](std::string_view s) {
    Motif m = ctx.no_properties();
    std::size_t start = 0;
    while (start <= s.size()) {
      auto end = s.find(',', start);
      if (end == std::string_view::npos) end = s.size();
      auto name = s.substr(start, end - start);
      while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
      while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
      if (!name.empty()) m.insert(ctx.property_index(name));
      start = end + 1;
    }
    return m;
  };
  return {side(text.substr(0, arrow)), side(text.substr(arrow + 2))};
}

} // namespace galois
