#include "galois/lattice.hpp"

#include "galois/error.hpp"

#include <algorithm>

namespace galois {

namespace {

struct RawConcept {
  Extent extent;
  Motif intent;
};

// Close-by-One: each closed intent is generated exactly once, from the
// lexicographically canonical parent (D agrees with B below j).
class CloseByOne {
public:
  explicit CloseByOne(const FormalContext& ctx) : ctx_(ctx) {
    prefix_masks_.reserve(ctx.num_properties() + 1);
    Motif mask = ctx.no_properties();
    for (std::size_t j = 0; j <= ctx.num_properties(); ++j) {
      prefix_masks_.push_back(mask);
      if (j < ctx.num_properties()) mask.insert(j);
    }
  }

  std::vector<RawConcept> run() {
    Extent all = ctx_.all_individuals();
    Motif top_intent = intent_of(ctx_, all);
    generate(std::move(all), std::move(top_intent), 0);
    return std::move(out_);
  }

private:
  void generate(Extent extent, Motif intent, std::size_t start) {
    out_.push_back({extent, intent});
    for (std::size_t j = start; j < ctx_.num_properties(); ++j) {
      if (intent.contains(j)) continue;
      Extent child_extent = extent & ctx_.column(j);
      Motif child_intent = intent_of(ctx_, child_extent);
      const auto& below = prefix_masks_[j];
      if ((child_intent & below) == (intent & below)) generate(std::move(child_extent), std::move(child_intent), j + 1);
    }
  }

  const FormalContext& ctx_;
  std::vector<Motif> prefix_masks_;
  std::vector<RawConcept> out_;
};

} // namespace

const Concept& ConceptLattice::at(ConceptId id) const {
  if (id >= concepts_.size()) throw LookupError("unknown concept id " + std::to_string(id));
  return concepts_[id];
}

const std::vector<ConceptId>& ConceptLattice::parents(ConceptId id) const {
  at(id);
  return parents_[id];
}

const std::vector<ConceptId>& ConceptLattice::children(ConceptId id) const {
  at(id);
  return children_[id];
}

std::optional<ConceptId> ConceptLattice::find_by_intent(const Motif& intent) const {
  auto it = by_intent_.find(intent);
  if (it == by_intent_.end()) return std::nullopt;
  return it->second;
}

Rational ConceptLattice::support(ConceptId id) const {
  return Rational(static_cast<std::int64_t>(at(id).extent.size()), static_cast<std::int64_t>(num_individuals_));
}

ConceptLattice build_lattice(const FormalContext& ctx, LatticeOptions options) {
  if (ctx.num_properties() > options.max_properties)
    throw CapacityError("context has " + std::to_string(ctx.num_properties()) +
                        " properties, above the configured limit of " + std::to_string(options.max_properties));

  auto raw = CloseByOne(ctx).run();
  std::sort(raw.begin(), raw.end(), [](const RawConcept& a, const RawConcept& b) {
    if (a.extent.size() != b.extent.size()) return a.extent.size() > b.extent.size();
    return a.intent < b.intent;
  });

  ConceptLattice lat;
  lat.num_individuals_ = ctx.num_individuals();
  lat.num_properties_ = ctx.num_properties();
  lat.concepts_.reserve(raw.size());
  for (std::size_t id = 0; id < raw.size(); ++id) {
    lat.by_intent_.emplace(raw[id].intent, id);
    lat.concepts_.push_back({id, std::move(raw[id].intent), std::move(raw[id].extent)});
  }

  // Lower covers of (A, B): a candidate D = closure(B + j) is a cover iff
  // exactly |D \ B| attributes outside B generate it.
  lat.parents_.resize(lat.concepts_.size());
  lat.children_.resize(lat.concepts_.size());
  for (const auto& c : lat.concepts_) {
    std::map<ConceptId, std::size_t> generated_by;
    for (std::size_t j = 0; j < ctx.num_properties(); ++j) {
      if (c.intent.contains(j)) continue;
      Motif d = intent_of(ctx, c.extent & ctx.column(j));
      ++generated_by[lat.by_intent_.at(d)];
    }
    for (auto [child, count] : generated_by) {
      if ((lat.concepts_[child].intent - c.intent).size() == count) {
        lat.children_[c.id].push_back(child);
        lat.parents_[child].push_back(c.id);
        lat.covers_.emplace_back(child, c.id);
      }
    }
  }
  for (auto& p : lat.parents_) std::sort(p.begin(), p.end());
  for (auto& ch : lat.children_) std::sort(ch.begin(), ch.end());
  std::sort(lat.covers_.begin(), lat.covers_.end());
  return lat;
}

bool leq(const ConceptLattice& lat, ConceptId a, ConceptId b) {
  return lat.at(a).extent.is_subset_of(lat.at(b).extent);
}

ConceptId minimal_closed_superset(const ConceptLattice& lat, const Motif& m) {
  if (m.universe() != lat.num_properties())
    throw LookupError("motif over " + std::to_string(m.universe()) + " properties used with a lattice of " +
                      std::to_string(lat.num_properties()));
  for (const auto& c : lat.concepts()) {
    if (m.is_subset_of(c.intent)) return c.id;
  }
  // Unreachable: the bottom intent is the closure of all properties.
  return lat.bottom();
}

std::vector<ConceptId> neighbors(const ConceptLattice& lat, ConceptId c, Direction direction) {
  return direction == Direction::parents ? lat.parents(c) : lat.children(c);
}

} // namespace galois
