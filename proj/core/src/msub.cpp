#include "galois/msub.hpp"

#include "galois/error.hpp"

#include <algorithm>

namespace galois {

std::vector<REnsemble> group_rensembles(const RuleBase& rb, const ConceptLattice& lat) {
  std::vector<REnsemble> out;
  for (const auto& [concept_id, rule_ids] : rb.by_concept()) {
    REnsemble e;
    e.concept_id = concept_id;
    e.motif = lat.at(concept_id).intent;
    e.rules = rule_ids;
    e.support = lat.support(concept_id);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

void check_membership(const ConceptLattice& lat, const REnsemble& e) {
  if (e.concept_id >= lat.size() || lat.at(e.concept_id).intent != e.motif)
    throw ArgumentError("R-ensemble at concept " + std::to_string(e.concept_id) + " does not belong to this lattice");
}

} // namespace

bool m_subsumes(const ConceptLattice& lat, const REnsemble& general, const REnsemble& specific) {
  check_membership(lat, general);
  check_membership(lat, specific);
  return leq(lat, specific.concept_id, general.concept_id);
}

MHierarchy::MHierarchy(std::vector<REnsemble> nodes, std::vector<std::pair<ConceptId, ConceptId>> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const REnsemble& a, const REnsemble& b) { return a.concept_id < b.concept_id; });
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i].concept_id, i).second)
      throw ValidationError("duplicate hierarchy node " + std::to_string(nodes_[i].concept_id));
  }
  up_.resize(nodes_.size());
  down_.resize(nodes_.size());
  for (auto [general, specific] : edges_) {
    auto g = index_.find(general);
    auto s = index_.find(specific);
    if (g == index_.end() || s == index_.end())
      throw ValidationError("hierarchy edge references a missing node");
    down_[g->second].push_back(specific);
    up_[s->second].push_back(general);
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (up_[i].empty()) roots_.push_back(nodes_[i].concept_id);
}

const REnsemble& MHierarchy::node(ConceptId node) const {
  auto it = index_.find(node);
  if (it == index_.end()) throw LookupError("unknown hierarchy node " + std::to_string(node));
  return nodes_[it->second];
}

const std::vector<ConceptId>& MHierarchy::more_general(ConceptId node) const {
  this->node(node);
  return up_[index_.at(node)];
}

const std::vector<ConceptId>& MHierarchy::more_specific(ConceptId node) const {
  this->node(node);
  return down_[index_.at(node)];
}

MHierarchy build_m_hierarchy(const ConceptLattice& lat, std::vector<REnsemble> ensembles) {
  for (const auto& e : ensembles) check_membership(lat, e);
  std::sort(ensembles.begin(), ensembles.end(),
            [](const REnsemble& a, const REnsemble& b) { return a.concept_id < b.concept_id; });

  auto strictly_below = [&](ConceptId a, ConceptId b) {
    return lat.at(a).extent.is_proper_subset_of(lat.at(b).extent);
  };

  std::vector<std::pair<ConceptId, ConceptId>> edges;
  for (const auto& g : ensembles) {
    for (const auto& s : ensembles) {
      if (!strictly_below(s.concept_id, g.concept_id)) continue;
      const bool covered = std::none_of(ensembles.begin(), ensembles.end(), [&](const REnsemble& t) {
        return strictly_below(s.concept_id, t.concept_id) && strictly_below(t.concept_id, g.concept_id);
      });
      if (covered) edges.emplace_back(g.concept_id, s.concept_id);
    }
  }
  return MHierarchy(std::move(ensembles), std::move(edges));
}

std::vector<ConceptId> navigate(const MHierarchy& h, ConceptId node, NavDirection direction) {
  return direction == NavDirection::generalize ? h.more_general(node) : h.more_specific(node);
}

} // namespace galois
