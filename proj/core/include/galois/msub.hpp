#pragma once

#include "galois/lattice.hpp"
#include "galois/rules.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace galois {

/// The valid rules extracted from one concept. All members share the
/// concept's support; confidences differ.
struct REnsemble {
  ConceptId concept_id = 0;
  Motif motif;
  std::vector<RuleId> rules;
  Rational support{0};

  friend bool operator==(const REnsemble&, const REnsemble&) = default;
};

/// One ensemble per concept owning at least one rule, ordered by concept id.
std::vector<REnsemble> group_rensembles(const RuleBase& rb, const ConceptLattice& lat);

/// True iff `general` M-subsumes `specific`: concept(specific) ⊑ concept(general),
/// i.e. the general ensemble's rules cover a superset population.
/// Throws ArgumentError when either ensemble does not belong to `lat`.
bool m_subsumes(const ConceptLattice& lat, const REnsemble& general, const REnsemble& specific);

/// Global rule hierarchy. Node ids are concept ids; edges (general, specific)
/// form the transitive reduction of the concept order restricted to the
/// concepts that own an ensemble.
class MHierarchy {
public:
  MHierarchy() = default;
  MHierarchy(std::vector<REnsemble> nodes, std::vector<std::pair<ConceptId, ConceptId>> edges);

  const std::vector<REnsemble>& nodes() const noexcept { return nodes_; }
  const std::vector<std::pair<ConceptId, ConceptId>>& edges() const noexcept { return edges_; }
  const std::vector<ConceptId>& roots() const noexcept { return roots_; }

  bool contains(ConceptId node) const { return index_.count(node) != 0; }
  const REnsemble& node(ConceptId node) const;
  const std::vector<ConceptId>& more_general(ConceptId node) const;
  const std::vector<ConceptId>& more_specific(ConceptId node) const;

  friend bool operator==(const MHierarchy& a, const MHierarchy& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

private:
  std::vector<REnsemble> nodes_;
  std::vector<std::pair<ConceptId, ConceptId>> edges_;
  std::vector<ConceptId> roots_;
  std::map<ConceptId, std::size_t> index_;
  std::vector<std::vector<ConceptId>> up_;
  std::vector<std::vector<ConceptId>> down_;
};

MHierarchy build_m_hierarchy(const ConceptLattice& lat, std::vector<REnsemble> ensembles);

enum class NavDirection { generalize, specialize };

std::vector<ConceptId> navigate(const MHierarchy& h, ConceptId node, NavDirection direction);

} // namespace galois
