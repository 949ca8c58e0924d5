#pragma once

#include "galois/context.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace galois {

using ConceptId = std::size_t;

struct Concept {
  ConceptId id = 0;
  Motif intent;
  Extent extent;
};

struct LatticeOptions {
  /// Contexts with more properties are rejected with CapacityError.
  std::size_t max_properties = 64;
};

/// All formal concepts of a context with their cover (Hasse) edges.
///
/// Concepts are sorted by extent size descending, then by intent, and ids
/// are positions in that order: the top concept is always id 0 and the
/// bottom concept the last id.
class ConceptLattice {
public:
  const std::vector<Concept>& concepts() const noexcept { return concepts_; }
  std::size_t size() const noexcept { return concepts_.size(); }
  const Concept& at(ConceptId id) const;

  ConceptId top() const noexcept { return 0; }
  ConceptId bottom() const noexcept { return concepts_.size() - 1; }

  /// (child, parent) pairs, sorted.
  const std::vector<std::pair<ConceptId, ConceptId>>& covers() const noexcept { return covers_; }
  const std::vector<ConceptId>& parents(ConceptId id) const;
  const std::vector<ConceptId>& children(ConceptId id) const;

  std::size_t num_individuals() const noexcept { return num_individuals_; }
  std::size_t num_properties() const noexcept { return num_properties_; }

  std::optional<ConceptId> find_by_intent(const Motif& intent) const;

  /// Support of the concept's intent: |extent| / |I|.
  Rational support(ConceptId id) const;

private:
  friend ConceptLattice build_lattice(const FormalContext&, LatticeOptions);

  std::vector<Concept> concepts_;
  std::vector<std::pair<ConceptId, ConceptId>> covers_;
  std::vector<std::vector<ConceptId>> parents_;
  std::vector<std::vector<ConceptId>> children_;
  std::map<Motif, ConceptId> by_intent_;
  std::size_t num_individuals_ = 0;
  std::size_t num_properties_ = 0;
};

ConceptLattice build_lattice(const FormalContext& ctx, LatticeOptions options = {});

/// Concept order: a ⊑ b iff extent(a) ⊆ extent(b).
bool leq(const ConceptLattice& lat, ConceptId a, ConceptId b);

/// The concept whose intent is the smallest closed motif containing `m`:
/// the first concept, scanning down from the top, whose intent contains `m`.
ConceptId minimal_closed_superset(const ConceptLattice& lat, const Motif& m);

enum class Direction { parents, children };

std::vector<ConceptId> neighbors(const ConceptLattice& lat, ConceptId c, Direction direction);

} // namespace galois
