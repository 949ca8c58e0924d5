#pragma once

#include "galois/context.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace galois {

using TermId = std::size_t;

/// Is-a partial order over terms whose leaves are the context's properties.
///
/// Term ids 0..|P|-1 coincide with context property indices, so a Motif
/// lifts to a GeneralizedMotif bit for bit. Interior terms follow, sorted
/// by name. A term may have several parents.
class Taxonomy {
public:
  /// Validates the pairs against `ctx`: no cycles, no context property used
  /// as a parent, and every childless term is a context property.
  /// Context properties missing from the pairs become isolated roots.
  Taxonomy(const FormalContext& ctx, const std::vector<std::pair<std::string, std::string>>& est_un);

  std::size_t num_terms() const noexcept { return names_.size(); }
  std::size_t num_properties() const noexcept { return num_properties_; }
  bool is_property(TermId t) const noexcept { return t < num_properties_; }

  const std::string& name(TermId t) const;
  TermId term(std::string_view name) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  const std::vector<TermId>& parents(TermId t) const;
  const std::vector<TermId>& children(TermId t) const;

  /// Reflexive-transitive ancestors.
  const GeneralizedMotif& ancestor_set(TermId t) const;
  /// Context properties at or below `t`.
  const Motif& leaf_properties(TermId t) const;

  /// True when one term is an ancestor of the other (or they are equal).
  bool related(TermId a, TermId b) const;

  /// (child, parent) pairs, sorted by term id.
  std::vector<std::pair<TermId, TermId>> est_un() const;

  GeneralizedMotif motif(std::initializer_list<std::string_view> names) const;
  GeneralizedMotif lift(const Motif& m) const;
  std::vector<std::string> names(const GeneralizedMotif& gm) const;

  void check(const GeneralizedMotif& gm) const;

private:
  std::size_t num_properties_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, TermId> index_;
  std::vector<std::vector<TermId>> parents_;
  std::vector<std::vector<TermId>> children_;
  std::vector<GeneralizedMotif> ancestors_;
  std::vector<Motif> leaves_;
};

/// Line-oriented "child -> parent" pairs; '#' starts a comment.
Taxonomy parse_taxonomy(std::string_view doc, const FormalContext& ctx);

Taxonomy load_taxonomy_file(const std::filesystem::path& path, const FormalContext& ctx);

std::string serialize_taxonomy(const Taxonomy& tax);

GeneralizedMotif ancestors(const Taxonomy& tax, TermId term);

/// Individuals that possess, for every term, at least one context property
/// at or below it.
Extent extended_image(const FormalContext& ctx, const Taxonomy& tax, const GeneralizedMotif& gm);

/// Every motif obtained by replacing one term with one of its direct parents.
/// Replacements that would merge two terms into one are not produced.
std::vector<GeneralizedMotif> hat_variants(const Taxonomy& tax, const GeneralizedMotif& gm);

} // namespace galois
