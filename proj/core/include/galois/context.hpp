#pragma once

#include "galois/index_set.hpp"
#include "galois/rational.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace galois {

/// Binary relation between individuals and properties.
///
/// Incidence is stored twice: one property bitset per individual (rows) and
/// one individual bitset per property (columns), so both derivation
/// operators reduce to word-wise intersections. Immutable after construction.
class FormalContext {
public:
  /// Throws ValidationError on duplicate identifiers, empty lists or a
  /// matrix whose shape does not match the two lists.
  FormalContext(std::vector<std::string> individuals, std::vector<std::string> properties,
                const std::vector<std::vector<bool>>& incidence);

  std::size_t num_individuals() const noexcept { return individuals_.size(); }
  std::size_t num_properties() const noexcept { return properties_.size(); }

  const std::vector<std::string>& individuals() const noexcept { return individuals_; }
  const std::vector<std::string>& properties() const noexcept { return properties_; }

  bool has(std::size_t individual, std::size_t property) const { return rows_.at(individual).contains(property); }

  /// Properties held by one individual.
  const Motif& row(std::size_t individual) const { return rows_.at(individual); }
  /// Individuals holding one property.
  const Extent& column(std::size_t property) const { return columns_.at(property); }

  std::size_t property_index(std::string_view name) const;
  std::size_t individual_index(std::string_view name) const;

  Motif motif(std::span<const std::string> names) const;
  Motif motif(std::initializer_list<std::string_view> names) const;
  Extent individual_set(std::initializer_list<std::string_view> names) const;

  Motif no_properties() const { return Motif(num_properties()); }
  Motif all_properties() const { return Motif::full(num_properties()); }
  Extent no_individuals() const { return Extent(num_individuals()); }
  Extent all_individuals() const { return Extent::full(num_individuals()); }

  std::vector<std::string> names(const Motif& m) const;
  std::vector<std::string> names(const Extent& e) const;

  /// Throws LookupError unless the set was built over this context.
  void check(const Motif& m) const;
  void check(const Extent& e) const;

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.individuals_ == b.individuals_ && a.properties_ == b.properties_ && a.rows_ == b.rows_;
  }

private:
  std::vector<std::string> individuals_;
  std::vector<std::string> properties_;
  std::unordered_map<std::string, std::size_t> individual_index_;
  std::unordered_map<std::string, std::size_t> property_index_;
  std::vector<Motif> rows_;
  std::vector<Extent> columns_;
};

/// Individuals possessing every property of `m`; the empty motif maps to all individuals.
Extent image(const FormalContext& ctx, const Motif& m);

/// Properties shared by every individual of `inds`; the empty set maps to all properties.
Motif intent_of(const FormalContext& ctx, const Extent& inds);

Motif closure(const FormalContext& ctx, const Motif& m);

/// |image(m)| / |I|, exact.
Rational motif_support(const FormalContext& ctx, const Motif& m);

enum class ContextFormat { csv, cxt };

std::optional<ContextFormat> context_format_from_string(std::string_view name);

/// Parses a CSV (header row of property names, then one row
/// per individual with 0/1 cells) or Burmeister CXT document. Errors carry
/// line and column.
FormalContext parse_context(std::string_view doc, ContextFormat format);

std::string serialize_context(const FormalContext& ctx, ContextFormat format);

/// Reads a context file; the format defaults to the file extension (.cxt, otherwise CSV).
FormalContext load_context_file(const std::filesystem::path& path,
                                std::optional<ContextFormat> format = std::nullopt);

} // namespace galois
