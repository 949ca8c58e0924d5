#pragma once

#include "galois/context.hpp"
#include "galois/hsub.hpp"
#include "galois/lattice.hpp"
#include "galois/msub.hpp"
#include "galois/rules.hpp"
#include "galois/taxonomy.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace galois {

/// A context with everything derived from it.
struct Workspace {
  FormalContext context;
  ConceptLattice lattice;
  RuleBase rule_base;
  MHierarchy m_hierarchy;
  std::optional<Taxonomy> taxonomy;
  /// Keyed by seed_key().
  std::map<std::string, HHierarchy> h_hierarchies;
};

struct WorkspaceOptions {
  LatticeOptions lattice;
  ExtractOptions extract;
};

Workspace build_workspace(FormalContext ctx, const Thresholds& th,
                          std::optional<std::string_view> taxonomy_doc = std::nullopt,
                          WorkspaceOptions options = {});

/// Canonical cache/export key for a seed set: sorted, deduplicated ids joined by ','.
std::string seed_key(std::span<const RuleId> seeds);

/// Builds the H-hierarchy shared by the given seed rules.
/// Throws ArgumentError without a taxonomy, LookupError for unknown rule ids.
HHierarchy generalize_seeds(const Workspace& ws, std::span<const RuleId> seeds);

enum class Component { context, lattice, rules, mhier, hhier };
enum class Format { json, dot, csv };

std::optional<Component> component_from_string(std::string_view name);
std::optional<Format> format_from_string(std::string_view name);

/// Deterministic document for one component. Supported pairs:
/// context csv|json, lattice json|dot, rules json|csv, mhier json|dot,
/// hhier json|dot. Other pairs and missing components throw ArgumentError.
std::string export_document(const Workspace& ws, Component what, Format format);

std::string lattice_to_json(const FormalContext& ctx, const ConceptLattice& lat);
std::string lattice_to_dot(const FormalContext& ctx, const ConceptLattice& lat);
std::string rules_to_json(const FormalContext& ctx, const RuleBase& rb);
/// One row per rule with two-digit truncated decimals plus the exact fractions.
std::string rules_to_csv(const FormalContext& ctx, const RuleBase& rb);
std::string mhier_to_json(const FormalContext& ctx, const MHierarchy& h);
std::string mhier_to_dot(const FormalContext& ctx, const RuleBase& rb, const MHierarchy& h);
std::string hhier_to_json(const Taxonomy& tax, const HHierarchy& h);
std::string hhier_to_dot(const Taxonomy& tax, const HHierarchy& h);

/// Inverse of mhier_to_json.
MHierarchy load_mhierarchy(std::string_view json, const FormalContext& ctx);

} // namespace galois
