#pragma once

#include "galois/hsub.hpp"
#include "galois/lattice.hpp"
#include "galois/msub.hpp"
#include "galois/rules.hpp"

#include <nlohmann/json.hpp>

namespace galois::json {

using Json = nlohmann::ordered_json;

Json names(const FormalContext& ctx, const Motif& m);
Json rational(const Rational& r);

Json concept_object(const FormalContext& ctx, const ConceptLattice& lat, ConceptId id);
Json rule_object(const FormalContext& ctx, const AssociationRule& r);
Json ensemble_object(const FormalContext& ctx, const REnsemble& e);
Json mhier_object(const FormalContext& ctx, const MHierarchy& h);
Json hhier_object(const Taxonomy& tax, const HHierarchy& h);

} // namespace galois::json
