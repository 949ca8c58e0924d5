#include "galois/json_codec.hpp"

namespace galois::json {

Json names(const FormalContext& ctx, const Motif& m) { return Json(ctx.names(m)); }

Json rational(const Rational& r) { return to_fraction_string(r); }

Json concept_object(const FormalContext& ctx, const ConceptLattice& lat, ConceptId id) {
  const auto& c = lat.at(id);
  Json o;
  o["id"] = c.id;
  o["intent"] = ctx.names(c.intent);
  o["extent"] = ctx.names(c.extent);
  o["support"] = rational(lat.support(id));
  o["parents"] = lat.parents(id);
  o["children"] = lat.children(id);
  return o;
}

Json rule_object(const FormalContext& ctx, const AssociationRule& r) {
  Json o;
  o["id"] = r.id;
  o["premise"] = ctx.names(r.premise);
  o["conclusion"] = ctx.names(r.conclusion);
  o["support"] = rational(r.support);
  o["support_decimal"] = to_rounded_double(r.support);
  o["confidence"] = rational(r.confidence);
  o["confidence_decimal"] = to_rounded_double(r.confidence);
  o["status"] = to_string(r.status);
  o["informative"] = r.informative;
  o["concept"] = r.origin_concept;
  return o;
}

Json ensemble_object(const FormalContext& ctx, const REnsemble& e) {
  Json o;
  o["id"] = e.concept_id;
  o["motif"] = ctx.names(e.motif);
  o["support"] = rational(e.support);
  o["support_decimal"] = to_rounded_double(e.support);
  o["rules"] = e.rules;
  return o;
}

Json mhier_object(const FormalContext& ctx, const MHierarchy& h) {
  Json nodes = Json::array();
  for (const auto& n : h.nodes()) nodes.push_back(ensemble_object(ctx, n));
  Json edges = Json::array();
  for (auto [g, s] : h.edges()) edges.push_back(Json::array({g, s}));
  Json o;
  o["nodes"] = std::move(nodes);
  o["edges"] = std::move(edges);
  o["roots"] = h.roots();
  return o;
}

Json hhier_object(const Taxonomy& tax, const HHierarchy& h) {
  Json nodes = Json::array();
  std::vector<bool> has_general(h.nodes().size(), false);
  for (const auto& e : h.edges()) has_general[e.specific] = true;
  for (std::size_t i = 0; i < h.nodes().size(); ++i) {
    const auto& n = h.nodes()[i];
    Json o;
    o["id"] = i;
    o["premise"] = tax.names(n.premise);
    o["conclusion"] = tax.names(n.conclusion);
    o["support"] = rational(n.support);
    o["support_decimal"] = to_rounded_double(n.support);
    o["confidence"] = rational(n.confidence);
    o["confidence_decimal"] = to_rounded_double(n.confidence);
    o["provenance"] = to_string(n.provenance);
    o["parents"] = n.parent_rules;
    o["seed_rule"] = n.seed_rule ? Json(*n.seed_rule) : Json(nullptr);
    nodes.push_back(std::move(o));
  }
  Json edges = Json::array();
  for (const auto& e : h.edges())
    edges.push_back(Json{{"specific", e.specific}, {"general", e.general}, {"scheme", to_string(e.scheme)}});
  Json tops = Json::array();
  for (std::size_t i = 0; i < h.nodes().size(); ++i)
    if (!has_general[i]) tops.push_back(i);
  Json o;
  o["seeds"] = h.seeds();
  o["nodes"] = std::move(nodes);
  o["edges"] = std::move(edges);
  o["roots"] = std::move(tops);
  return o;
}

} // namespace galois::json
