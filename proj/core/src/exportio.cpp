#include "galois/exportio.hpp"

#include "galois/error.hpp"
#include "galois/json_codec.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace galois {

using json::Json;

Workspace build_workspace(FormalContext ctx, const Thresholds& th, std::optional<std::string_view> taxonomy_doc,
                          WorkspaceOptions options) {
  th.validate();
  auto lat = build_lattice(ctx, options.lattice);
  auto rb = extract_rules(lat, ctx, th, options.extract);
  auto mh = build_m_hierarchy(lat, group_rensembles(rb, lat));
  std::optional<Taxonomy> tax;
  if (taxonomy_doc) tax = parse_taxonomy(*taxonomy_doc, ctx);
  return Workspace{std::move(ctx), std::move(lat), std::move(rb), std::move(mh), std::move(tax), {}};
}

std::string seed_key(std::span<const RuleId> seeds) {
  std::set<RuleId> sorted(seeds.begin(), seeds.end());
  std::string key;
  for (auto id : sorted) key += (key.empty() ? "" : ",") + std::to_string(id);
  return key;
}

HHierarchy generalize_seeds(const Workspace& ws, std::span<const RuleId> seeds) {
  if (!ws.taxonomy) throw ArgumentError("no taxonomy loaded");
  if (seeds.empty()) throw ArgumentError("no seed rules given");
  std::vector<AssociationRule> rules;
  for (auto id : seeds) rules.push_back(ws.rule_base.at(id));
  return build_h_hierarchy(rules, *ws.taxonomy, ws.context, ws.rule_base.thresholds());
}

std::optional<Component> component_from_string(std::string_view name) {
  if (name == "context") return Component::context;
  if (name == "lattice") return Component::lattice;
  if (name == "rules") return Component::rules;
  if (name == "mhier") return Component::mhier;
  if (name == "hhier") return Component::hhier;
  return std::nullopt;
}

std::optional<Format> format_from_string(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "dot") return Format::dot;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::string join(const std::vector<std::string>& names, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? sep : "") + names[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

std::string context_to_json(const FormalContext& ctx) {
  Json incidence = Json::array();
  for (std::size_t i = 0; i < ctx.num_individuals(); ++i) {
    Json row = Json::array();
    for (std::size_t p = 0; p < ctx.num_properties(); ++p) row.push_back(ctx.has(i, p) ? 1 : 0);
    incidence.push_back(std::move(row));
  }
  Json o;
  o["individuals"] = ctx.individuals();
  o["properties"] = ctx.properties();
  o["incidence"] = std::move(incidence);
  return dump(o);
}

[[noreturn]] void unsupported(Component what, Format format) {
  static const char* components[] = {"context", "lattice", "rules", "mhier", "hhier"};
  static const char* formats[] = {"json", "dot", "csv"};
  throw ArgumentError(std::string("unsupported export: ") + components[static_cast<int>(what)] + " as " +
                      formats[static_cast<int>(format)]);
}

} // namespace

std::string lattice_to_json(const FormalContext& ctx, const ConceptLattice& lat) {
  Json arr = Json::array();
  for (const auto& c : lat.concepts()) arr.push_back(json::concept_object(ctx, lat, c.id));
  return dump(arr);
}

std::string lattice_to_dot(const FormalContext& ctx, const ConceptLattice& lat) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& c : lat.concepts()) {
    out << "  c" << c.id << " [label=\"C" << c.id << "\\n{" << dot_escape(join(ctx.names(c.intent))) << "}\\n|ext|="
        << c.extent.size() << "\"];\n";
  }
  for (auto [child, parent] : lat.covers()) out << "  c" << child << " -> c" << parent << ";\n";
  out << "}\n";
  return out.str();
}

std::string rules_to_json(const FormalContext& ctx, const RuleBase& rb) {
  Json arr = Json::array();
  for (const auto& r : rb.rules()) arr.push_back(json::rule_object(ctx, r));
  return dump(arr);
}

std::string rules_to_csv(const FormalContext& ctx, const RuleBase& rb) {
  std::ostringstream out;
  out << "id,rule,support,confidence,status,support_exact,confidence_exact\n";
  for (const auto& r : rb.rules()) {
    out << r.id << ',' << csv_field(format_rule(ctx, r.premise, r.conclusion)) << ','
        << to_truncated_decimal(r.support) << ',' << to_truncated_decimal(r.confidence) << ',' << to_string(r.status)
        << ',' << to_fraction_string(r.support) << ',' << to_fraction_string(r.confidence) << '\n';
  }
  return out.str();
}

std::string mhier_to_json(const FormalContext& ctx, const MHierarchy& h) { return dump(json::mhier_object(ctx, h)); }

std::string mhier_to_dot(const FormalContext& ctx, const RuleBase& rb, const MHierarchy& h) {
  std::ostringstream out;
  out << "digraph mhierarchy {\n  node [shape=box];\n";
  for (const auto& n : h.nodes()) {
    out << "  n" << n.concept_id << " [label=\"R(" << dot_escape(join(ctx.names(n.motif))) << ")\\nsupp "
        << to_fraction_string(n.support);
    for (auto id : n.rules) {
      const auto& r = rb.at(id);
      out << "\\n" << dot_escape(format_rule(ctx, r.premise, r.conclusion)) << "  conf "
          << to_fraction_string(r.confidence);
    }
    out << "\"];\n";
  }
  for (auto [g, s] : h.edges()) out << "  n" << g << " -> n" << s << ";\n";
  out << "}\n";
  return out.str();
}

std::string hhier_to_json(const Taxonomy& tax, const HHierarchy& h) { return dump(json::hhier_object(tax, h)); }

std::string hhier_to_dot(const Taxonomy& tax, const HHierarchy& h) {
  std::ostringstream out;
  out << "digraph hhierarchy {\n  rankdir=BT;\n  node [shape=box];\n";
  std::set<std::size_t> seeds(h.seeds().begin(), h.seeds().end());
  for (std::size_t i = 0; i < h.nodes().size(); ++i) {
    const auto& n = h.nodes()[i];
    const auto lhs = join(tax.names(n.premise));
    out << "  h" << i << " [label=\"" << dot_escape((lhs.empty() ? "" : lhs + " ") + "=> " + join(tax.names(n.conclusion)))
        << "\\nsupp " << to_fraction_string(n.support) << "  conf " << to_fraction_string(n.confidence) << "\"";
    if (seeds.count(i)) out << ", style=bold";
    out << "];\n";
  }
  for (const auto& e : h.edges()) {
    out << "  h" << e.specific << " -> h" << e.general << " [label=\""
        << (e.scheme == Provenance::right_gen ? "1 right" : "2 left") << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_document(const Workspace& ws, Component what, Format format) {
  switch (what) {
  case Component::context:
    if (format == Format::csv) return serialize_context(ws.context, ContextFormat::csv);
    if (format == Format::json) return context_to_json(ws.context);
    break;
  case Component::lattice:
    if (format == Format::json) return lattice_to_json(ws.context, ws.lattice);
    if (format == Format::dot) return lattice_to_dot(ws.context, ws.lattice);
    break;
  case Component::rules:
    if (format == Format::json) return rules_to_json(ws.context, ws.rule_base);
    if (format == Format::csv) return rules_to_csv(ws.context, ws.rule_base);
    break;
  case Component::mhier:
    if (format == Format::json) return mhier_to_json(ws.context, ws.m_hierarchy);
    if (format == Format::dot) return mhier_to_dot(ws.context, ws.rule_base, ws.m_hierarchy);
    break;
  case Component::hhier: {
    if (format == Format::csv) break;
    if (!ws.taxonomy) throw ArgumentError("no taxonomy in workspace");
    if (ws.h_hierarchies.empty()) throw ArgumentError("no H-hierarchy in workspace");
    if (format == Format::json) {
      Json arr = Json::array();
      for (const auto& [key, h] : ws.h_hierarchies) {
        Json o;
        o["key"] = key;
        const auto body = json::hhier_object(*ws.taxonomy, h);
        for (const auto& [k, v] : body.items()) o[k] = v;
        arr.push_back(std::move(o));
      }
      return dump(Json{{"hierarchies", std::move(arr)}});
    }
    std::string out;
    for (const auto& [key, h] : ws.h_hierarchies) out += "// seeds " + key + "\n" + hhier_to_dot(*ws.taxonomy, h);
    return out;
  }
  }
  unsupported(what, format);
}

MHierarchy load_mhierarchy(std::string_view text, const FormalContext& ctx) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.byte, e.what());
  }
  try {
    std::vector<REnsemble> nodes;
    for (const auto& n : doc.at("nodes")) {
      REnsemble e;
      e.concept_id = n.at("id").get<ConceptId>();
      e.motif = ctx.motif(n.at("motif").get<std::vector<std::string>>());
      e.support = parse_rational(n.at("support").get<std::string>());
      e.rules = n.at("rules").get<std::vector<RuleId>>();
      nodes.push_back(std::move(e));
    }
    std::vector<std::pair<ConceptId, ConceptId>> edges;
    for (const auto& e : doc.at("edges")) edges.emplace_back(e.at(0).get<ConceptId>(), e.at(1).get<ConceptId>());
    return MHierarchy(std::move(nodes), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed M-hierarchy document: ") + e.what());
  }
}

} // namespace galois
