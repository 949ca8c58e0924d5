#include "api.hpp"

#include "galois/error.hpp"
#include "galois/json_codec.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace galois::server {

namespace {

using galois::json::Json;

Response json_response(const Json& body, int status = 200) { return {status, "application/json", body.dump(2) + "\n"}; }

Response error(int status, std::string message) {
  Json o;
  o["error"] = std::move(message);
  return json_response(o, status);
}

std::optional<std::size_t> parse_id(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
  return value;
}

bool consume_prefix(std::string_view& path, std::string_view prefix) {
  if (path.substr(0, prefix.size()) != prefix) return false;
  path.remove_prefix(prefix.size());
  return true;
}

} // namespace

ApiService::ApiService(Workspace ws) : ws_(std::move(ws)) {}

Response ApiService::handle(std::string_view method, std::string_view path, std::string_view body) const {
  if (const auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
  if (method == "OPTIONS") return {204, "text/plain", ""};
  if (method == "GET") {
    if (path == "/api/summary") return summary();
    if (path == "/api/mhier/roots") return mhier_roots();
    if (path == "/api/lattice.dot") return lattice_dot();
    auto rest = path;
    if (consume_prefix(rest, "/api/mhier/node/")) return mhier_node(rest);
    rest = path;
    if (consume_prefix(rest, "/api/rule/")) return rule(rest);
  }
  if (method == "POST" && path == "/api/hgen") return hgen(body);
  return error(404, "no route for " + std::string(method) + " " + std::string(path));
}

Response ApiService::summary() const {
  const auto& rb = ws_.rule_base;
  Json o;
  o["individuals"] = ws_.context.num_individuals();
  o["properties"] = ws_.context.num_properties();
  o["concepts"] = ws_.lattice.size();
  o["minsupp"] = json::rational(rb.thresholds().minsupp);
  o["minconf"] = json::rational(rb.thresholds().minconf);
  o["rules"] = rb.size();
  o["partial"] = rb.count_partial();
  o["total"] = rb.count_total();
  o["rensembles"] = ws_.m_hierarchy.nodes().size();
  o["taxonomy"] = ws_.taxonomy.has_value();
  return json_response(o);
}

Response ApiService::mhier_roots() const {
  Json roots = Json::array();
  for (auto id : ws_.m_hierarchy.roots()) roots.push_back(json::ensemble_object(ws_.context, ws_.m_hierarchy.node(id)));
  Json o;
  o["roots"] = std::move(roots);
  return json_response(o);
}

Response ApiService::mhier_node(std::string_view text) const {
  const auto id = parse_id(text);
  if (!id || !ws_.m_hierarchy.contains(*id)) return error(404, "unknown R-ensemble '" + std::string(text) + "'");
  const auto& h = ws_.m_hierarchy;
  auto o = json::ensemble_object(ws_.context, h.node(*id));
  Json rules = Json::array();
  for (auto r : h.node(*id).rules) rules.push_back(json::rule_object(ws_.context, ws_.rule_base.at(r)));
  o["rules"] = std::move(rules);
  o["parents"] = navigate(h, *id, NavDirection::generalize);
  o["children"] = navigate(h, *id, NavDirection::specialize);
  return json_response(o);
}

Response ApiService::rule(std::string_view text) const {
  const auto id = parse_id(text);
  if (!id || *id >= ws_.rule_base.size()) return error(404, "unknown rule '" + std::string(text) + "'");
  auto o = json::rule_object(ws_.context, ws_.rule_base.at(*id));
  o["rensemble"] = ws_.rule_base.at(*id).origin_concept;
  return json_response(o);
}

Response ApiService::hgen(std::string_view body) const {
  std::vector<RuleId> seeds;
  try {
    const auto doc = Json::parse(body);
    const auto& ids = doc.at("seed_ids");
    if (!ids.is_array() || ids.empty()) return error(400, "seed_ids must be a non-empty array");
    for (const auto& v : ids) {
      if (!v.is_number_unsigned()) return error(400, "seed_ids must hold rule ids");
      seeds.push_back(v.get<RuleId>());
    }
  } catch (const nlohmann::json::exception& e) {
    return error(400, std::string("malformed body: ") + e.what());
  }
  if (!ws_.taxonomy) return error(409, "no taxonomy loaded");
  for (auto id : seeds)
    if (id >= ws_.rule_base.size()) return error(404, "unknown rule '" + std::to_string(id) + "'");

  const auto key = seed_key(seeds);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = hgen_cache_.find(key); it != hgen_cache_.end()) return {200, "application/json", *it->second};
  }
  std::string doc;
  try {
    const auto o = json::hhier_object(*ws_.taxonomy, generalize_seeds(ws_, seeds));
    Json keyed;
    keyed["key"] = key;
    for (auto& [k, v] : o.items()) keyed[k] = v;
    doc = keyed.dump(2) + "\n";
  } catch (const ArgumentError& e) {
    return error(400, e.what());
  }
  std::lock_guard lock(cache_mutex_);
  const auto [it, inserted] = hgen_cache_.try_emplace(key, std::make_shared<const std::string>(std::move(doc)));
  return {200, "application/json", *it->second};
}

Response ApiService::lattice_dot() const {
  return {200, "text/vnd.graphviz", export_document(ws_, Component::lattice, Format::dot)};
}

} // namespace galois::server
