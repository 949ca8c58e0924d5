#include "fixtures.hpp"

#include "galois/exportio.hpp"
#include "server/api.hpp"

#include <gtest/gtest.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include <set>
#include <thread>

using namespace galois;
using galois::server::ApiService;
using nlohmann::json;

namespace {

Workspace course_workspace(bool with_taxonomy = true) {
  const auto doc = galois::testing::read_data("courses.taxonomy");
  return build_workspace(galois::testing::courses(), galois::testing::half_half(),
                         with_taxonomy ? std::optional<std::string_view>(doc) : std::nullopt);
}

json get(const ApiService& api, const std::string& path, int expected_status = 200) {
  const auto r = api.handle("GET", path, "");
  EXPECT_EQ(r.status, expected_status) << path << ": " << r.body;
  return json::parse(r.body);
}

} // namespace

TEST(Api, Summary) {
  const ApiService api(course_workspace());
  const auto s = get(api, "/api/summary");
  EXPECT_EQ(s["partial"], 9);
  EXPECT_EQ(s["total"], 1);
  EXPECT_EQ(s["rules"], 10);
  EXPECT_EQ(s["rensembles"], api.workspace().m_hierarchy.nodes().size());
  EXPECT_EQ(s["taxonomy"], true);
}

TEST(Api, NodeChildrenFollowTheConceptOrder) {
  const ApiService api(course_workspace());
  const auto& ws = api.workspace();
  const auto algo = *ws.lattice.find_by_intent(ws.context.motif({"Algorithmique"}));
  const auto both = *ws.lattice.find_by_intent(ws.context.motif({"Algèbre", "Algorithmique"}));
  const auto node = get(api, "/api/mhier/node/" + std::to_string(algo));
  EXPECT_EQ(node["motif"], json::array({"Algorithmique"}));
  const auto children = node["children"].get<std::vector<std::size_t>>();
  EXPECT_NE(std::find(children.begin(), children.end(), both), children.end());

  const auto child = get(api, "/api/mhier/node/" + std::to_string(both));
  EXPECT_EQ(child["rules"].size(), 4u);
  EXPECT_EQ(child["parents"], json::array({algo}));
  std::size_t totals = 0;
  for (const auto& r : child["rules"]) totals += r["status"] == "total";
  EXPECT_EQ(totals, 1u);
}

TEST(Api, EveryReturnedIdResolves) {
  const ApiService api(course_workspace());
  std::set<std::size_t> nodes, rules;
  std::vector<std::size_t> pending;
  const auto roots = get(api, "/api/mhier/roots");
  for (const auto& r : roots["roots"]) pending.push_back(r["id"]);
  while (!pending.empty()) {
    const auto id = pending.back();
    pending.pop_back();
    if (!nodes.insert(id).second) continue;
    const auto n = get(api, "/api/mhier/node/" + std::to_string(id));
    for (const auto& c : n["children"]) pending.push_back(c);
    for (const auto& p : n["parents"]) pending.push_back(p);
    for (const auto& r : n["rules"]) rules.insert(r["id"].get<std::size_t>());
  }
  EXPECT_EQ(nodes.size(), api.workspace().m_hierarchy.nodes().size());
  EXPECT_EQ(rules.size(), api.workspace().rule_base.size());
  for (auto r : rules) EXPECT_EQ(get(api, "/api/rule/" + std::to_string(r))["rensemble"].is_number(), true);
}

TEST(Api, NotFound) {
  const ApiService api(course_workspace());
  get(api, "/api/rule/10", 404);
  get(api, "/api/rule/x", 404);
  get(api, "/api/mhier/node/999", 404);
  get(api, "/api/nothing", 404);
  EXPECT_EQ(api.handle("DELETE", "/api/summary", "").status, 404);
}

TEST(Api, Hgen) {
  const ApiService api(course_workspace());
  const auto& ws = api.workspace();
  const auto p5 = *ws.rule_base.find(ws.context.motif({"Algorithmique"}), ws.context.motif({"Probabilité"}));
  const auto p7 = *ws.rule_base.find(ws.context.motif({"Algorithmique"}), ws.context.motif({"Algèbre"}));
  const std::string body = json{{"seed_ids", {p7, p5}}}.dump();
  const auto first = api.handle("POST", "/api/hgen", body);
  ASSERT_EQ(first.status, 200) << first.body;
  const auto doc = json::parse(first.body);
  EXPECT_EQ(doc["nodes"].size(), 6u);
  bool top = false;
  for (const auto& n : doc["nodes"])
    top = top || (n["premise"] == json::array({"Informatique"}) && n["conclusion"] == json::array({"Mathématique"}));
  EXPECT_TRUE(top);
  EXPECT_EQ(api.handle("POST", "/api/hgen", json{{"seed_ids", {p5, p7}}}.dump()).body, first.body);
}

TEST(Api, HgenErrors) {
  const ApiService api(course_workspace());
  EXPECT_EQ(api.handle("POST", "/api/hgen", R"({"seed_ids":[999]})").status, 404);
  EXPECT_EQ(api.handle("POST", "/api/hgen", "{not json").status, 400);
  EXPECT_EQ(api.handle("POST", "/api/hgen", R"({"seed_ids":[]})").status, 400);
  EXPECT_EQ(api.handle("POST", "/api/hgen", R"({"seed_ids":["a"]})").status, 400);
  EXPECT_EQ(api.handle("POST", "/api/hgen", R"({"other":1})").status, 400);
  const ApiService bare(course_workspace(false));
  EXPECT_EQ(bare.handle("POST", "/api/hgen", R"({"seed_ids":[0]})").status, 409);
}

TEST(Api, HgenConcurrentCallsAgree) {
  const ApiService api(course_workspace());
  std::vector<std::string> bodies(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < bodies.size(); ++i)
    threads.emplace_back([&, i] { bodies[i] = api.handle("POST", "/api/hgen", R"({"seed_ids":[7,5]})").body; });
  for (auto& t : threads) t.join();
  for (const auto& b : bodies) EXPECT_EQ(b, bodies[0]);
}

TEST(Api, LatticeDotIsDeterministic) {
  const ApiService a(course_workspace());
  const ApiService b(course_workspace());
  const auto ra = a.handle("GET", "/api/lattice.dot", "");
  EXPECT_EQ(ra.content_type, "text/vnd.graphviz");
  EXPECT_EQ(ra.body, b.handle("GET", "/api/lattice.dot", "").body);
}

TEST(Http, ServesApiAndRejectsBusyPort) {
  const ApiService api(course_workspace());
  galois::server::HttpFrontend http(api);
  const int port = http.bind("127.0.0.1", 0);
  std::thread runner([&] { http.run(); });

  httplib::Client client("127.0.0.1", port);
  auto res = client.Get("/api/summary");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["partial"], 9);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
  res = client.Get("/nowhere");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);

  galois::server::HttpFrontend second(api);
  EXPECT_THROW(second.bind("127.0.0.1", port), std::runtime_error);

  http.stop();
  runner.join();
}
