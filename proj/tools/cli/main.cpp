#include "galois/galois.hpp"
#include "server/api.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using namespace galois;

namespace {

struct CommonOptions {
  std::string context_path;
  std::string format;
  std::string minsupp = "1/2";
  std::string minconf = "1/2";
  std::string taxonomy_path;
};

void add_common(CLI::App& cmd, CommonOptions& o, bool taxonomy_required) {
  cmd.add_option("--context", o.context_path, "Context file (csv or cxt)")->required();
  cmd.add_option("--format", o.format, "Context format; inferred from the extension if omitted")
      ->check(CLI::IsMember({"csv", "cxt"}));
  cmd.add_option("--minsupp", o.minsupp, "Minimum support, decimal or fraction")->capture_default_str();
  cmd.add_option("--minconf", o.minconf, "Minimum confidence, decimal or fraction")->capture_default_str();
  auto* tax = cmd.add_option("--taxonomy", o.taxonomy_path, "Taxonomy file (child -> parent lines)");
  if (taxonomy_required) tax->required();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw std::runtime_error("cannot write '" + path.string() + "'");
  spdlog::info("wrote {}", path.string());
}

Workspace load_workspace(const CommonOptions& o) {
  ContextFormat format = ContextFormat::csv;
  if (o.format == "cxt" || (o.format.empty() && fs::path(o.context_path).extension() == ".cxt"))
    format = ContextFormat::cxt;
  auto ctx = parse_context(read_file(o.context_path), format);
  const Thresholds th{parse_rational(o.minsupp), parse_rational(o.minconf)};
  std::optional<std::string> taxonomy;
  if (!o.taxonomy_path.empty()) taxonomy = read_file(o.taxonomy_path);
  spdlog::debug("context {} x {}, minsupp {}, minconf {}", ctx.num_individuals(), ctx.num_properties(),
                to_fraction_string(th.minsupp), to_fraction_string(th.minconf));
  return build_workspace(std::move(ctx), th,
                         taxonomy ? std::optional<std::string_view>(*taxonomy) : std::nullopt);
}

int cmd_mine(const CommonOptions& o, const std::string& out_dir) {
  const auto ws = load_workspace(o);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    write_file(dir / "context.json", export_document(ws, Component::context, Format::json));
    write_file(dir / "lattice.json", export_document(ws, Component::lattice, Format::json));
    write_file(dir / "lattice.dot", export_document(ws, Component::lattice, Format::dot));
    write_file(dir / "rules.json", export_document(ws, Component::rules, Format::json));
    write_file(dir / "rules.csv", export_document(ws, Component::rules, Format::csv));
    write_file(dir / "mhier.json", export_document(ws, Component::mhier, Format::json));
    write_file(dir / "mhier.dot", export_document(ws, Component::mhier, Format::dot));
  }
  std::cout << ws.rule_base.count_partial() << " partial, " << ws.rule_base.count_total() << " total, "
            << ws.m_hierarchy.nodes().size() << " R-ensembles\n";
  return 0;
}

int cmd_generalize(const CommonOptions& o, const std::vector<std::string>& seed_texts,
                   const std::vector<RuleId>& seed_ids, const std::string& out_dir) {
  auto ws = load_workspace(o);
  std::vector<RuleId> seeds = seed_ids;
  for (const auto& text : seed_texts) {
    const auto [premise, conclusion] = parse_rule_text(ws.context, text);
    const auto id = ws.rule_base.find(premise, conclusion);
    if (!id) throw LookupError("no valid rule matches seed '" + text + "'");
    seeds.push_back(*id);
  }
  auto h = generalize_seeds(ws, seeds);
  const auto nodes = h.nodes().size();
  const auto edges = h.edges().size();
  ws.h_hierarchies.emplace(seed_key(seeds), std::move(h));
  const auto json = export_document(ws, Component::hhier, Format::json);
  if (out_dir.empty()) {
    std::cout << json;
  } else {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "hhier.json", json);
    write_file(fs::path(out_dir) / "hhier.dot", export_document(ws, Component::hhier, Format::dot));
    std::cout << "H-hierarchy: " << nodes << " nodes, " << edges << " edges\n";
  }
  return 0;
}

int cmd_serve(const CommonOptions& o, const std::string& host, int port) {
  const server::ApiService api(load_workspace(o));
  server::HttpFrontend http(api);
  const int bound = http.bind(host, port);
  spdlog::info("listening on http://{}:{}", host, bound);
  std::cout << "listening on http://" << host << ":" << bound << std::endl;
  http.run();
  return 0;
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("galois-rules");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("GALOIS_RULES_LOG")) spdlog::set_level(spdlog::level::from_str(level));
}

} // namespace

int main(int argc, char** argv) {
  configure_logging();
  CLI::App app{"Association rule mining over concept lattices"};
  app.require_subcommand(1);

  CommonOptions mine_opts;
  std::string mine_out;
  auto* mine = app.add_subcommand("mine", "Extract rules and write exports");
  add_common(*mine, mine_opts, false);
  mine->add_option("--out", mine_out, "Output directory for exports");

  CommonOptions gen_opts;
  std::vector<std::string> seed_texts;
  std::vector<RuleId> seed_ids;
  std::string gen_out;
  auto* gen = app.add_subcommand("generalize", "Build the taxonomy generalization DAG of seed rules");
  add_common(*gen, gen_opts, true);
  auto* by_text = gen->add_option("--seed", seed_texts, "Seed rule as \"A, B => C\"");
  auto* by_id = gen->add_option("--seed-id", seed_ids, "Seed rule id");
  gen->add_option("--out", gen_out, "Output directory; JSON goes to stdout if omitted");
  by_text->excludes(by_id);
  gen->callback([&] {
    if (seed_texts.empty() && seed_ids.empty()) throw CLI::RequiredError("--seed or --seed-id");
  });

  CommonOptions serve_opts;
  std::string host = "127.0.0.1";
  int port = 8080;
  auto* srv = app.add_subcommand("serve", "Serve the JSON exploration API");
  add_common(*srv, serve_opts, false);
  srv->add_option("--host", host, "Bind address")->capture_default_str();
  srv->add_option("--port", port, "TCP port")->capture_default_str()->check(CLI::Range(1, 65535));

  CLI11_PARSE(app, argc, argv);

  try {
    if (mine->parsed()) return cmd_mine(mine_opts, mine_out);
    if (gen->parsed()) return cmd_generalize(gen_opts, seed_texts, seed_ids, gen_out);
    if (srv->parsed()) return cmd_serve(serve_opts, host, port);
  } catch (const std::exception& e) {
    spdlog::debug("command failed: {}", e.what());
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
