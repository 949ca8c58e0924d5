#include "galois/taxonomy.hpp"

#include "galois/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace galois {

Taxonomy::Taxonomy(const FormalContext& ctx, const std::vector<std::pair<std::string, std::string>>& est_un)
    : num_properties_(ctx.num_properties()) {
  names_ = ctx.properties();
  for (std::size_t p = 0; p < names_.size(); ++p) index_.emplace(names_[p], p);

  std::set<std::string> interior;
  for (const auto& [child, parent] : est_un) {
    if (child == parent) throw ValidationError("cycle: '" + child + "' is its own parent");
    if (index_.count(parent) && index_.at(parent) < num_properties_)
      throw ValidationError("context property '" + parent + "' used as a parent; properties must be leaves");
    if (!index_.count(child)) interior.insert(child);
    interior.insert(parent);
  }
  for (const auto& name : interior) {
    index_.emplace(name, names_.size());
    names_.push_back(name);
  }

  parents_.resize(names_.size());
  children_.resize(names_.size());
  std::set<std::pair<TermId, TermId>> seen;
  for (const auto& [child, parent] : est_un) {
    const auto c = index_.at(child);
    const auto p = index_.at(parent);
    if (!seen.emplace(c, p).second) continue;
    parents_[c].push_back(p);
    children_[p].push_back(c);
  }
  for (auto& v : parents_) std::sort(v.begin(), v.end());
  for (auto& v : children_) std::sort(v.begin(), v.end());

  for (TermId t = num_properties_; t < names_.size(); ++t)
    if (children_[t].empty())
      throw ValidationError("term '" + names_[t] + "' is a leaf but not a property of the context");

  // Kahn's algorithm from the leaves upward; leftover terms sit on a cycle.
  std::vector<std::size_t> pending(names_.size());
  for (TermId t = 0; t < names_.size(); ++t) pending[t] = children_[t].size();
  std::vector<TermId> order;
  for (TermId t = 0; t < names_.size(); ++t)
    if (pending[t] == 0) order.push_back(t);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (auto p : parents_[order[k]])
      if (--pending[p] == 0) order.push_back(p);
  if (order.size() != names_.size()) {
    for (TermId t = 0; t < names_.size(); ++t)
      if (pending[t] != 0) throw ValidationError("cycle detected through term '" + names_[t] + "'");
  }

  leaves_.assign(names_.size(), ctx.no_properties());
  for (auto t : order) {
    if (t < num_properties_) leaves_[t].insert(t);
    for (auto p : parents_[t]) leaves_[p] |= leaves_[t];
  }
  ancestors_.assign(names_.size(), GeneralizedMotif(names_.size()));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    ancestors_[*it].insert(*it);
    for (auto p : parents_[*it]) ancestors_[*it] |= ancestors_[p];
  }
}

const std::string& Taxonomy::name(TermId t) const {
  if (t >= names_.size()) throw LookupError("unknown term id " + std::to_string(t));
  return names_[t];
}

TermId Taxonomy::term(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw LookupError("unknown term '" + std::string(name) + "'");
  return it->second;
}

const std::vector<TermId>& Taxonomy::parents(TermId t) const {
  name(t);
  return parents_[t];
}

const std::vector<TermId>& Taxonomy::children(TermId t) const {
  name(t);
  return children_[t];
}

const GeneralizedMotif& Taxonomy::ancestor_set(TermId t) const {
  name(t);
  return ancestors_[t];
}

const Motif& Taxonomy::leaf_properties(TermId t) const {
  name(t);
  return leaves_[t];
}

bool Taxonomy::related(TermId a, TermId b) const {
  return ancestor_set(a).contains(b) || ancestor_set(b).contains(a);
}

std::vector<std::pair<TermId, TermId>> Taxonomy::est_un() const {
  std::vector<std::pair<TermId, TermId>> out;
  for (TermId c = 0; c < parents_.size(); ++c)
    for (auto p : parents_[c]) out.emplace_back(c, p);
  return out;
}

GeneralizedMotif Taxonomy::motif(std::initializer_list<std::string_view> names) const {
  GeneralizedMotif gm(num_terms());
  for (auto n : names) gm.insert(term(n));
  return gm;
}

GeneralizedMotif Taxonomy::lift(const Motif& m) const {
  if (m.universe() != num_properties_) throw LookupError("motif does not belong to the taxonomy's context");
  GeneralizedMotif gm(num_terms());
  m.for_each([&](std::size_t p) { gm.insert(p); });
  return gm;
}

std::vector<std::string> Taxonomy::names(const GeneralizedMotif& gm) const {
  check(gm);
  std::vector<std::string> out;
  gm.for_each([&](std::size_t t) { out.push_back(names_[t]); });
  return out;
}

void Taxonomy::check(const GeneralizedMotif& gm) const {
  if (gm.universe() != names_.size())
    throw LookupError("generalized motif over " + std::to_string(gm.universe()) + " terms used with a taxonomy of " +
                      std::to_string(names_.size()));
}

Taxonomy parse_taxonomy(std::string_view doc, const FormalContext& ctx) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  while (start < doc.size()) {
    auto end = doc.find('\n', start);
    if (end == std::string_view::npos) end = doc.size();
    auto line = doc.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError(line_no, 1, "expected 'child -> parent'");
    auto child = trim(line.substr(0, arrow));
    auto parent = trim(line.substr(arrow + 2));
    if (child.empty()) throw ParseError(line_no, 1, "missing child term");
    if (parent.empty()) throw ParseError(line_no, arrow + 3, "missing parent term");
    pairs.emplace_back(std::string(child), std::string(parent));
  }
  return Taxonomy(ctx, pairs);
}

Taxonomy load_taxonomy_file(const std::filesystem::path& path, const FormalContext& ctx) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LookupError("cannot open taxonomy file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_taxonomy(buf.str(), ctx);
}

std::string serialize_taxonomy(const Taxonomy& tax) {
  std::string out;
  for (auto [c, p] : tax.est_un()) out += tax.name(c) + " -> " + tax.name(p) + "\n";
  return out;
}

GeneralizedMotif ancestors(const Taxonomy& tax, TermId term) { return tax.ancestor_set(term); }

Extent extended_image(const FormalContext& ctx, const Taxonomy& tax, const GeneralizedMotif& gm) {
  tax.check(gm);
  if (tax.num_properties() != ctx.num_properties()) throw LookupError("taxonomy does not belong to this context");
  Extent out = ctx.all_individuals();
  gm.for_each([&](std::size_t t) {
    Extent holders = ctx.no_individuals();
    tax.leaf_properties(t).for_each([&](std::size_t p) { holders |= ctx.column(p); });
    out &= holders;
  });
  return out;
}

std::vector<GeneralizedMotif> hat_variants(const Taxonomy& tax, const GeneralizedMotif& gm) {
  tax.check(gm);
  std::vector<GeneralizedMotif> out;
  gm.for_each([&](std::size_t t) {
    for (auto p : tax.parents(t)) {
      if (gm.contains(p)) continue;
      GeneralizedMotif v = gm;
      v.erase(t);
      v.insert(p);
      out.push_back(std::move(v));
    }
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace galois
