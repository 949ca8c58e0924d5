#pragma once

#include "galois/context.hpp"
#include "galois/rules.hpp"
#include "galois/taxonomy.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef GALOIS_DATA_DIR
#error "GALOIS_DATA_DIR must point at the bundled data directory"
#endif

namespace galois::testing {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(GALOIS_DATA_DIR) + "/" + name, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline FormalContext courses() { return parse_context(read_data("courses.csv"), ContextFormat::csv); }

inline Taxonomy course_taxonomy(const FormalContext& ctx) { return parse_taxonomy(read_data("courses.taxonomy"), ctx); }

inline FormalContext zoo() { return parse_context(read_data("zoo40.csv"), ContextFormat::csv); }

inline Thresholds half_half() { return {Rational(1, 2), Rational(1, 2)}; }

inline FormalContext random_context(std::mt19937& rng, std::size_t individuals, std::size_t properties,
                                    double density = 0.5) {
  std::bernoulli_distribution cell(density);
  std::vector<std::string> inds, props;
  for (std::size_t i = 0; i < individuals; ++i) inds.push_back("i" + std::to_string(i));
  for (std::size_t p = 0; p < properties; ++p) props.push_back("p" + std::to_string(p));
  std::vector<std::vector<bool>> incidence(individuals, std::vector<bool>(properties));
  for (auto& row : incidence)
    for (std::size_t p = 0; p < properties; ++p) row[p] = cell(rng);
  return FormalContext(std::move(inds), std::move(props), incidence);
}

inline Motif random_motif(std::mt19937& rng, std::size_t properties, double density = 0.3) {
  std::bernoulli_distribution pick(density);
  Motif m(properties);
  for (std::size_t p = 0; p < properties; ++p)
    if (pick(rng)) m.insert(p);
  return m;
}

/// Random forest-shaped taxonomy over `ctx`: interior terms t0..t{k-1}, each
/// property under a random interior term or left alone, interior terms
/// chained under lower-numbered ones (acyclic), occasionally with a second parent.
inline Taxonomy random_taxonomy(std::mt19937& rng, const FormalContext& ctx, std::size_t interior) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<bool> has_child(interior, false);
  std::uniform_int_distribution<std::size_t> pick(0, interior);  // == interior means "no parent"
  for (const auto& p : ctx.properties()) {
    auto t = pick(rng);
    if (t < interior) {
      pairs.emplace_back(p, "t" + std::to_string(t));
      has_child[t] = true;
    }
  }
  std::bernoulli_distribution coin(0.5);
  for (std::size_t t = 1; t < interior; ++t) {
    if (!has_child[t]) continue;
    std::uniform_int_distribution<std::size_t> up(0, t - 1);
    auto parent = up(rng);
    if (coin(rng) && has_child[parent]) pairs.emplace_back("t" + std::to_string(t), "t" + std::to_string(parent));
    auto second = up(rng);
    if (second != parent && has_child[second] && !coin(rng))
      pairs.emplace_back("t" + std::to_string(t), "t" + std::to_string(second));
  }
  return Taxonomy(ctx, pairs);
}

} // namespace galois::testing

namespace galois::testing {

struct ReferenceRule {
  const char* label;
  std::vector<std::string> premise;
  std::vector<std::string> conclusion;
  Rational support;
  Rational confidence;
};

/// The ten expected rules for the course context at minsupp = minconf = 1/2,
/// as exact fractions (a two-digit 0.66 is 2/3).
inline std::vector<ReferenceRule> reference_course_rules() {
  return {
      {"P0", {}, {"PeertoPeer"}, Rational(1, 2), Rational(1, 2)},
      {"P1", {}, {"Probabilité"}, Rational(2, 3), Rational(2, 3)},
      {"P2", {}, {"Algorithmique"}, Rational(2, 3), Rational(2, 3)},
      {"P3", {}, {"Algèbre"}, Rational(1, 2), Rational(1, 2)},
      {"P4", {"Probabilité"}, {"Algorithmique"}, Rational(1, 2), Rational(3, 4)},
      {"P5", {"Algorithmique"}, {"Probabilité"}, Rational(1, 2), Rational(3, 4)},
      {"P6", {}, {"Probabilité", "Algorithmique"}, Rational(1, 2), Rational(1, 2)},
      {"P7", {"Algorithmique"}, {"Algèbre"}, Rational(1, 2), Rational(3, 4)},
      {"P8", {}, {"Algorithmique", "Algèbre"}, Rational(1, 2), Rational(1, 2)},
      {"T0", {"Algèbre"}, {"Algorithmique"}, Rational(1, 2), Rational(1)},
  };
}

} // namespace galois::testing
