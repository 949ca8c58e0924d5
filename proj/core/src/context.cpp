#include "galois/context.hpp"

#include "galois/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace galois {

namespace {

template <class Map>
void index_names(const std::vector<std::string>& names, Map& index, const char* what) {
  if (names.empty()) throw ValidationError(std::string("context has no ") + what);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second)
      throw ValidationError(std::string("duplicate ") + what + " identifier '" + names[i] + "'");
  }
}

} // namespace

FormalContext::FormalContext(std::vector<std::string> individuals, std::vector<std::string> properties,
                             const std::vector<std::vector<bool>>& incidence)
    : individuals_(std::move(individuals)), properties_(std::move(properties)) {
  index_names(individuals_, individual_index_, "individual");
  index_names(properties_, property_index_, "property");
  if (incidence.size() != individuals_.size())
    throw ValidationError("incidence has " + std::to_string(incidence.size()) + " rows, expected " +
                          std::to_string(individuals_.size()));

  rows_.assign(individuals_.size(), Motif(properties_.size()));
  columns_.assign(properties_.size(), Extent(individuals_.size()));
  for (std::size_t i = 0; i < incidence.size(); ++i) {
    if (incidence[i].size() != properties_.size())
      throw ValidationError("incidence row " + std::to_string(i) + " has " + std::to_string(incidence[i].size()) +
                            " cells, expected " + std::to_string(properties_.size()));
    for (std::size_t p = 0; p < properties_.size(); ++p) {
      if (incidence[i][p]) {
        rows_[i].insert(p);
        columns_[p].insert(i);
      }
    }
  }
}

std::size_t FormalContext::property_index(std::string_view name) const {
  auto it = property_index_.find(std::string(name));
  if (it == property_index_.end()) throw LookupError("unknown property '" + std::string(name) + "'");
  return it->second;
}

std::size_t FormalContext::individual_index(std::string_view name) const {
  auto it = individual_index_.find(std::string(name));
  if (it == individual_index_.end()) throw LookupError("unknown individual '" + std::string(name) + "'");
  return it->second;
}

Motif FormalContext::motif(std::span<const std::string> names) const {
  Motif m = no_properties();
  for (const auto& n : names) m.insert(property_index(n));
  return m;
}

Motif FormalContext::motif(std::initializer_list<std::string_view> names) const {
  Motif m = no_properties();
  for (auto n : names) m.insert(property_index(n));
  return m;
}

Extent FormalContext::individual_set(std::initializer_list<std::string_view> names) const {
  Extent e = no_individuals();
  for (auto n : names) e.insert(individual_index(n));
  return e;
}

std::vector<std::string> FormalContext::names(const Motif& m) const {
  check(m);
  std::vector<std::string> out;
  m.for_each([&](std::size_t p) { out.push_back(properties_[p]); });
  return out;
}

std::vector<std::string> FormalContext::names(const Extent& e) const {
  check(e);
  std::vector<std::string> out;
  e.for_each([&](std::size_t i) { out.push_back(individuals_[i]); });
  return out;
}

void FormalContext::check(const Motif& m) const {
  if (m.universe() != properties_.size())
    throw LookupError("motif over " + std::to_string(m.universe()) + " properties used with a context of " +
                      std::to_string(properties_.size()));
}

void FormalContext::check(const Extent& e) const {
  if (e.universe() != individuals_.size())
    throw LookupError("individual set over " + std::to_string(e.universe()) + " individuals used with a context of " +
                      std::to_string(individuals_.size()));
}

Extent image(const FormalContext& ctx, const Motif& m) {
  ctx.check(m);
  Extent out = ctx.all_individuals();
  m.for_each([&](std::size_t p) { out &= ctx.column(p); });
  return out;
}

Motif intent_of(const FormalContext& ctx, const Extent& inds) {
  ctx.check(inds);
  Motif out = ctx.all_properties();
  inds.for_each([&](std::size_t i) { out &= ctx.row(i); });
  return out;
}

Motif closure(const FormalContext& ctx, const Motif& m) { return intent_of(ctx, image(ctx, m)); }

Rational motif_support(const FormalContext& ctx, const Motif& m) {
  return Rational(static_cast<std::int64_t>(image(ctx, m).size()), static_cast<std::int64_t>(ctx.num_individuals()));
}

std::optional<ContextFormat> context_format_from_string(std::string_view name) {
  if (name == "csv") return ContextFormat::csv;
  if (name == "cxt") return ContextFormat::cxt;
  return std::nullopt;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view doc) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= doc.size()) {
    auto end = doc.find('\n', start);
    if (end == std::string_view::npos) end = doc.size();
    auto line = doc.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  // A trailing newline produces one empty tail entry.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string_view strip_bom(std::string_view s) {
  if (s.size() >= 3 && s.substr(0, 3) == "\xEF\xBB\xBF") s.remove_prefix(3);
  return s;
}

// Splits one CSV record. Double-quoted fields may contain separators; a
// doubled quote inside a quoted field is a literal quote.
std::vector<std::string> split_csv(std::string_view line, std::size_t line_no) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && trim(field).empty()) {
      quoted = true;
      was_quoted = true;
      field.clear();
    } else if (c == ',') {
      out.push_back(was_quoted ? field : std::string(trim(field)));
      field.clear();
      was_quoted = false;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw ParseError(line_no, line.size() + 1, "unterminated quoted field");
  out.push_back(was_quoted ? field : std::string(trim(field)));
  return out;
}

FormalContext parse_csv(std::string_view doc) {
  const auto lines = split_lines(strip_bom(doc));
  std::size_t first = 0;
  while (first < lines.size() && trim(lines[first]).empty()) ++first;
  if (first == lines.size()) throw ParseError(1, 1, "empty document");

  auto header = split_csv(lines[first], first + 1);
  if (header.size() < 2) throw ParseError(first + 1, 1, "header needs a corner cell and at least one property");
  if (!header[0].empty() && header[0] != "R")
    throw ParseError(first + 1, 1, "header corner cell must be blank or 'R', got '" + header[0] + "'");
  std::vector<std::string> properties(header.begin() + 1, header.end());
  for (std::size_t c = 0; c < properties.size(); ++c) {
    if (properties[c].empty()) throw ParseError(first + 1, c + 2, "empty property name");
    for (std::size_t d = 0; d < c; ++d)
      if (properties[d] == properties[c])
        throw ParseError(first + 1, c + 2, "duplicate property '" + properties[c] + "'");
  }

  std::vector<std::string> individuals;
  std::vector<std::vector<bool>> incidence;
  for (std::size_t l = first + 1; l < lines.size(); ++l) {
    if (trim(lines[l]).empty()) continue;
    auto cells = split_csv(lines[l], l + 1);
    if (cells.size() != header.size())
      throw ParseError(l + 1, std::min(cells.size(), header.size()) + 1,
                       "ragged row: " + std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(header.size()));
    if (cells[0].empty()) throw ParseError(l + 1, 1, "empty individual name");
    if (std::find(individuals.begin(), individuals.end(), cells[0]) != individuals.end())
      throw ParseError(l + 1, 1, "duplicate individual '" + cells[0] + "'");
    std::vector<bool> row(properties.size());
    for (std::size_t c = 1; c < cells.size(); ++c) {
      if (cells[c] == "1")
        row[c - 1] = true;
      else if (cells[c] != "0")
        throw ParseError(l + 1, c + 1, "non-binary cell '" + cells[c] + "'");
    }
    individuals.push_back(std::move(cells[0]));
    incidence.push_back(std::move(row));
  }
  if (individuals.empty()) throw ParseError(lines.size() + 1, 1, "no individuals");
  return FormalContext(std::move(individuals), std::move(properties), incidence);
}

std::size_t parse_count(std::string_view s, std::size_t line_no, const char* what) {
  s = trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line_no, 1, std::string("expected ") + what + " count, got '" + std::string(s) + "'");
  if (value == 0) throw ParseError(line_no, 1, std::string(what) + " count must be positive");
  return value;
}

bool is_count(std::string_view s) {
  s = trim(s);
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

FormalContext parse_cxt(std::string_view doc) {
  const auto lines = split_lines(strip_bom(doc));
  std::size_t l = 0;
  if (lines.empty() || trim(lines[0]) != "B") throw ParseError(1, 1, "CXT document must start with 'B'");
  ++l;
  // Optional context name and blank lines precede the two dimensions.
  std::size_t skipped = 0;
  while (l < lines.size() && !is_count(lines[l])) {
    if (++skipped > 2) throw ParseError(l + 1, 1, "expected object count");
    ++l;
  }
  if (l + 1 >= lines.size()) throw ParseError(l + 1, 1, "missing dimensions");
  const auto n_obj = parse_count(lines[l], l + 1, "object");
  const auto n_attr = parse_count(lines[l + 1], l + 2, "attribute");
  l += 2;
  while (l < lines.size() && trim(lines[l]).empty()) ++l;

  auto take_names = [&](std::size_t n, const char* what) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k, ++l) {
      if (l >= lines.size()) throw ParseError(l + 1, 1, std::string("missing ") + what + " name");
      auto name = std::string(trim(lines[l]));
      if (name.empty()) throw ParseError(l + 1, 1, std::string("empty ") + what + " name");
      if (std::find(names.begin(), names.end(), name) != names.end())
        throw ParseError(l + 1, 1, std::string("duplicate ") + what + " '" + name + "'");
      names.push_back(std::move(name));
    }
    return names;
  };
  auto individuals = take_names(n_obj, "object");
  auto properties = take_names(n_attr, "attribute");

  std::vector<std::vector<bool>> incidence;
  while (incidence.size() < n_obj) {
    if (l >= lines.size()) throw ParseError(l + 1, 1, "missing incidence row");
    auto row_text = trim(lines[l]);
    if (row_text.size() != n_attr)
      throw ParseError(l + 1, std::min(row_text.size(), n_attr) + 1,
                       "ragged row: " + std::to_string(row_text.size()) + " cells, expected " + std::to_string(n_attr));
    std::vector<bool> row(n_attr);
    for (std::size_t c = 0; c < n_attr; ++c) {
      const char ch = row_text[c];
      if (ch == 'X' || ch == 'x')
        row[c] = true;
      else if (ch != '.')
        throw ParseError(l + 1, c + 1, std::string("non-binary cell '") + ch + "'");
    }
    incidence.push_back(std::move(row));
    ++l;
  }
  for (; l < lines.size(); ++l)
    if (!trim(lines[l]).empty()) throw ParseError(l + 1, 1, "trailing content after incidence rows");
  return FormalContext(std::move(individuals), std::move(properties), incidence);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos && trim(s) == s) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

} // namespace

FormalContext parse_context(std::string_view doc, ContextFormat format) {
  return format == ContextFormat::csv ? parse_csv(doc) : parse_cxt(doc);
}

std::string serialize_context(const FormalContext& ctx, ContextFormat format) {
  std::ostringstream out;
  if (format == ContextFormat::csv) {
    out << 'R';
    for (const auto& p : ctx.properties()) out << ',' << csv_field(p);
    out << '\n';
    for (std::size_t i = 0; i < ctx.num_individuals(); ++i) {
      out << csv_field(ctx.individuals()[i]);
      for (std::size_t p = 0; p < ctx.num_properties(); ++p) out << ',' << (ctx.has(i, p) ? '1' : '0');
      out << '\n';
    }
  } else {
    out << "B\n\n" << ctx.num_individuals() << '\n' << ctx.num_properties() << "\n\n";
    for (const auto& i : ctx.individuals()) out << i << '\n';
    for (const auto& p : ctx.properties()) out << p << '\n';
    for (std::size_t i = 0; i < ctx.num_individuals(); ++i) {
      for (std::size_t p = 0; p < ctx.num_properties(); ++p) out << (ctx.has(i, p) ? 'X' : '.');
      out << '\n';
    }
  }
  return out.str();
}

FormalContext load_context_file(const std::filesystem::path& path, std::optional<ContextFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LookupError("cannot open context file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (!format) format = path.extension() == ".cxt" ? ContextFormat::cxt : ContextFormat::csv;
  return parse_context(buf.str(), *format);
}

} // namespace galois
