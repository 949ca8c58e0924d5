#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace galois {

/// Fixed-universe set of indices backed by a dynamic bitset.
///
/// The tag parameter keeps property sets, individual sets and taxonomy term
/// sets from being mixed up. Ordering is lexicographic on the ascending list
/// of members, which is what every export sorts by.
template <class Tag>
class IndexSet {
public:
  using bits_type = boost::dynamic_bitset<std::uint64_t>;

  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : bits_(universe) {}
  explicit IndexSet(bits_type bits) : bits_(std::move(bits)) {}

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    s.bits_.set();
    return s;
  }

  static IndexSet of(std::size_t universe, std::initializer_list<std::size_t> members) {
    IndexSet s(universe);
    for (auto m : members) s.insert(m);
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(std::size_t i) const { return i < bits_.size() && bits_.test(i); }
  void insert(std::size_t i) { bits_.set(i); }
  void erase(std::size_t i) { bits_.reset(i); }

  bool is_subset_of(const IndexSet& o) const { return bits_.is_subset_of(o.bits_); }
  bool is_proper_subset_of(const IndexSet& o) const { return bits_.is_proper_subset_of(o.bits_); }
  bool intersects(const IndexSet& o) const { return bits_.intersects(o.bits_); }

  IndexSet& operator&=(const IndexSet& o) { bits_ &= o.bits_; return *this; }
  IndexSet& operator|=(const IndexSet& o) { bits_ |= o.bits_; return *this; }
  IndexSet& operator-=(const IndexSet& o) { bits_ -= o.bits_; return *this; }

  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }

  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    auto i = a.bits_.find_first();
    auto j = b.bits_.find_first();
    while (i != bits_type::npos && j != bits_type::npos) {
      if (i != j) return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
      i = a.bits_.find_next(i);
      j = b.bits_.find_next(j);
    }
    if (i == j) return a.universe() <=> b.universe();
    return i == bits_type::npos ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != bits_type::npos; i = bits_.find_next(i)) f(i);
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  const bits_type& bits() const noexcept { return bits_; }

private:
  bits_type bits_;
};

struct PropertyTag;
struct IndividualTag;
struct TermTag;

/// A set of context properties (an itemset).
using Motif = IndexSet<PropertyTag>;
/// A set of individuals, e.g. the image of a motif or a concept extent.
using Extent = IndexSet<IndividualTag>;
/// A set of taxonomy terms; leaves coincide with context properties.
using GeneralizedMotif = IndexSet<TermTag>;

} // namespace galois
