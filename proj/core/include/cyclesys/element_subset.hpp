#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cyclesys {

/// Ground sets are stored as single 64-bit words.
inline constexpr int kMaxElements = 64;

/// A subset of a ground set of at most 64 elements, stored as a bit mask
/// over the ground set's element indices.
class ElementSubset {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSubset() = default;
  constexpr explicit ElementSubset(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSubset singleton(int e) { return ElementSubset{std::uint64_t{1} << e}; }
  static constexpr ElementSubset first(int n) {
    return ElementSubset{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  static ElementSubset of(std::initializer_list<int> elements);
  static ElementSubset from_indices(std::span<const int> elements);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(ElementSubset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSubset other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest element index; the set must be nonempty.
  constexpr int min() const { return std::countr_zero(bits_); }
  /// Largest element index; the set must be nonempty.
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr ElementSubset with(int e) const { return ElementSubset{bits_ | (std::uint64_t{1} << e)}; }
  constexpr ElementSubset without(int e) const { return ElementSubset{bits_ & ~(std::uint64_t{1} << e)}; }
  constexpr void insert(int e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }
  std::vector<int> indices() const;

  friend constexpr ElementSubset operator|(ElementSubset a, ElementSubset b) { return ElementSubset{a.bits_ | b.bits_}; }
  friend constexpr ElementSubset operator&(ElementSubset a, ElementSubset b) { return ElementSubset{a.bits_ & b.bits_}; }
  friend constexpr ElementSubset operator^(ElementSubset a, ElementSubset b) { return ElementSubset{a.bits_ ^ b.bits_}; }
  friend constexpr ElementSubset operator-(ElementSubset a, ElementSubset b) { return ElementSubset{a.bits_ & ~b.bits_}; }
  constexpr ElementSubset& operator|=(ElementSubset o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSubset& operator&=(ElementSubset o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSubset& operator-=(ElementSubset o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(ElementSubset, ElementSubset) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order: by cardinality, then lexicographic on the sorted index
/// lists.
constexpr bool canonical_less(ElementSubset a, ElementSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() >> std::countr_zero(diff)) & 1U;
}

struct CanonicalLess {
  constexpr bool operator()(ElementSubset a, ElementSubset b) const { return canonical_less(a, b); }
};

void sort_canonical(std::vector<ElementSubset>& sets);

struct ElementSubsetHash {
  std::size_t operator()(ElementSubset s) const noexcept {
    std::uint64_t x = s.bits() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

/// Ordered, duplicate-free list of element labels. The position of a label is
/// its element index and fixes the ground ordering used for canonical output.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  /// Labels "first", "first+1", ... as decimal strings.
  static GroundSet numbered(int count, int first = 1);

  int size() const { return static_cast<int>(labels_.size()); }
  ElementSubset all() const { return ElementSubset::first(size()); }
  const std::string& label(int e) const { return labels_.at(static_cast<std::size_t>(e)); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> find(std::string_view label) const;
  /// Throws DomainError for an unknown label.
  int index_of(std::string_view label) const;
  ElementSubset subset(std::span<const std::string> labels) const;
  ElementSubset subset(std::initializer_list<std::string_view> labels) const;
  std::vector<std::string> labels_of(ElementSubset s) const;
  /// "{3,4,7}"
  std::string format(ElementSubset s) const;

  bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace cyclesys
