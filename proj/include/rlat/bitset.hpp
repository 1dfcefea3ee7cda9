#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rlat {

/// Fixed-width set of small indices (at most 64) packed into one word.
///
/// The tag parameter keeps sets of carrier elements and sets of points of
/// a space from being mixed up; both share the same representation.
template <class Tag>
class BitSet {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t max_width = 64;

  constexpr BitSet() = default;
  static constexpr BitSet from_word(word_type w) { return BitSet(w); }

  /// All indices in [0, n).
  static constexpr BitSet full(std::size_t n) {
    return BitSet(n >= max_width ? ~word_type{0} : ((word_type{1} << n) - 1));
  }
  static constexpr BitSet singleton(std::size_t i) { return BitSet(word_type{1} << i); }

  constexpr word_type word() const { return bits_; }

  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(std::size_t i) { bits_ |= word_type{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(word_type{1} << i); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr bool subset_of(BitSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(BitSet o) const { return (bits_ & o.bits_) != 0; }

  /// Complement relative to the universe [0, n).
  constexpr BitSet complement(std::size_t n) const { return BitSet(~bits_ & full(n).bits_); }

  /// Lowest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr BitSet operator|(BitSet o) const { return BitSet(bits_ | o.bits_); }
  constexpr BitSet operator&(BitSet o) const { return BitSet(bits_ & o.bits_); }
  constexpr BitSet operator-(BitSet o) const { return BitSet(bits_ & ~o.bits_); }
  constexpr BitSet& operator|=(BitSet o) { bits_ |= o.bits_; return *this; }
  constexpr BitSet& operator&=(BitSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const BitSet&) const = default;

  /// Canonical order: by cardinality, then by the packed word.
  constexpr std::strong_ordering operator<=>(const BitSet& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return bits_ <=> o.bits_;
  }

  class iterator {
  public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(word_type w) : rest_(w) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;
  private:
    word_type rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

private:
  constexpr explicit BitSet(word_type w) : bits_(w) {}
  word_type bits_ = 0;
};

struct ElementTag {};
struct PointTag {};

/// Subset of an algebra's carrier.
using ElementSet = BitSet<ElementTag>;
/// Subset of the members of a filter collection (points of a space).
using PointSet = BitSet<PointTag>;

}  // namespace rlat
