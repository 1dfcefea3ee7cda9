#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "rlat/algebra.hpp"

namespace rlat {

/// A nonempty, product-closed, upward-closed subset of the carrier.
struct Filter {
  ElementSet elems;

  bool contains(Element x) const { return elems.contains(x); }
  bool subset_of(const Filter& o) const { return elems.subset_of(o.elems); }

  bool operator==(const Filter&) const = default;
  /// Canonical order: cardinality, then packed membership word.
  std::strong_ordering operator<=>(const Filter& o) const { return elems <=> o.elems; }
};

bool is_filter(const Algebra& alg, ElementSet s);

/// Least filter containing `x`; the empty set generates {1}.
Filter generated_filter(const Algebra& alg, ElementSet x);
Filter principal_filter(const Algebra& alg, Element x);

/// F(F, x): the filter generated by F and x.
Filter adjoin(const Algebra& alg, const Filter& f, Element x);

inline bool is_proper(const Algebra& alg, const Filter& f) { return !f.contains(alg.bottom()); }

Filter filter_meet(const Filter& f, const Filter& g);
Filter filter_join(const Algebra& alg, const Filter& f, const Filter& g);

/// All filters of an algebra in canonical order.
class FilterLattice {
public:
  explicit FilterLattice(std::vector<Filter> filters);

  std::size_t size() const { return filters_.size(); }
  const Filter& operator[](std::size_t i) const { return filters_[i]; }
  const std::vector<Filter>& filters() const { return filters_; }
  auto begin() const { return filters_.begin(); }
  auto end() const { return filters_.end(); }

  std::optional<std::size_t> index_of(const Filter& f) const;
  /// filters()[i] is a subset of filters()[j]
  bool includes(std::size_t i, std::size_t j) const { return filters_[i].subset_of(filters_[j]); }

private:
  std::vector<Filter> filters_;
};

inline constexpr std::size_t default_filter_cap = 4096;

/// Every filter of a finite residuated lattice is the principal filter of
/// its least element, so the lattice is the deduplicated family of
/// principal filters. Throws CapExceeded above `max_filters`.
FilterLattice all_filters(const Algebra& alg, std::size_t max_filters = default_filter_cap);

}  // namespace rlat
