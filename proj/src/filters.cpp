#include "rlat/filters.hpp"

#include <algorithm>

namespace rlat {

namespace {

ElementSet up_closure(const Algebra& alg, ElementSet s) {
  ElementSet out;
  for (Element x : s) out |= alg.up(x);
  return out;
}

}  // namespace

bool is_filter(const Algebra& alg, ElementSet s) {
  if (s.empty()) return false;
  for (Element x : s) {
    if (!alg.up(x).subset_of(s)) return false;
    for (Element y : s)
      if (!s.contains(alg.prod(x, y))) return false;
  }
  return true;
}

Filter generated_filter(const Algebra& alg, ElementSet x) {
  ElementSet s = up_closure(alg, x | ElementSet::singleton(alg.top()));
  // Each round adds pairwise products and closes upward; on a finite
  // carrier this reaches the fixpoint within n rounds.
  for (std::size_t round = 0; round <= alg.size(); ++round) {
    ElementSet next = s;
    for (Element a : s)
      for (Element b : s) next.insert(alg.prod(a, b));
    next = up_closure(alg, next);
    if (next == s) break;
    s = next;
  }
  return Filter{s};
}

Filter principal_filter(const Algebra& alg, Element x) {
  return generated_filter(alg, ElementSet::singleton(x));
}

Filter adjoin(const Algebra& alg, const Filter& f, Element x) {
  return generated_filter(alg, f.elems | ElementSet::singleton(x));
}

Filter filter_meet(const Filter& f, const Filter& g) { return Filter{f.elems & g.elems}; }

Filter filter_join(const Algebra& alg, const Filter& f, const Filter& g) {
  return generated_filter(alg, f.elems | g.elems);
}

FilterLattice::FilterLattice(std::vector<Filter> filters) : filters_(std::move(filters)) {
  std::sort(filters_.begin(), filters_.end());
  filters_.erase(std::unique(filters_.begin(), filters_.end()), filters_.end());
}

std::optional<std::size_t> FilterLattice::index_of(const Filter& f) const {
  auto it = std::lower_bound(filters_.begin(), filters_.end(), f);
  if (it == filters_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - filters_.begin());
}

FilterLattice all_filters(const Algebra& alg, std::size_t max_filters) {
  std::vector<Filter> found;
  for (Element x = 0; x < alg.size(); ++x) found.push_back(principal_filter(alg, x));
  FilterLattice lattice(std::move(found));
  if (lattice.size() > max_filters)
    throw CapExceeded("filter count " + std::to_string(lattice.size()) + " exceeds cap " +
                      std::to_string(max_filters));
  return lattice;
}

}  // namespace rlat
