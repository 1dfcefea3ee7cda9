#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlat/filters.hpp"

namespace rlat {

class NotProper : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};
class NotPrime : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};
class Overlap : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};
class BaseNotContained : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};
class NotPrimeCollection : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};
class MultipleMaximal : public PreconditionError {
public:
  MultipleMaximal(std::vector<Filter> maximal, const std::string& what)
      : PreconditionError(what), maximal(std::move(maximal)) {}
  std::vector<Filter> maximal;
};

enum class CollectionKind { spec, max, min, min_over, custom };

/// A duplicate-free, canonically ordered family of prime filters.
class PrimeCollection {
public:
  PrimeCollection() = default;

  /// Checks primeness of every member; throws NotPrimeCollection.
  static PrimeCollection custom(const Algebra& alg, std::vector<Filter> members);

  CollectionKind kind() const { return kind_; }
  /// The generating set of a min_over collection.
  ElementSet over() const { return over_; }
  std::string label(const Algebra& alg) const;

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Filter& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Filter>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::optional<std::size_t> index_of(const Filter& f) const;
  PointSet all_points() const { return PointSet::full(members_.size()); }

  /// Intersection of the members; the whole carrier when empty.
  ElementSet meet(const Algebra& alg) const;
  /// Sub-collection made of the points in `pts`.
  PrimeCollection subcollection(PointSet pts) const;

private:
  friend PrimeCollection make_collection(CollectionKind, ElementSet, std::vector<Filter>);
  CollectionKind kind_ = CollectionKind::custom;
  ElementSet over_;
  std::vector<Filter> members_;
};

/// Wraps already-verified primes. Used by the spectrum builders.
PrimeCollection make_collection(CollectionKind kind, ElementSet over, std::vector<Filter> members);

/// x v y in F implies x in F or y in F. Throws NotProper on F = A.
bool is_prime(const Algebra& alg, const Filter& f);
/// Like is_prime but false instead of throwing on the improper filter.
bool is_prime_filter(const Algebra& alg, const Filter& f);

/// Closed under binary joins (the empty set is not).
bool is_vee_closed(const Algebra& alg, ElementSet s);
/// Least join-closed superset.
ElementSet vee_closure(const Algebra& alg, ElementSet s);

PrimeCollection spec(const Algebra& alg);
PrimeCollection max_filters(const Algebra& alg);
PrimeCollection min_primes(const Algebra& alg);
/// Minimal primes containing `x`; empty when x generates the whole carrier.
PrimeCollection min_primes_over(const Algebra& alg, ElementSet x);

/// `c` is join-closed, misses `f`, and no larger join-closed set misses `f`.
bool is_maximal_vee_closed_avoiding(const Algebra& alg, ElementSet c, const Filter& f);

/// Canonically least filter containing `f` that is maximal among those
/// missing the join-closed set `c`; always prime. Throws Overlap.
Filter prime_avoiding(const Algebra& alg, const Filter& f, ElementSet c);

/// (F:X) = {a | x v a in F for all x in X}
ElementSet coannihilator(const Algebra& alg, const Filter& f, ElementSet x);
/// X^perp = ({1}:X)
ElementSet perp(const Algebra& alg, ElementSet x);

struct CoannihilatorTable {
  Filter base;
  std::vector<ElementSet> by_element;
};
CoannihilatorTable coannihilator_table(const Algebra& alg, const Filter& f);

/// D_F(P) = {a | (F:a) not contained in P}. Throws NotPrime.
ElementSet d_set(const Algebra& alg, const Filter& f, const Filter& p);

struct SeparatingPair {
  std::size_t first, second;  // member indices, first < second
  Element a1, a2;             // a1 not in first, a2 not in second, a1 v a2 in F
};

struct FClosedReport {
  bool closed = true;
  std::vector<SeparatingPair> witnesses;
  std::optional<std::pair<std::size_t, std::size_t>> failing;
};

/// Throws BaseNotContained unless F is contained in every member.
FClosedReport is_f_closed(const Algebra& alg, const PrimeCollection& pi, const Filter& f);

bool is_antichain(const PrimeCollection& pi);
/// S_Pi = {Q in Spec | meet(Pi) <= Q <= P for some P in Pi}
PrimeCollection s_pi(const Algebra& alg, const PrimeCollection& pi);

/// Decides F-minimality of the prime P three ways (membership in Min_F,
/// P = D_F(P), and "exactly one of x in P, (F:x) <= P"). Throws
/// InternalInconsistency if they disagree.
bool check_minimality(const Algebra& alg, const Filter& f, const Filter& p);

/// Throws NotProper or MultipleMaximal.
Filter unique_maximal_over(const Algebra& alg, const Filter& p);

}  // namespace rlat
