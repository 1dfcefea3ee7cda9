#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rlat/spectrum.hpp"

namespace rlat {

enum class BasisTag { d, h };

/// A basic open set together with the element that produced it:
/// d(x) = {P | x not in P} or h(x) = {P | x in P}.
struct BasisSet {
  PointSet set;
  BasisTag tag;
  Element x;
};

/// A topology on {0..m-1}, materialized as its full family of open sets.
class FiniteTopology {
public:
  /// Topology generated by `basis` used as a subbase. Throws CapExceeded
  /// when the open family would exceed `max_opens`.
  static FiniteTopology generated(std::size_t ground_size, std::vector<BasisSet> basis,
                                  std::size_t max_opens = std::size_t{1} << 20);

  std::size_t ground_size() const { return m_; }
  PointSet ground() const { return PointSet::full(m_); }
  /// Sorted by cardinality, then packed word.
  const std::vector<PointSet>& opens() const { return opens_; }
  const std::vector<BasisSet>& basis() const { return basis_; }
  std::vector<PointSet> closed_sets() const;

  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(s.complement(m_)); }
  bool is_clopen(PointSet s) const { return is_open(s) && is_closed(s); }
  /// Least closed superset.
  PointSet closure(PointSet s) const;
  /// Largest open subset.
  PointSet interior(PointSet s) const;

  /// Same open family (bases may differ).
  bool operator==(const FiniteTopology& o) const { return m_ == o.m_ && opens_ == o.opens_; }

private:
  std::size_t m_ = 0;
  std::vector<PointSet> opens_;
  std::vector<BasisSet> basis_;
};

bool is_t0(const FiniteTopology& t);
bool is_t1(const FiniteTopology& t);
bool is_hausdorff(const FiniteTopology& t);
/// Disjoint closed sets have disjoint open neighbourhoods.
bool is_normal(const FiniteTopology& t);
/// Every open cover has a finite subcover; always true on a finite ground
/// set, decided here through reduce_cover on the cover by all opens.
bool is_compact(const FiniteTopology& t);
bool is_zero_dimensional(const FiniteTopology& t);
bool is_totally_disconnected(const FiniteTopology& t);
bool is_extremally_disconnected(const FiniteTopology& t);
/// `fine` has every open set of `coarse`.
bool is_finer(const FiniteTopology& fine, const FiniteTopology& coarse);

/// Indices into `cover` of a smallest subfamily with the same union.
/// Throws PreconditionError if `cover` does not cover the ground set.
std::vector<std::size_t> reduce_cover(const FiniteTopology& t, const std::vector<PointSet>& cover);

/// map[i] is the image of point i.
bool is_continuous(const FiniteTopology& from, const FiniteTopology& to,
                   const std::vector<std::size_t>& map);

// Hull / kernel over an arbitrary family of filters.

/// h(X) = {F | X is contained in F}
PointSet hull(const std::vector<Filter>& family, ElementSet x);
/// k(family restricted to pts) = intersection; the whole carrier on the empty set.
ElementSet kernel(const Algebra& alg, const std::vector<Filter>& family, PointSet pts);
/// d(X) = {F | X not contained in F}
PointSet d_open(const std::vector<Filter>& family, ElementSet x);

inline PointSet hull(const PrimeCollection& pi, ElementSet x) { return hull(pi.members(), x); }
inline ElementSet kernel(const Algebra& alg, const PrimeCollection& pi, PointSet pts) {
  return kernel(alg, pi.members(), pts);
}
inline PointSet d_open(const PrimeCollection& pi, ElementSet x) { return d_open(pi.members(), x); }

/// Open sets: unions of d(x). Closed sets are checked to be exactly the
/// hulls. Throws NotPrimeCollection.
FiniteTopology hk_topology(const Algebra& alg, const PrimeCollection& pi);
/// Generated by the basis h(x). Throws NotPrimeCollection.
FiniteTopology dual_topology(const Algebra& alg, const PrimeCollection& pi);

/// Every proper filter lies in some member.
bool is_full(const Algebra& alg, const PrimeCollection& pi);

struct HullKernelSpace {
  PrimeCollection collection;
  FiniteTopology hk;
  FiniteTopology dual;
};

HullKernelSpace make_space(const Algebra& alg, PrimeCollection pi);

/// hk(pts); checked against the closure in the hull-kernel topology.
PointSet closure(const Algebra& alg, const HullKernelSpace& space, PointSet pts);

enum class Which { hull_kernel, dual };

struct SeparationReport {
  bool t0 = false, t1 = false, hausdorff = false, normal = false, t4 = false;
};

/// Decided on the materialized topology, then compared with the algebraic
/// characterizations (T0 always, T1 iff antichain, Hausdorff iff the
/// collection is closed over its own meet). Throws InternalInconsistency.
SeparationReport separation(const Algebra& alg, const HullKernelSpace& space,
                            Which which = Which::hull_kernel);

struct CompactnessReport {
  bool compact_h = false, compact_d = false, full = false;
};
CompactnessReport compactness(const Algebra& alg, const HullKernelSpace& space);

struct ConnectednessReport {
  bool zero_dimensional = false, totally_disconnected = false, extremally_disconnected = false,
       stonean = false;
};
ConnectednessReport connectedness(const FiniteTopology& t);

/// All continuous maps from `big` onto its subspace `sub` fixing `sub`
/// pointwise. `sub` must be a subcollection of `big`. Throws CapExceeded
/// if more than `max_maps` candidate maps would be scanned.
std::vector<std::vector<std::size_t>> retractions(const Algebra& alg, const PrimeCollection& big,
                                                  const PrimeCollection& sub, Which which,
                                                  std::size_t max_maps = 1'000'000);

class NotPm : public PreconditionError {
public:
  NotPm(Filter witness, const std::string& what) : PreconditionError(what), witness(witness) {}
  Filter witness;
};

struct Retraction {
  PrimeCollection spec, max;
  /// image[i] = index in `max` of the maximal filter above spec[i]
  std::vector<std::size_t> image;
};

/// P -> the unique maximal filter above P. Verifies continuity and that
/// maximal filters are fixed (InternalInconsistency otherwise). Throws
/// NotPm with the first prime lying under several maximal filters.
Retraction retraction_spec_to_max(const Algebra& alg);

struct IdentityFailure {
  std::string identity;
  std::string witness;
};

struct IdentityReport {
  std::vector<IdentityFailure> failures;
  std::size_t checked = 0;
  bool ok() const { return failures.empty(); }
};

/// Galois-connection battery for h and k over `family`, quantifying X over
/// `samples` and the subfamilies exhaustively when there are at most 2^10.
IdentityReport check_galois(const Algebra& alg, const std::vector<Filter>& family,
                            const std::vector<ElementSet>& samples);

/// Identities of the minimal prime space (hulls and kernels relative to Min).
IdentityReport min_space_identities(const Algebra& alg, const std::vector<ElementSet>& samples);

}  // namespace rlat
