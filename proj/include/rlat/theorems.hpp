#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rlat/topology.hpp"

namespace rlat {

inline constexpr std::uint64_t default_seed = 0xA6;

/// RLAT_SEED from the environment (decimal or 0x-prefixed), else 0xA6.
std::uint64_t sampling_seed();

/// Subsets used to quantify over X: empty set, carrier, singletons, all
/// filters, then `random_count` pseudo-random subsets from `seed`.
/// Deterministic and duplicate-free.
std::vector<ElementSet> sample_subsets(const Algebra& alg, std::uint64_t seed,
                                       std::size_t random_count = 64);

/// Spec, Max, Min, every nonempty Min_F, and (when Spec has at most
/// `max_exhaustive` members) every nonempty subcollection of Spec.
std::vector<PrimeCollection> suite_collections(const Algebra& alg, std::size_t max_exhaustive = 6);

/// "spec", "max", "minover:{d, 1}" or the member list for custom collections.
std::string describe(const Algebra& alg, const PrimeCollection& pi);

/// For every x some y has x^perp^perp = y^perp.
bool star_check(const Algebra& alg);
/// For every X some y has X^perp = y^perp.
bool bigstar_check(const Algebra& alg);

/// Every prime filter lies under exactly one maximal filter.
bool is_pm(const Algebra& alg);

struct CatalogEntry {
  std::string_view id;
  std::string_view statement;
};

/// Fixed list of checks run by run_suite, in report order.
const std::vector<CatalogEntry>& catalog();

struct CheckResult {
  std::string id;
  std::string statement;
  bool pass = false;
  /// First counterexample found, empty on success.
  std::string witness;
};

struct TheoremReport {
  std::string algebra_id;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

struct SuiteOptions {
  std::uint64_t seed = default_seed;
  std::size_t random_samples = 64;
  std::size_t max_exhaustive_collection = 6;
};

/// Runs every catalog check on `alg`. Failures are recorded, not thrown.
TheoremReport run_suite(const Algebra& alg, const SuiteOptions& options = {},
                        std::string algebra_id = {});

/// Validation gate: throws ValidationFailed when `tables` is not a
/// residuated lattice, otherwise runs the suite.
TheoremReport run_suite(const AlgebraTables& tables, const SuiteOptions& options = {},
                        std::string algebra_id = {});

}  // namespace rlat
