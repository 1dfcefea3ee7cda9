#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "rlat/theorems.hpp"

namespace rlat {

inline constexpr std::size_t max_enumeration_size = 6;

struct EnumerateOptions {
  /// Stop after this many algebras of the requested size.
  std::size_t max_count = 100'000;
  /// Zero means no limit.
  std::chrono::milliseconds time_limit{0};
};

struct Enumeration {
  std::vector<Algebra> algebras;
  /// False when a count or time cap stopped the search early.
  bool complete = true;
};

/// Bounded lattices on n elements up to isomorphism, as join/meet tables
/// with bottom 0 and top n-1. 2 <= n <= max_enumeration_size.
std::vector<AlgebraTables> enumerate_lattices(std::size_t n);

/// Residuated lattices on n elements up to isomorphism, in a fixed order.
/// Throws PreconditionError outside 2 <= n <= max_enumeration_size.
Enumeration enumerate_algebras(std::size_t n, const EnumerateOptions& options = {});

/// Tables renamed by the least permutation of the middle elements; two
/// algebras are isomorphic iff their canonical forms are equal.
Algebra canonical_form(const Algebra& alg);
bool isomorphic(const Algebra& a, const Algebra& b);

/// One-line .rlat text of the canonical form, default element names.
std::string canonical_encoding(const Algebra& alg);

struct CensusRecord {
  std::size_t size = 0;
  std::string encoding;
  std::size_t filters = 0, primes = 0, maximal = 0, minimal = 0;
  bool mtl = false, star = false, bigstar = false, pm = false;
  std::size_t checks_passed = 0, checks_failed = 0;
  std::vector<std::string> failed_ids;
};

CensusRecord census_record(const Algebra& alg, const TheoremReport& report);
nlohmann::ordered_json to_json(const CensusRecord& record);

struct CensusOptions {
  EnumerateOptions enumerate;
  SuiteOptions suite;
};

struct CensusSummary {
  std::vector<std::size_t> counts_by_size;  // index = size
  std::size_t records = 0;
  std::size_t with_failures = 0;
  bool complete = true;
};

/// Enumerates every size from 2 to max_n, runs the suite on each algebra
/// and hands records to `sink` as they are produced.
CensusSummary run_census(std::size_t max_n, const CensusOptions& options,
                         const std::function<void(const CensusRecord&)>& sink);

}  // namespace rlat
