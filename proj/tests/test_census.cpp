#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "oracles.hpp"

using namespace rlat;

namespace {

using Tab = std::vector<Element>;

struct Raw {
  std::size_t n;
  Tab le, join, prod;  // le as 0/1
};

// Bounded lattices with bottom 0 and top n-1: every partial order on the
// middle elements, kept when all joins and meets exist.
std::vector<Raw> lattices(std::size_t n) {
  const std::size_t k = n - 2;
  std::vector<Raw> out;
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << (k * k)); ++rel) {
    Tab le(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      le[0 * n + x] = 1;
      le[x * n + (n - 1)] = 1;
      le[x * n + x] = 1;
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if ((rel >> (i * k + j)) & 1) le[(i + 1) * n + (j + 1)] = 1;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (x != y && le[x * n + y] && le[y * n + x]) ok = false;
        for (std::size_t z = 0; z < n && ok; ++z)
          if (le[x * n + y] && le[y * n + z] && !le[x * n + z]) ok = false;
      }
    if (!ok) continue;
    Tab join(n * n);
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        std::vector<std::size_t> ub;
        for (std::size_t z = 0; z < n; ++z)
          if (le[x * n + z] && le[y * n + z]) ub.push_back(z);
        std::size_t least = n;
        for (std::size_t u : ub) {
          bool below_all = true;
          for (std::size_t v : ub) below_all = below_all && le[u * n + v];
          if (below_all) least = u;
        }
        if (least == n) ok = false;
        else join[x * n + y] = least;
      }
    if (ok) out.push_back({n, le, join, {}});
  }
  return out;
}

bool residuated_monoid(const Raw& r) {
  const std::size_t n = r.n;
  auto le = [&](std::size_t x, std::size_t y) { return r.le[x * n + y] != 0; };
  auto p = [&](std::size_t x, std::size_t y) { return r.prod[x * n + y]; };
  for (std::size_t x = 0; x < n; ++x) {
    if (p(x, n - 1) != x) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (p(x, y) != p(y, x)) return false;
      for (std::size_t z = 0; z < n; ++z) {
        if (p(p(x, y), z) != p(x, p(y, z))) return false;
        if (le(x, y) && !le(p(x, z), p(y, z))) return false;
      }
      // a greatest z with x z <= y
      std::size_t best = n;
      for (std::size_t z = 0; z < n; ++z) {
        if (!le(p(x, z), y)) continue;
        bool top = true;
        for (std::size_t w = 0; w < n; ++w)
          if (le(p(x, w), y) && !le(w, z)) top = false;
        if (top) best = z;
      }
      if (best == n) return false;
    }
  }
  return true;
}

// Least (join, prod) pair over relabellings of the middle elements.
std::pair<Tab, Tab> canon(std::size_t n, const Tab& join, const Tab& prod) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::pair<Tab, Tab> best{Tab(n * n, n), Tab(n * n, n)};
  do {
    Tab j(n * n), p(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        j[perm[x] * n + perm[y]] = perm[join[x * n + y]];
        p[perm[x] * n + perm[y]] = perm[prod[x * n + y]];
      }
    best = std::min(best, std::pair{j, p});
  } while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

std::set<std::pair<Tab, Tab>> brute_force_census(std::size_t n) {
  std::set<std::pair<Tab, Tab>> out;
  for (Raw r : lattices(n)) {
    // free cells: x <= y among the middle elements
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t x = 1; x + 1 < n; ++x)
      for (std::size_t y = x; y + 1 < n; ++y) cells.push_back({x, y});
    std::vector<std::size_t> val(cells.size(), 0);
    r.prod.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      r.prod[x * n + (n - 1)] = x;
      r.prod[(n - 1) * n + x] = x;
    }
    while (true) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        r.prod[cells[i].first * n + cells[i].second] = val[i];
        r.prod[cells[i].second * n + cells[i].first] = val[i];
      }
      if (residuated_monoid(r)) out.insert(canon(n, r.join, r.prod));
      std::size_t k = 0;
      while (k < val.size() && ++val[k] == n) val[k++] = 0;
      if (k == val.size()) break;
    }
  }
  return out;
}

std::pair<Tab, Tab> canon_of(const Algebra& a) {
  const std::size_t n = a.size();
  Tab j(n * n), p(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      j[x * n + y] = a.join(x, y);
      p[x * n + y] = a.prod(x, y);
    }
  return canon(n, j, p);
}

AlgebraTables relabel(const Algebra& a, const std::vector<Element>& perm) {
  const std::size_t n = a.size();
  const auto t = a.tables();
  AlgebraTables r;
  r.names.resize(n);
  r.join.resize(n * n);
  r.meet.resize(n * n);
  r.prod.resize(n * n);
  for (Element x = 0; x < n; ++x) {
    r.names[perm[x]] = t.names[x];
    for (Element y = 0; y < n; ++y) {
      r.join[perm[x] * n + perm[y]] = perm[a.join(x, y)];
      r.meet[perm[x] * n + perm[y]] = perm[a.meet(x, y)];
      r.prod[perm[x] * n + perm[y]] = perm[a.prod(x, y)];
    }
  }
  r.bottom = perm[a.bottom()];
  r.top = perm[a.top()];
  return r;
}

}  // namespace

TEST_CASE("generator matches the brute-force census up to size 5") {
  for (std::size_t n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const auto expected = brute_force_census(n);
    const auto got = enumerate_algebras(n);
    CHECK(got.complete);
    std::set<std::pair<Tab, Tab>> seen;
    for (const auto& a : got.algebras) seen.insert(canon_of(a));
    CHECK(seen.size() == got.algebras.size());
    CHECK(seen == expected);
  }
}

TEST_CASE("census counts") {
  const std::vector<std::size_t> expected = {0, 0, 1, 2, 7, 26, 129};
  for (std::size_t n = 2; n <= 6; ++n) CHECK(enumerate_algebras(n).algebras.size() == expected[n]);
  std::vector<std::size_t> lattice_counts;
  for (std::size_t n = 2; n <= 6; ++n) lattice_counts.push_back(enumerate_lattices(n).size());
  CHECK(lattice_counts == std::vector<std::size_t>{1, 1, 2, 5, 15});
  CHECK(lattices(5).size() >= 5);
}

TEST_CASE("enumeration is stable") {
  const auto a = enumerate_algebras(5).algebras;
  const auto b = enumerate_algebras(5).algebras;
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(canonical_encoding(a[i]) == canonical_encoding(b[i]));
}

TEST_CASE("the fixture occurs in the size-6 census") {
  const auto fixture = oracle::a6();
  std::size_t hits = 0;
  for (const auto& a : enumerate_algebras(6).algebras) hits += isomorphic(a, fixture);
  CHECK(hits == 1);
}

TEST_CASE("canonical form is invariant under relabelling") {
  const auto a = oracle::a6();
  std::vector<Element> perm = {0, 1, 2, 3, 4, 5};
  const auto enc = canonical_encoding(a);
  do {
    const auto b = Algebra::from_tables(relabel(a, perm));
    CHECK(isomorphic(a, b));
    CHECK(canonical_encoding(b) == enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK_FALSE(isomorphic(a, Algebra::from_tables(oracle::chain_tables(6))));
}

TEST_CASE("encodings round-trip through the parser") {
  for (const auto& a : oracle::census(5)) {
    const auto enc = canonical_encoding(a);
    CHECK(enc.find('\n') == std::string::npos);
    const auto b = load_algebra(enc);
    CHECK(isomorphic(a, b));
    CHECK(canonical_encoding(b) == enc);
  }
}

TEST_CASE("enumeration caps") {
  EnumerateOptions o;
  o.max_count = 3;
  const auto e = enumerate_algebras(5, o);
  CHECK_FALSE(e.complete);
  CHECK(e.algebras.size() == 3);
  CHECK_THROWS_AS(enumerate_algebras(1), PreconditionError);
  CHECK_THROWS_AS(enumerate_algebras(7), PreconditionError);
}

TEST_CASE("census records and summary") {
  std::vector<CensusRecord> records;
  const auto summary = run_census(5, {}, [&](const CensusRecord& r) { records.push_back(r); });
  CHECK(summary.complete);
  CHECK(summary.records == 36);
  CHECK(records.size() == 36);
  CHECK(summary.counts_by_size.size() >= 6);
  CHECK(summary.counts_by_size[4] == 7);
  CHECK(summary.with_failures == 1);
  for (const auto& r : records) {
    const auto j = to_json(r);
    CHECK(j["schema"] == "rlat/1");
    CHECK(j["size"] == r.size);
    CHECK(j["counts"]["filters"] == r.filters);
    CHECK(j["checks"]["failed"] == r.checks_failed);
    CHECK(j["checks"]["failed_ids"].size() == r.failed_ids.size());
    CHECK(r.primes >= r.maximal);
    CHECK(r.filters > r.primes);
    CHECK(j.dump().find('\n') == std::string::npos);
    const auto a = load_algebra(r.encoding);
    CHECK(a.size() == r.size);
    CHECK(is_pm(a) == r.pm);
  }
}

TEST_CASE("size 3 equals the all-tables brute force up to isomorphism") {
  std::set<oracle::TablePair> got;
  for (const auto& a : enumerate_algebras(3).algebras) got.insert(oracle::least_relabelling(a));
  CHECK(got.size() == 2);
  CHECK(got == oracle::all_tables_census(3));
  std::set<oracle::TablePair> two;
  for (const auto& a : enumerate_algebras(2).algebras) two.insert(oracle::least_relabelling(a));
  CHECK(two == oracle::all_tables_census(2));
}
