#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"

using namespace rlat;
using oracle::eset;
using oracle::filt;

namespace {

struct A6 {
  Algebra a = oracle::a6();
  Filter f1 = filt(a, {"1"});
  Filter f2 = filt(a, {"d", "1"});
  Filter f3 = filt(a, {"a", "b", "d", "1"});
  Filter f4 = filt(a, {"c", "d", "1"});
  Filter all{a.carrier()};
};

}  // namespace

TEST_CASE("prime examples") {
  A6 s;
  CHECK(is_prime(s.a, s.f3));
  CHECK_FALSE(is_prime(s.a, s.f2));
  CHECK(is_prime(s.a, s.f1));
  CHECK(is_prime(s.a, s.f4));
  CHECK_THROWS_AS(is_prime(s.a, s.all), NotProper);
  CHECK_FALSE(is_prime_filter(s.a, s.all));
}

TEST_CASE("spectra of the fixture") {
  A6 s;
  CHECK(spec(s.a).members() == std::vector<Filter>{s.f1, s.f4, s.f3});
  CHECK(max_filters(s.a).members() == std::vector<Filter>{s.f4, s.f3});
  CHECK(min_primes(s.a).members() == std::vector<Filter>{s.f1});
  CHECK(spec(s.a).kind() == CollectionKind::spec);
  CHECK(spec(s.a).label(s.a) == "spec");
}

TEST_CASE("spectra of small algebras") {
  const auto two = Algebra::from_tables(oracle::chain_tables(2));
  const std::vector<Filter> unit = {Filter{ElementSet::singleton(1)}};
  CHECK(spec(two).members() == unit);
  CHECK(max_filters(two).members() == unit);
  CHECK(min_primes(two).members() == unit);

  const auto b4 = Algebra::from_tables(oracle::boolean4_tables());
  const std::vector<Filter> ultra = {filt(b4, {"a", "1"}), filt(b4, {"b", "1"})};
  CHECK(spec(b4).members() == ultra);
  CHECK(max_filters(b4).members() == ultra);
  CHECK(min_primes(b4).members() == ultra);
}

TEST_CASE("spectra agree with the subset-scan oracle") {
  auto census = oracle::census(5);
  census.push_back(oracle::a6());
  for (const auto& a : census) {
    const auto primes = oracle::primes(a);
    CHECK(oracle::as_set(spec(a)) == oracle::as_set(primes));
    CHECK(oracle::as_set(max_filters(a)) ==
          oracle::as_set(oracle::maximal_of(oracle::proper_filters(a))));
    CHECK(oracle::as_set(min_primes(a)) == oracle::as_set(oracle::minimal_of(primes)));
  }
}

TEST_CASE("minimal primes over a set") {
  A6 s;
  CHECK(min_primes_over(s.a, eset(s.a, {"d"})).members() == std::vector<Filter>{s.f4, s.f3});
  CHECK(min_primes_over(s.a, eset(s.a, {"1"})).members() == min_primes(s.a).members());
  CHECK(min_primes_over(s.a, eset(s.a, {"b", "c"})).empty());
  CHECK(min_primes_over(s.a, eset(s.a, {"d"})).label(s.a) == "minover:{d}");
}

TEST_CASE("join-closed sets") {
  A6 s;
  CHECK(is_vee_closed(s.a, eset(s.a, {"0", "c"})));
  for (Element x = 0; x < s.a.size(); ++x) CHECK(is_vee_closed(s.a, ElementSet::singleton(x)));
  CHECK_FALSE(is_vee_closed(s.a, eset(s.a, {"b", "c"})));
  CHECK_FALSE(is_vee_closed(s.a, ElementSet{}));
  CHECK(vee_closure(s.a, eset(s.a, {"b", "c"})) == eset(s.a, {"b", "c", "d"}));
}

TEST_CASE("prime avoiding a join-closed set") {
  A6 s;
  CHECK(prime_avoiding(s.a, s.f1, eset(s.a, {"0", "c"})) == s.f3);
  CHECK(prime_avoiding(s.a, s.f2, eset(s.a, {"b"})) == s.f4);
  for (const auto& p : spec(s.a))
    CHECK(prime_avoiding(s.a, p, p.elems.complement(s.a.size())) == p);
  CHECK_THROWS_AS(prime_avoiding(s.a, s.f2, eset(s.a, {"d"})), Overlap);
  CHECK_THROWS_AS(prime_avoiding(s.a, s.f1, eset(s.a, {"b", "c"})), PreconditionError);
}

TEST_CASE("coannihilators") {
  A6 s;
  CHECK(coannihilator(s.a, s.f1, eset(s.a, {"a"})) == eset(s.a, {"1"}));
  CHECK(coannihilator(s.a, s.f2, ElementSet::singleton(s.a.top())) == s.a.carrier());
  CHECK(coannihilator(s.a, s.f2, eset(s.a, {"c"})) == eset(s.a, {"a", "b", "d", "1"}));
  CHECK(coannihilator(s.a, s.f2, ElementSet{}) == s.a.carrier());
  CHECK(perp(s.a, eset(s.a, {"c"})) == eset(s.a, {"1"}));
  CHECK(perp(s.a, eset(s.a, {"1"})) == s.a.carrier());
  CHECK(perp(s.a, s.a.carrier()) == eset(s.a, {"1"}));
  const auto table = coannihilator_table(s.a, s.f2);
  for (Element x = 0; x < s.a.size(); ++x) {
    CHECK(is_filter(s.a, table.by_element[x]));
    CHECK(s.f2.elems.subset_of(table.by_element[x]));
  }
}

TEST_CASE("D sets") {
  A6 s;
  CHECK(d_set(s.a, s.f1, s.f3) == eset(s.a, {"1"}));
  CHECK(d_set(s.a, s.f1, s.f4) == eset(s.a, {"1"}));
  for (const auto& p : spec(s.a)) CHECK(d_set(s.a, p, p) == p.elems);
  CHECK_THROWS_AS(d_set(s.a, s.f1, s.f2), NotPrime);
}

TEST_CASE("F-closed collections") {
  A6 s;
  const auto mx = max_filters(s.a);
  const auto r = is_f_closed(s.a, mx, s.f2);
  CHECK(r.closed);
  REQUIRE(r.witnesses.size() == 1);
  const auto w = r.witnesses.front();
  CHECK(s.a.join(w.a1, w.a2) == *s.a.find("d"));
  CHECK_FALSE(mx[w.first].contains(w.a1));
  CHECK_FALSE(mx[w.second].contains(w.a2));

  const auto sp = spec(s.a);
  const auto rs = is_f_closed(s.a, sp, s.f1);
  CHECK_FALSE(rs.closed);
  REQUIRE(rs.failing.has_value());
  CHECK(sp[rs.failing->first] == s.f1);

  CHECK(is_f_closed(s.a, PrimeCollection::custom(s.a, {s.f3}), s.f1).closed);
  CHECK_THROWS_AS(is_f_closed(s.a, mx, s.f3), BaseNotContained);
}

TEST_CASE("antichains and S_Pi") {
  A6 s;
  const auto mx = max_filters(s.a);
  CHECK(is_antichain(mx));
  CHECK(s_pi(s.a, mx).members() == mx.members());
  CHECK_FALSE(is_antichain(spec(s.a)));
  const auto single = PrimeCollection::custom(s.a, {s.f3});
  CHECK(is_antichain(single));
  CHECK(s_pi(s.a, single).members() == std::vector<Filter>{s.f3});
  const auto minimal = PrimeCollection::custom(s.a, {s.f1});
  CHECK(s_pi(s.a, minimal).members() == std::vector<Filter>{s.f1});
  CHECK_THROWS_AS(PrimeCollection::custom(s.a, {s.f2}), NotPrimeCollection);
}

TEST_CASE("minimality three ways") {
  A6 s;
  CHECK(check_minimality(s.a, s.f1, s.f1));
  CHECK_FALSE(check_minimality(s.a, s.f1, s.f3));
  CHECK(check_minimality(s.a, s.f3, s.f3));
  CHECK(check_minimality(s.a, s.f2, s.f4));
  CHECK_THROWS_AS(check_minimality(s.a, s.f1, s.f2), NotPrime);
  CHECK_THROWS_AS(check_minimality(s.a, s.f4, s.f3), BaseNotContained);
}

TEST_CASE("unique maximal filter") {
  A6 s;
  CHECK(unique_maximal_over(s.a, s.f3) == s.f3);
  try {
    unique_maximal_over(s.a, s.f2);
    FAIL("expected MultipleMaximal");
  } catch (const MultipleMaximal& e) {
    CHECK(e.maximal == std::vector<Filter>{s.f4, s.f3});
  }
  CHECK_THROWS_AS(unique_maximal_over(s.a, s.f1), MultipleMaximal);
  CHECK_THROWS_AS(unique_maximal_over(s.a, s.all), NotProper);
}

TEST_CASE("spectrum identities on the census") {
  std::mt19937_64 rng(0xA6);
  auto census = oracle::census(5);
  census.push_back(oracle::a6());
  for (const auto& a : census) {
    const auto sp = spec(a);
    const auto mins = min_primes(a);
    const auto lattice = all_filters(a);
    for (int i = 0; i < 16; ++i) {
      const ElementSet x = ElementSet::from_word(rng() & a.carrier().word());
      ElementSet by_spec = a.carrier(), by_min = a.carrier();
      for (const auto& p : sp)
        if (!x.subset_of(p.elems)) by_spec &= p.elems;
      for (const auto& m : mins)
        if (!x.subset_of(m.elems)) by_min &= m.elems;
      CHECK(perp(a, x) == by_spec);
      CHECK(perp(a, x) == by_min);
      const Filter base{sp.meet(a)};
      CHECK(coannihilator(a, base, x) == by_spec);
    }
    for (const auto& f : lattice) {
      for (const auto& p : sp) {
        const ElementSet d = d_set(a, f, p);
        CHECK(f.elems.subset_of(d));
        if (f.subset_of(p)) {
          CHECK(d.subset_of(p.elems));
          ElementSet between = a.carrier();
          for (const auto& q : sp)
            if (f.subset_of(q) && q.subset_of(p)) between &= q.elems;
          CHECK(d == between);
          if (is_proper(a, f)) CHECK_NOTHROW(check_minimality(a, f, p));
        }
        for (const auto& q : sp)
          if (p.subset_of(q)) CHECK(d_set(a, f, q).subset_of(d));
      }
    }
  }
}
