#include "rlat/spectrum.hpp"

#include <algorithm>

namespace rlat {

PrimeCollection make_collection(CollectionKind kind, ElementSet over, std::vector<Filter> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  PrimeCollection c;
  c.kind_ = kind;
  c.over_ = over;
  c.members_ = std::move(members);
  return c;
}

PrimeCollection PrimeCollection::custom(const Algebra& alg, std::vector<Filter> members) {
  for (const auto& m : members) {
    if (!is_filter(alg, m.elems))
      throw NotPrimeCollection(format_set(alg, m.elems) + " is not a filter");
    if (!is_prime_filter(alg, m))
      throw NotPrimeCollection(format_set(alg, m.elems) + " is not a prime filter");
  }
  return make_collection(CollectionKind::custom, {}, std::move(members));
}

std::string PrimeCollection::label(const Algebra& alg) const {
  switch (kind_) {
    case CollectionKind::spec: return "spec";
    case CollectionKind::max: return "max";
    case CollectionKind::min: return "min";
    case CollectionKind::min_over: return "minover:" + format_set(alg, over_);
    case CollectionKind::custom: break;
  }
  return "custom";
}

std::optional<std::size_t> PrimeCollection::index_of(const Filter& f) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), f);
  if (it == members_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

ElementSet PrimeCollection::meet(const Algebra& alg) const {
  ElementSet acc = alg.carrier();
  for (const auto& m : members_) acc &= m.elems;
  return acc;
}

PrimeCollection PrimeCollection::subcollection(PointSet pts) const {
  std::vector<Filter> sub;
  for (std::size_t i : pts) sub.push_back(members_[i]);
  return make_collection(CollectionKind::custom, {}, std::move(sub));
}

bool is_vee_closed(const Algebra& alg, ElementSet s) {
  if (s.empty()) return false;
  for (Element x : s)
    for (Element y : s)
      if (!s.contains(alg.join(x, y))) return false;
  return true;
}

ElementSet vee_closure(const Algebra& alg, ElementSet s) {
  for (;;) {
    ElementSet next = s;
    for (Element x : s)
      for (Element y : s) next.insert(alg.join(x, y));
    if (next == s) return s;
    s = next;
  }
}

bool is_prime_filter(const Algebra& alg, const Filter& f) {
  if (!is_proper(alg, f)) return false;
  bool by_join = true;
  for (Element x = 0; x < alg.size() && by_join; ++x)
    for (Element y = 0; y < alg.size(); ++y)
      if (f.contains(alg.join(x, y)) && !f.contains(x) && !f.contains(y)) {
        by_join = false;
        break;
      }
  const bool by_complement = is_vee_closed(alg, f.elems.complement(alg.size()));
  if (by_join != by_complement)
    throw InternalInconsistency("prime criteria disagree on " + format_set(alg, f.elems));
  return by_join;
}

bool is_prime(const Algebra& alg, const Filter& f) {
  if (!is_proper(alg, f)) throw NotProper(format_set(alg, f.elems) + " is not proper");
  return is_prime_filter(alg, f);
}

PrimeCollection spec(const Algebra& alg) {
  std::vector<Filter> primes;
  for (const auto& f : all_filters(alg))
    if (is_prime_filter(alg, f)) primes.push_back(f);
  return make_collection(CollectionKind::spec, {}, std::move(primes));
}

PrimeCollection max_filters(const Algebra& alg) {
  auto lattice = all_filters(alg);
  std::vector<Filter> maximal;
  for (const auto& f : lattice) {
    if (!is_proper(alg, f)) continue;
    bool is_max = true;
    for (const auto& g : lattice)
      if (g != f && is_proper(alg, g) && f.subset_of(g)) { is_max = false; break; }
    if (is_max) {
      if (!is_prime_filter(alg, f))
        throw InternalInconsistency("maximal filter " + format_set(alg, f.elems) + " is not prime");
      maximal.push_back(f);
    }
  }
  return make_collection(CollectionKind::max, {}, std::move(maximal));
}

namespace {

std::vector<Filter> minimal_members(const std::vector<Filter>& fs) {
  std::vector<Filter> out;
  for (const auto& f : fs) {
    bool minimal = true;
    for (const auto& g : fs)
      if (g != f && g.subset_of(f)) { minimal = false; break; }
    if (minimal) out.push_back(f);
  }
  return out;
}

}  // namespace

bool is_maximal_vee_closed_avoiding(const Algebra& alg, ElementSet c, const Filter& f) {
  if (!is_vee_closed(alg, c) || c.intersects(f.elems)) return false;
  // Any larger join-closed set avoiding F contains the closure of c plus one point.
  for (Element y : c.complement(alg.size()))
    if (!vee_closure(alg, c | ElementSet::singleton(y)).intersects(f.elems)) return false;
  return true;
}

PrimeCollection min_primes_over(const Algebra& alg, ElementSet x) {
  const Filter base = generated_filter(alg, x);
  if (!is_proper(alg, base)) return make_collection(CollectionKind::min_over, x, {});
  std::vector<Filter> over;
  for (const auto& p : spec(alg))
    if (x.subset_of(p.elems)) over.push_back(p);
  auto result = minimal_members(over);
  for (const auto& p : result)
    if (!is_maximal_vee_closed_avoiding(alg, p.elems.complement(alg.size()), base))
      throw InternalInconsistency("complement of minimal prime " + format_set(alg, p.elems) +
                                  " is not a maximal join-closed set avoiding the base");
  return make_collection(CollectionKind::min_over, x, std::move(result));
}

PrimeCollection min_primes(const Algebra& alg) {
  auto c = min_primes_over(alg, ElementSet::singleton(alg.top()));
  return make_collection(CollectionKind::min, {}, c.members());
}

Filter prime_avoiding(const Algebra& alg, const Filter& f, ElementSet c) {
  if (f.elems.intersects(c))
    throw Overlap(format_set(alg, f.elems) + " meets " + format_set(alg, c));
  if (!is_vee_closed(alg, c))
    throw PreconditionError(format_set(alg, c) + " is not join-closed");
  std::vector<Filter> avoiders;
  for (const auto& g : all_filters(alg))
    if (f.subset_of(g) && !g.elems.intersects(c)) avoiders.push_back(g);
  // first maximal avoider in canonical order
  for (const auto& g : avoiders) {
    bool maximal = true;
    for (const auto& h : avoiders)
      if (h != g && g.subset_of(h)) { maximal = false; break; }
    if (maximal) {
      if (!is_prime_filter(alg, g))
        throw InternalInconsistency("maximal filter avoiding " + format_set(alg, c) +
                                    " is not prime");
      return g;
    }
  }
  throw InternalInconsistency("no filter avoids " + format_set(alg, c));
}

ElementSet coannihilator(const Algebra& alg, const Filter& f, ElementSet x) {
  ElementSet out;
  for (Element a = 0; a < alg.size(); ++a) {
    bool all = true;
    for (Element y : x)
      if (!f.contains(alg.join(y, a))) { all = false; break; }
    if (all) out.insert(a);
  }
  return out;
}

ElementSet perp(const Algebra& alg, ElementSet x) {
  return coannihilator(alg, Filter{ElementSet::singleton(alg.top())}, x);
}

CoannihilatorTable coannihilator_table(const Algebra& alg, const Filter& f) {
  CoannihilatorTable t{f, {}};
  for (Element x = 0; x < alg.size(); ++x)
    t.by_element.push_back(coannihilator(alg, f, ElementSet::singleton(x)));
  return t;
}

ElementSet d_set(const Algebra& alg, const Filter& f, const Filter& p) {
  if (!is_prime_filter(alg, p)) throw NotPrime(format_set(alg, p.elems) + " is not prime");
  ElementSet d, via_union;
  for (Element a = 0; a < alg.size(); ++a) {
    ElementSet ann = coannihilator(alg, f, ElementSet::singleton(a));
    if (!ann.subset_of(p.elems)) d.insert(a);
    if (!p.contains(a)) via_union |= ann;
  }
  if (d != via_union)
    throw InternalInconsistency("D_F(P) disagrees with the union of (F:x), x not in P");
  return d;
}

FClosedReport is_f_closed(const Algebra& alg, const PrimeCollection& pi, const Filter& f) {
  if (!f.elems.subset_of(pi.meet(alg)))
    throw BaseNotContained(format_set(alg, f.elems) + " is not contained in every member");
  FClosedReport report;
  const ElementSet all = alg.carrier();
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j) {
      std::optional<SeparatingPair> w;
      for (Element a1 : all - pi[i].elems) {
        for (Element a2 : all - pi[j].elems)
          if (f.contains(alg.join(a1, a2))) { w = SeparatingPair{i, j, a1, a2}; break; }
        if (w) break;
      }
      if (w) {
        report.witnesses.push_back(*w);
      } else {
        report.closed = false;
        if (!report.failing) report.failing = std::pair{i, j};
      }
    }
  return report;
}

bool is_antichain(const PrimeCollection& pi) {
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = 0; j < pi.size(); ++j)
      if (i != j && pi[i].subset_of(pi[j])) return false;
  return true;
}

PrimeCollection s_pi(const Algebra& alg, const PrimeCollection& pi) {
  const ElementSet base = pi.meet(alg);
  std::vector<Filter> out;
  for (const auto& q : spec(alg)) {
    if (!base.subset_of(q.elems)) continue;
    for (const auto& p : pi)
      if (q.subset_of(p)) { out.push_back(q); break; }
  }
  return make_collection(CollectionKind::custom, {}, std::move(out));
}

bool check_minimality(const Algebra& alg, const Filter& f, const Filter& p) {
  if (!is_prime_filter(alg, p)) throw NotPrime(format_set(alg, p.elems) + " is not prime");
  if (!f.subset_of(p))
    throw BaseNotContained(format_set(alg, f.elems) + " is not contained in " +
                           format_set(alg, p.elems));
  const bool in_min = min_primes_over(alg, f.elems).index_of(p).has_value();
  const bool fixed = d_set(alg, f, p) == p.elems;
  bool exactly_one = true;
  for (Element x = 0; x < alg.size(); ++x) {
    const bool has_x = p.contains(x);
    const bool has_ann = coannihilator(alg, f, ElementSet::singleton(x)).subset_of(p.elems);
    if (has_x == has_ann) { exactly_one = false; break; }
  }
  if (in_min != fixed || fixed != exactly_one)
    throw InternalInconsistency("minimality characterizations disagree for " +
                                format_set(alg, p.elems));
  return in_min;
}

Filter unique_maximal_over(const Algebra& alg, const Filter& p) {
  if (!is_proper(alg, p)) throw NotProper(format_set(alg, p.elems) + " is not proper");
  std::vector<Filter> above;
  for (const auto& m : max_filters(alg))
    if (p.subset_of(m)) above.push_back(m);
  if (above.size() == 1) return above.front();
  std::string what = format_set(alg, p.elems) + " lies under " + std::to_string(above.size()) +
                     " maximal filters";
  throw MultipleMaximal(std::move(above), what);
}

}  // namespace rlat
