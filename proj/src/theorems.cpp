#include "rlat/theorems.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace rlat {

std::uint64_t sampling_seed() {
  const char* env = std::getenv("RLAT_SEED");
  if (!env || !*env) return default_seed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 0);
  if (end == env || *end != '\0') return default_seed;
  return v;
}

std::vector<ElementSet> sample_subsets(const Algebra& alg, std::uint64_t seed,
                                       std::size_t random_count) {
  std::vector<ElementSet> out;
  std::set<std::uint64_t> seen;
  auto push = [&](ElementSet s) {
    if (seen.insert(s.word()).second) out.push_back(s);
  };
  push(ElementSet{});
  push(alg.carrier());
  for (Element x = 0; x < alg.size(); ++x) push(ElementSet::singleton(x));
  for (const auto& f : all_filters(alg)) push(f.elems);
  std::mt19937_64 rng(seed);
  const auto mask = alg.carrier().word();
  for (std::size_t i = 0; i < random_count; ++i) push(ElementSet::from_word(rng() & mask));
  return out;
}

std::string describe(const Algebra& alg, const PrimeCollection& pi) {
  if (pi.kind() != CollectionKind::custom) return pi.label(alg);
  std::string s = "[";
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) s += ", ";
    s += format_set(alg, pi[i].elems);
  }
  return s + "]";
}

std::vector<PrimeCollection> suite_collections(const Algebra& alg, std::size_t max_exhaustive) {
  std::vector<PrimeCollection> out;
  std::set<std::vector<Filter>> seen;
  auto push = [&](PrimeCollection c) {
    if (c.empty()) return;
    if (seen.insert(c.members()).second) out.push_back(std::move(c));
  };
  const auto sp = spec(alg);
  push(sp);
  push(max_filters(alg));
  push(min_primes(alg));
  for (const auto& f : all_filters(alg))
    if (is_proper(alg, f)) push(min_primes_over(alg, f.elems));
  if (sp.size() <= max_exhaustive) {
    const std::uint64_t limit = std::uint64_t{1} << sp.size();
    for (std::uint64_t w = 1; w < limit; ++w) push(sp.subcollection(PointSet::from_word(w)));
  }
  return out;
}

namespace {

// X^perp for every X: the carrier, then all intersections of x^perp.
std::vector<ElementSet> all_perps(const Algebra& alg) {
  std::set<std::uint64_t> seen{alg.carrier().word()};
  std::vector<ElementSet> out{alg.carrier()};
  for (Element x = 0; x < alg.size(); ++x) {
    const ElementSet px = perp(alg, ElementSet::singleton(x));
    const std::size_t existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) {
      const ElementSet s = out[i] & px;
      if (seen.insert(s.word()).second) out.push_back(s);
    }
  }
  return out;
}

bool is_element_perp(const Algebra& alg, ElementSet s) {
  for (Element y = 0; y < alg.size(); ++y)
    if (perp(alg, ElementSet::singleton(y)) == s) return true;
  return false;
}

}  // namespace

bool star_check(const Algebra& alg) {
  for (Element x = 0; x < alg.size(); ++x)
    if (!is_element_perp(alg, perp(alg, perp(alg, ElementSet::singleton(x))))) return false;
  return true;
}

bool bigstar_check(const Algebra& alg) {
  for (ElementSet s : all_perps(alg))
    if (!is_element_perp(alg, s)) return false;
  return true;
}

bool is_pm(const Algebra& alg) {
  const auto mx = max_filters(alg);
  for (const auto& p : spec(alg)) {
    std::size_t above = 0;
    for (const auto& m : mx)
      if (p.subset_of(m)) ++above;
    if (above != 1) return false;
  }
  return true;
}

std::size_t TheoremReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

namespace {

struct Space {
  std::string label;
  HullKernelSpace hk;
  const PrimeCollection& pi() const { return hk.collection; }
};

struct Ctx {
  const Algebra& alg;
  FilterLattice lattice;
  std::vector<Filter> proper;
  PrimeCollection spec, max, min;
  std::vector<Space> spaces;
  std::vector<ElementSet> samples;
  bool mtl = false;
  std::optional<HullKernelSpace> spec_sp, max_sp, min_sp;

  std::string set(ElementSet s) const { return format_set(alg, s); }
  std::string f(const Filter& x) const { return format_set(alg, x.elems); }
  std::string pts(const PrimeCollection& pi, PointSet p) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i : p) {
      if (!first) s += ", ";
      first = false;
      s += f(pi[i]);
    }
    return s + "}";
  }
};

// Records the first failure only.
class Probe {
public:
  bool expect(bool cond, const std::function<std::string()>& witness) {
    if (!cond && !witness_) witness_ = witness();
    return cond;
  }
  bool failed() const { return witness_.has_value(); }
  const std::optional<std::string>& witness() const { return witness_; }

private:
  std::optional<std::string> witness_;
};

using CheckFn = std::function<void(const Ctx&, Probe&)>;

struct Check {
  CatalogEntry entry;
  CheckFn fn;
};

std::string bstr(bool b) { return b ? "true" : "false"; }

Filter gen(const Ctx& c, ElementSet x) { return generated_filter(c.alg, x); }

ElementSet power_closure_adjoin(const Ctx& c, const Filter& f, Element x) {
  // {a | f (.) x^k <= a, f in F, k >= 1}
  ElementSet out;
  Element p = x;
  for (std::size_t k = 1; k <= c.alg.size() + 1; ++k) {
    for (Element g : f.elems)
      out |= c.alg.up(c.alg.prod(g, p));
    p = c.alg.prod(p, x);
  }
  return out;
}

// Subsets of {0..m-1}: all of them when few, otherwise singletons, the empty
// set and the whole.
std::vector<PointSet> point_subsets(std::size_t m, std::size_t exhaustive_limit = 6) {
  std::vector<PointSet> out;
  if (m <= exhaustive_limit) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << m); ++w) out.push_back(PointSet::from_word(w));
  } else {
    out.push_back(PointSet{});
    out.push_back(PointSet::full(m));
    for (std::size_t i = 0; i < m; ++i) out.push_back(PointSet::singleton(i));
  }
  return out;
}

bool contains_min_of_base(const Ctx& c, const PrimeCollection& pi) {
  const auto mins = min_primes_over(c.alg, pi.meet(c.alg));
  for (const auto& m : mins)
    if (!pi.index_of(m)) return false;
  return true;
}

bool unique_containment_over(const Ctx& c, const PrimeCollection& pi,
                             const PrimeCollection& qs, std::string* witness) {
  for (const auto& q : qs) {
    std::size_t n = 0;
    for (const auto& p : pi)
      if (q.subset_of(p)) ++n;
    if (n != 1) {
      if (witness) *witness = c.f(q) + " lies in " + std::to_string(n) + " members";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

void algebra_adjointness(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      for (Element z = 0; z < a.size(); ++z)
        if (!p.expect(a.leq(a.prod(x, y), z) == a.leq(x, a.res(y, z)), [&] {
              return "x=" + a.name(x) + " y=" + a.name(y) + " z=" + a.name(z);
            }))
          return;
}

void algebra_distrib(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      for (Element z = 0; z < a.size(); ++z) {
        p.expect(a.prod(x, a.join(y, z)) == a.join(a.prod(x, y), a.prod(x, z)), [&] {
          return "x=" + a.name(x) + " y=" + a.name(y) + " z=" + a.name(z);
        });
        p.expect(a.leq(a.prod(a.join(x, y), a.join(x, z)), a.join(x, a.prod(y, z))), [&] {
          return "join bound fails at x=" + a.name(x) + " y=" + a.name(y) + " z=" + a.name(z);
        });
      }
}

void algebra_residuum(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      std::optional<Element> best;
      for (Element z = 0; z < a.size(); ++z)
        if (a.leq(a.prod(x, z), y) && (!best || a.leq(*best, z))) best = z;
      bool greatest = best.has_value();
      if (best)
        for (Element z = 0; z < a.size(); ++z)
          if (a.leq(a.prod(x, z), y) && !a.leq(z, *best)) greatest = false;
      p.expect(greatest && *best == a.res(x, y),
               [&] { return "arrow(" + a.name(x) + ", " + a.name(y) + ")"; });
    }
}

void filter_lattice_closed(const Ctx& c, Probe& p) {
  const auto& L = c.lattice;
  p.expect(L.index_of(Filter{ElementSet::singleton(c.alg.top())}).has_value(),
           [] { return std::string("{1} missing"); });
  p.expect(L.index_of(Filter{c.alg.carrier()}).has_value(),
           [] { return std::string("carrier missing"); });
  for (const auto& f : L) p.expect(is_filter(c.alg, f.elems), [&] { return c.f(f); });
  for (const auto& f : L)
    for (const auto& g : L) {
      p.expect(L.index_of(filter_meet(f, g)).has_value(),
               [&] { return "meet of " + c.f(f) + " and " + c.f(g); });
      const Filter j = filter_join(c.alg, f, g);
      p.expect(L.index_of(j).has_value() && j == gen(c, f.elems | g.elems),
               [&] { return "join of " + c.f(f) + " and " + c.f(g); });
    }
}

void filter_adjoin_form(const Ctx& c, Probe& p) {
  for (const auto& f : c.lattice)
    for (Element x = 0; x < c.alg.size(); ++x)
      p.expect(adjoin(c.alg, f, x).elems == power_closure_adjoin(c, f, x),
               [&] { return "F=" + c.f(f) + " x=" + c.alg.name(x); });
}

void filter_adjoin_lattice(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  for (const auto& f : c.lattice)
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        const Filter fx = adjoin(a, f, x), fy = adjoin(a, f, y);
        auto w = [&] { return "F=" + c.f(f) + " x=" + a.name(x) + " y=" + a.name(y); };
        p.expect(filter_meet(fx, fy) == adjoin(a, f, a.join(x, y)), w);
        p.expect(filter_join(a, fx, fy) == adjoin(a, f, a.prod(x, y)), w);
        if (a.leq(x, y)) p.expect(adjoin(a, f, y).subset_of(fx), w);
      }
}

void filter_principal_sublattice(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      const Filter px = principal_filter(a, x), py = principal_filter(a, y);
      auto w = [&] { return "x=" + a.name(x) + " y=" + a.name(y); };
      p.expect(filter_meet(px, py) == principal_filter(a, a.join(x, y)), w);
      p.expect(filter_join(a, px, py) == principal_filter(a, a.prod(x, y)), w);
    }
}

void filter_finite_generators(const Ctx& c, Probe& p) {
  const Filter whole{c.alg.carrier()};
  for (ElementSet x : c.samples) {
    if (gen(c, x) != whole) continue;
    ElementSet y = x;
    for (Element e : x) {
      ElementSet smaller = y;
      smaller.erase(e);
      if (gen(c, smaller) == whole) y = smaller;
    }
    p.expect(y.subset_of(x) && gen(c, y) == whole, [&] { return "X=" + c.set(x); });
  }
}

void filter_generated_by_primes(const Ctx& c, Probe& p) {
  for (ElementSet x : c.samples) {
    ElementSet by_spec = c.alg.carrier();
    for (const auto& q : c.spec)
      if (x.subset_of(q.elems)) by_spec &= q.elems;
    ElementSet by_min = c.alg.carrier();
    for (const auto& m : min_primes_over(c.alg, x)) by_min &= m.elems;
    const ElementSet g = gen(c, x).elems;
    p.expect(g == by_spec, [&] { return "X=" + c.set(x) + " via Spec gives " + c.set(by_spec); });
    p.expect(g == by_min, [&] { return "X=" + c.set(x) + " via Min_X gives " + c.set(by_min); });
  }
}

void prime_definitions(const Ctx& c, Probe& p) {
  const auto& L = c.lattice;
  for (const auto& q : c.proper) {
    bool irreducible = true, prime_in_lattice = true;
    for (const auto& f : L)
      for (const auto& g : L) {
        const Filter m = filter_meet(f, g);
        if (m == q && f != q && g != q) irreducible = false;
        if (m.subset_of(q) && !f.subset_of(q) && !g.subset_of(q)) prime_in_lattice = false;
      }
    const bool by_join = is_prime(c.alg, q);
    const bool by_complement = is_vee_closed(c.alg, q.elems.complement(c.alg.size()));
    p.expect(irreducible == prime_in_lattice && prime_in_lattice == by_join &&
                 by_join == by_complement,
             [&] {
               return c.f(q) + ": irreducible=" + bstr(irreducible) + " lattice-prime=" +
                      bstr(prime_in_lattice) + " join=" + bstr(by_join) +
                      " complement=" + bstr(by_complement);
             });
  }
}

void prime_max(const Ctx& c, Probe& p) {
  for (const auto& m : c.max)
    p.expect(c.spec.index_of(m).has_value(), [&] { return c.f(m) + " maximal but not prime"; });
  for (const auto& f : c.proper) {
    bool under = false;
    for (const auto& m : c.max) under = under || f.subset_of(m);
    p.expect(under, [&] { return c.f(f) + " lies in no maximal filter"; });
  }
}

void prime_union_complement(const Ctx& c, Probe& p) {
  for (PointSet s : point_subsets(c.spec.size(), 10)) {
    if (s.empty()) continue;
    ElementSet u;
    for (std::size_t i : s) u |= c.spec[i].elems;
    const ElementSet comp = u.complement(c.alg.size());
    if (comp.empty()) continue;
    p.expect(is_vee_closed(c.alg, comp), [&] { return "union of " + c.pts(c.spec, s); });
  }
}

void prime_filter_theorem(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  std::vector<ElementSet> cs;
  for (Element x = 0; x < a.size(); ++x) {
    cs.push_back(ElementSet::singleton(x));
    cs.push_back(a.down(x));
  }
  for (const auto& q : c.spec) cs.push_back(q.elems.complement(a.size()));
  for (ElementSet s : c.samples)
    if (!s.empty()) cs.push_back(vee_closure(a, s));
  for (const auto& f : c.lattice)
    for (ElementSet cc : cs) {
      if (!is_vee_closed(a, cc) || f.elems.intersects(cc)) continue;
      auto w = [&] { return "F=" + c.f(f) + " C=" + c.set(cc); };
      const Filter q = prime_avoiding(a, f, cc);
      p.expect(is_prime_filter(a, q) && f.subset_of(q) && !q.elems.intersects(cc), w);
      for (const auto& g : c.lattice)
        if (q.subset_of(g) && g != q) p.expect(g.elems.intersects(cc), w);
      // extend C to a maximal join-closed set missing F
      ElementSet grown = cc;
      for (bool changed = true; changed;) {
        changed = false;
        for (Element y : grown.complement(a.size())) {
          const ElementSet next = vee_closure(a, grown | ElementSet::singleton(y));
          if (!next.intersects(f.elems)) { grown = next; changed = true; break; }
        }
      }
      p.expect(is_maximal_vee_closed_avoiding(a, grown, f), w);
      const Filter comp{grown.complement(a.size())};
      p.expect(min_primes_over(a, f.elems).index_of(comp).has_value(), [&] {
        return "complement of maximal join-closed " + c.set(grown) + " not F-minimal, F=" + c.f(f);
      });
    }
}

void prime_separation(const Ctx& c, Probe& p) {
  for (const auto& f : c.proper) {
    const auto mins = min_primes_over(c.alg, f.elems);
    for (ElementSet x : c.samples) {
      if (x.subset_of(f.elems)) continue;
      bool by_prime = false, by_min = false;
      for (const auto& q : c.spec)
        if (f.subset_of(q) && !x.subset_of(q.elems)) by_prime = true;
      for (const auto& m : mins)
        if (!x.subset_of(m.elems)) by_min = true;
      p.expect(by_prime && by_min, [&] { return "F=" + c.f(f) + " X=" + c.set(x); });
    }
  }
}

void prime_min_over_maximal_vee(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  for (const auto& f : c.proper) {
    const auto mins = min_primes_over(a, f.elems);
    for (const auto& m : mins)
      p.expect(is_maximal_vee_closed_avoiding(a, m.elems.complement(a.size()), f),
               [&] { return "F=" + c.f(f) + " m=" + c.f(m); });
    if (a.size() > 12) continue;
    for (std::uint64_t w = 1; w < (std::uint64_t{1} << a.size()); ++w) {
      const ElementSet s = ElementSet::from_word(w);
      if (!is_maximal_vee_closed_avoiding(a, s, f)) continue;
      p.expect(mins.index_of(Filter{s.complement(a.size())}).has_value(),
               [&] { return "F=" + c.f(f) + " C=" + c.set(s); });
    }
  }
}

void prime_contains_minimal(const Ctx& c, Probe& p) {
  for (ElementSet x : c.samples) {
    const auto mins = min_primes_over(c.alg, x);
    for (const auto& q : c.spec) {
      if (!x.subset_of(q.elems)) continue;
      bool found = false;
      for (const auto& m : mins) found = found || m.subset_of(q);
      p.expect(found, [&] { return "X=" + c.set(x) + " P=" + c.f(q); });
    }
  }
}

void coann_meet_formula(const Ctx& c, Probe& p) {
  for (const auto& s : c.spaces) {
    const Filter base{s.pi().meet(c.alg)};
    for (ElementSet x : c.samples) {
      ElementSet rhs = c.alg.carrier();
      for (const auto& q : s.pi())
        if (!x.subset_of(q.elems)) rhs &= q.elems;
      p.expect(coannihilator(c.alg, base, x) == rhs,
               [&] { return s.label + " X=" + c.set(x); });
    }
  }
}

void coann_perp(const Ctx& c, Probe& p) {
  for (ElementSet x : c.samples) {
    ElementSet by_spec = c.alg.carrier(), by_min = c.alg.carrier();
    for (const auto& q : c.spec)
      if (!x.subset_of(q.elems)) by_spec &= q.elems;
    for (const auto& m : c.min)
      if (!x.subset_of(m.elems)) by_min &= m.elems;
    const ElementSet pp = perp(c.alg, x);
    p.expect(pp == by_spec && pp == by_min, [&] { return "X=" + c.set(x); });
  }
}

void dset_union_form(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  for (const auto& f : c.lattice)
    for (const auto& q : c.spec) {
      ElementSet u;
      for (Element x : q.elems.complement(a.size()))
        u |= coannihilator(a, f, ElementSet::singleton(x));
      const ElementSet d = d_set(a, f, q);
      p.expect(d == u && f.elems.subset_of(d), [&] { return "F=" + c.f(f) + " P=" + c.f(q); });
    }
}

void dset_order(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  for (const auto& f : c.lattice)
    for (const auto& q : c.spec) {
      if (f.subset_of(q))
        p.expect(d_set(a, f, q).subset_of(q.elems),
                 [&] { return "F=" + c.f(f) + " P=" + c.f(q); });
      for (const auto& r : c.spec)
        if (q.subset_of(r))
          p.expect(d_set(a, f, r).subset_of(d_set(a, f, q)),
                   [&] { return "F=" + c.f(f) + " P=" + c.f(q) + " Q=" + c.f(r); });
    }
}

void fclosed_unique_containment(const Ctx& c, Probe& p) {
  for (const auto& s : c.spaces) {
    const ElementSet base = s.pi().meet(c.alg);
    for (const auto& f : c.lattice) {
      if (!f.elems.subset_of(base)) continue;
      const bool closed = is_f_closed(c.alg, s.pi(), f).closed;
      bool unique = true;
      for (const auto& q : s.pi()) {
        const ElementSet d = d_set(c.alg, f, q);
        std::size_t n = 0;
        for (const auto& r : s.pi())
          if (d.subset_of(r.elems)) ++n;
        unique = unique && n == 1;
      }
      p.expect(closed == unique, [&] {
        return s.label + " F=" + c.f(f) + " closed=" + bstr(closed) + " unique=" + bstr(unique);
      });
    }
  }
}

void fclosed_s_pi_chain(const Ctx& c, Probe& p) {
  for (const auto& s : c.spaces) {
    const ElementSet base = s.pi().meet(c.alg);
    const auto sp = s_pi(c.alg, s.pi());
    std::string why;
    const bool unique = unique_containment_over(c, s.pi(), sp, &why);
    const bool anti = is_antichain(s.pi());
    p.expect(!unique || anti, [&] { return s.label + " unique over S_Pi but not an antichain"; });
    for (const auto& f : c.lattice) {
      if (!f.elems.subset_of(base)) continue;
      if (is_f_closed(c.alg, s.pi(), f).closed)
        p.expect(unique, [&] { return s.label + " F=" + c.f(f) + ": " + why; });
    }
  }
}

void fclosed_prelinear(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  for (const auto& s : c.spaces) {
    if (!is_antichain(s.pi())) continue;
    const ElementSet base = s.pi().meet(a);
    for (const auto& f : c.lattice) {
      if (!f.elems.subset_of(base)) continue;
      bool prelinear = true;
      for (Element x = 0; x < a.size(); ++x)
        for (Element y = 0; y < a.size(); ++y)
          prelinear = prelinear && f.contains(a.join(a.res(x, y), a.res(y, x)));
      if (prelinear)
        p.expect(is_f_closed(a, s.pi(), f).closed, [&] { return s.label + " F=" + c.f(f); });
    }
  }
}

void fclosed_mtl(const Ctx& c, Probe& p) {
  if (!c.mtl) return;
  const Filter one{ElementSet::singleton(c.alg.top())};
  for (const auto& s : c.spaces) {
    const bool closed = is_f_closed(c.alg, s.pi(), one).closed;
    p.expect(closed == is_antichain(s.pi()), [&] { return s.label; });
  }
}

void min_three_way(const Ctx& c, Probe& p) {
  for (const auto& f : c.proper)
    for (const auto& q : c.spec)
      if (f.subset_of(q)) {
        try {
          check_minimality(c.alg, f, q);
        } catch (const InternalInconsistency& e) {
          p.expect(false, [&] { return "F=" + c.f(f) + " P=" + c.f(q) + ": " + e.what(); });
        }
      }
}

void min_dset(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  for (const auto& f : c.proper) {
    const auto min_f = min_primes_over(a, f.elems);
    for (const auto& q : c.spec) {
      if (!f.subset_of(q)) continue;
      auto w = [&] { return "F=" + c.f(f) + " P=" + c.f(q); };
      const ElementSet d = d_set(a, f, q);
      const auto min_d = min_primes_over(a, d);
      std::vector<Filter> below;
      ElementSet meet_below = a.carrier();
      for (const auto& m : min_f)
        if (m.subset_of(q)) { below.push_back(m); meet_below &= m.elems; }
      for (const auto& m : min_d) p.expect(m.subset_of(q), w);
      p.expect(min_d.members() == below, w);
      p.expect(d == meet_below, w);
      ElementSet between = a.carrier();
      for (const auto& r : c.spec)
        if (f.subset_of(r) && r.subset_of(q)) between &= r.elems;
      p.expect(d == between, w);
    }
  }
}

void galois_battery(const Ctx& c, Probe& p) {
  auto run = [&](const std::string& label, const std::vector<Filter>& family) {
    const auto report = check_galois(c.alg, family, c.samples);
    if (!report.ok())
      p.expect(false, [&] {
        return label + " " + report.failures.front().identity + ": " +
               report.failures.front().witness;
      });
  };
  if (c.lattice.size() <= 10) run("all filters", c.lattice.filters());
  for (const auto& s : c.spaces) run(s.label, s.pi().members());
}

void hull_filter_identities(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  auto run = [&](const std::string& label, const std::vector<Filter>& fam) {
    const PointSet all = PointSet::full(fam.size());
    const ElementSet k_all = kernel(a, fam, all);
    const bool has_carrier =
        std::find(fam.begin(), fam.end(), Filter{a.carrier()}) != fam.end();
    p.expect(hull(fam, ElementSet{}) == all && hull(fam, ElementSet::singleton(a.top())) == all,
             [&] { return label + " h(empty) or h(1)"; });
    if (!has_carrier)
      p.expect(hull(fam, a.carrier()).empty() && hull(fam, ElementSet::singleton(a.bottom())).empty(),
               [&] { return label + " h(A) or h(0)"; });
    for (ElementSet x : c.samples) {
      const Filter fx = gen(c, x);
      p.expect(hull(fam, x) == hull(fam, fx.elems), [&] { return label + " h(X)=h(F(X)) X=" + c.set(x); });
      p.expect((hull(fam, x) == all) == fx.elems.subset_of(k_all),
               [&] { return label + " h(X)=all X=" + c.set(x); });
      for (ElementSet y : c.samples) {
        const Filter fy = gen(c, y);
        p.expect((hull(fam, x) | hull(fam, y)).subset_of(hull(fam, filter_meet(fx, fy).elems)),
                 [&] { return label + " union of hulls X=" + c.set(x) + " Y=" + c.set(y); });
      }
    }
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        const PointSet hx = hull(fam, ElementSet::singleton(x)),
                       hy = hull(fam, ElementSet::singleton(y));
        auto w = [&] { return label + " x=" + a.name(x) + " y=" + a.name(y); };
        if (a.leq(x, y)) p.expect(hx.subset_of(hull(fam, ElementSet::singleton(y))), w);
        p.expect((hx | hy).subset_of(hull(fam, ElementSet::singleton(a.join(x, y)))), w);
        p.expect((hx & hy) == hull(fam, ElementSet::singleton(a.prod(x, y))), w);
      }
  };
  run("all filters", c.lattice.filters());
  for (const auto& s : c.spaces) run(s.label, s.pi().members());
}

void hull_prime_identities(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  for (const auto& s : c.spaces) {
    const auto& pi = s.pi();
    const PointSet all = pi.all_points();
    const bool full = is_full(a, pi);
    const bool is_spec = pi.members() == c.spec.members();
    for (ElementSet x : c.samples) {
      const Filter fx = gen(c, x);
      const PointSet hx = hull(pi, x);
      auto w = [&] { return s.label + " X=" + c.set(x); };
      if (fx.elems == a.carrier()) p.expect(hx.empty(), w);
      if (full) p.expect(hx.empty() == (fx.elems == a.carrier()), w);
      if (is_spec) p.expect(kernel(a, pi, hx) == fx.elems, w);
      p.expect((hx | hull(pi, perp(a, x))) == all, w);
      for (ElementSet y : c.samples) {
        const Filter fy = gen(c, y);
        auto wy = [&] { return s.label + " X=" + c.set(x) + " Y=" + c.set(y); };
        p.expect((hx | hull(pi, y)) == hull(pi, filter_meet(fx, fy).elems), wy);
        if (is_spec) p.expect((hx == hull(pi, y)) == (fx == fy), wy);
      }
    }
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        p.expect((hull(pi, ElementSet::singleton(x)) | hull(pi, ElementSet::singleton(y))) ==
                     hull(pi, ElementSet::singleton(a.join(x, y))),
                 [&] { return s.label + " x=" + a.name(x) + " y=" + a.name(y); });
  }
}

void open_d_identities(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  const Filter one{ElementSet::singleton(a.top())};
  for (const auto& s : c.spaces) {
    const auto& pi = s.pi();
    const PointSet all = pi.all_points();
    const ElementSet base = pi.meet(a);
    const bool full = is_full(a, pi);
    const bool is_spec = pi.members() == c.spec.members();
    p.expect(d_open(pi, ElementSet{}).empty() && d_open(pi, ElementSet::singleton(a.top())).empty(),
             [&] { return s.label + " d(empty), d(1)"; });
    p.expect(d_open(pi, a.carrier()) == all && d_open(pi, ElementSet::singleton(a.bottom())) == all,
             [&] { return s.label + " d(A), d(0)"; });
    for (ElementSet x : c.samples) {
      const Filter fx = gen(c, x);
      const PointSet dx = d_open(pi, x);
      auto w = [&] { return s.label + " X=" + c.set(x); };
      p.expect(dx == d_open(pi, fx.elems), w);
      p.expect(dx.empty() == fx.elems.subset_of(base), w);
      if (full) p.expect((dx == all) == (fx.elems == a.carrier()), w);
      p.expect(kernel(a, pi, dx) == coannihilator(a, Filter{base}, x), w);
      if (base == one.elems) p.expect(kernel(a, pi, dx) == perp(a, x), w);
      for (ElementSet y : c.samples) {
        const Filter fy = gen(c, y);
        auto wy = [&] { return s.label + " X=" + c.set(x) + " Y=" + c.set(y); };
        p.expect((dx & d_open(pi, y)) == d_open(pi, filter_meet(fx, fy).elems), wy);
        p.expect((dx | d_open(pi, y)) == d_open(pi, x | y), wy);
        if (x.subset_of(y)) p.expect(dx.subset_of(d_open(pi, y)), wy);
        if (is_spec) p.expect((dx == d_open(pi, y)) == (fx == fy), wy);
      }
    }
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        const PointSet dx = d_open(pi, ElementSet::singleton(x)),
                       dy = d_open(pi, ElementSet::singleton(y));
        auto w = [&] { return s.label + " x=" + a.name(x) + " y=" + a.name(y); };
        if (a.leq(x, y)) p.expect(d_open(pi, ElementSet::singleton(y)).subset_of(dx), w);
        p.expect((dx & dy) == d_open(pi, ElementSet::singleton(a.join(x, y))), w);
        p.expect((dx | dy) == d_open(pi, ElementSet::singleton(a.prod(x, y))), w);
      }
    for (Element x = 0; x < a.size(); ++x)
      p.expect(hull(pi, ElementSet::singleton(x))
                   .subset_of(d_open(pi, ElementSet::singleton(negation(a, x)))),
               [&] { return s.label + " h(x) <= d(neg x), x=" + a.name(x); });
  }
}

void closure_topological(const Ctx& c, Probe& p) {
  const auto& a = c.alg;
  for (const auto& s : c.spaces) {
    const auto& pi = s.pi();
    const auto& hk = s.hk.hk;
    const auto& du = s.hk.dual;
    auto cl = [&](PointSet x) { return hull(pi, kernel(a, pi, x)); };
    p.expect(cl(PointSet{}).empty(), [&] { return s.label + " hk(empty)"; });
    const auto subs = point_subsets(pi.size());
    for (PointSet x : subs) {
      p.expect(cl(x) == hk.closure(x), [&] { return s.label + " hk vs closure " + c.pts(pi, x); });
      for (PointSet y : subs)
        p.expect(cl(x | y) == (cl(x) | cl(y)),
                 [&] { return s.label + " hk of union " + c.pts(pi, x) + " " + c.pts(pi, y); });
    }
    // open sets are exactly the d(X)
    if (a.size() <= 12) {
      std::set<std::uint64_t> ds;
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << a.size()); ++w)
        ds.insert(d_open(pi, ElementSet::from_word(w)).word());
      std::set<std::uint64_t> opens;
      for (PointSet o : hk.opens()) opens.insert(o.word());
      p.expect(ds == opens, [&] { return s.label + " opens differ from the d(X)"; });
    }
    // basis criteria
    PointSet cover_d, cover_h;
    for (Element x = 0; x < a.size(); ++x) {
      cover_d |= d_open(pi, ElementSet::singleton(x));
      cover_h |= hull(pi, ElementSet::singleton(x));
    }
    p.expect(cover_d == pi.all_points() && cover_h == pi.all_points(),
             [&] { return s.label + " basis does not cover"; });
    for (PointSet o : hk.opens()) {
      PointSet u;
      for (Element x = 0; x < a.size(); ++x) {
        const PointSet b = d_open(pi, ElementSet::singleton(x));
        if (b.subset_of(o)) u |= b;
      }
      p.expect(u == o, [&] { return s.label + " open " + c.pts(pi, o) + " not a union of d(x)"; });
    }
    for (PointSet o : du.opens()) {
      PointSet u;
      for (Element x = 0; x < a.size(); ++x) {
        const PointSet b = hull(pi, ElementSet::singleton(x));
        if (b.subset_of(o)) u |= b;
      }
      p.expect(u == o, [&] { return s.label + " dual open " + c.pts(pi, o) + " not a union of h(x)"; });
    }
  }
}

void specialization_order(const Ctx& c, Probe& p) {
  for (const auto& s : c.spaces) {
    const auto& pi = s.pi();
    for (std::size_t i = 0; i < pi.size(); ++i)
      for (std::size_t j = 0; j < pi.size(); ++j) {
        const bool sub = pi[i].subset_of(pi[j]);
        const bool in_h = s.hk.hk.closure(PointSet::singleton(i)).contains(j);
        const bool in_d = s.hk.dual.closure(PointSet::singleton(j)).contains(i);
        p.expect(sub == in_h && in_h == in_d,
                 [&] { return s.label + " P=" + c.f(pi[i]) + " Q=" + c.f(pi[j]); });
      }
  }
}

void separation_t0(const Ctx& c, Probe& p) {
  for (const auto& s : c.spaces)
    p.expect(is_t0(s.hk.hk) && is_t0(s.hk.dual), [&] { return s.label; });
}

void separation_t1(const Ctx& c, Probe& p) {
  for (const auto& s : c.spaces) {
    const bool anti = is_antichain(s.pi());
    p.expect(is_t1(s.hk.hk) == anti && is_t1(s.hk.dual) == anti, [&] { return s.label; });
  }
  for (const auto* pi : {&c.max, &c.min}) {
    const auto sp = make_space(c.alg, *pi);
    p.expect(is_t1(sp.hk) && is_t1(sp.dual), [&] { return pi->label(c.alg) + " not T1"; });
  }
}

void separation_hausdorff(const Ctx& c, Probe& p) {
  for (const auto& s : c.spaces) {
    const bool closed = is_f_closed(c.alg, s.pi(), Filter{s.pi().meet(c.alg)}).closed;
    const bool h = is_hausdorff(s.hk.hk), d = is_hausdorff(s.hk.dual);
    p.expect(h == closed && d == closed, [&] {
      return s.label + " hk=" + bstr(h) + " dual=" + bstr(d) + " self-closed=" + bstr(closed);
    });
  }
}

void separation_mtl(const Ctx& c, Probe& p) {
  if (!c.mtl) return;
  for (const auto& s : c.spaces) {
    const bool anti = is_antichain(s.pi());
    p.expect(is_hausdorff(s.hk.hk) == anti && is_hausdorff(s.hk.dual) == anti,
             [&] { return s.label; });
  }
}

void retract_hk_hausdorff(const Ctx& c, Probe& p) {
  for (const auto& s : c.spaces) {
    if (!is_antichain(s.pi())) continue;
    const auto big = s_pi(c.alg, s.pi());
    if (retractions(c.alg, big, s.pi(), Which::hull_kernel).empty()) continue;
    p.expect(is_hausdorff(s.hk.hk), [&] { return s.label; });
  }
}

void retract_dual_unique(const Ctx& c, Probe& p) {
  for (const auto& s : c.spaces) {
    if (!is_antichain(s.pi())) continue;
    const auto big = s_pi(c.alg, s.pi());
    if (retractions(c.alg, big, s.pi(), Which::dual).empty()) continue;
    std::string why;
    p.expect(unique_containment_over(c, s.pi(), big, &why), [&] { return s.label + ": " + why; });
  }
}

struct MaxSpecFacts {
  bool pm, retract, max_hausdorff, spec_normal;
};

MaxSpecFacts maxspec_facts(const Ctx& c) {
  return {is_pm(c.alg), !retractions(c.alg, c.spec, c.max, Which::hull_kernel).empty(),
          is_hausdorff(c.max_sp->hk), is_normal(c.spec_sp->hk)};
}

std::string facts_str(const MaxSpecFacts& f) {
  return "pm=" + bstr(f.pm) + " retract=" + bstr(f.retract) +
         " max-hausdorff=" + bstr(f.max_hausdorff) + " spec-normal=" + bstr(f.spec_normal);
}

void maxspec_pm_retract_hausdorff(const Ctx& c, Probe& p) {
  const auto f = maxspec_facts(c);
  p.expect(f.pm == f.retract && f.retract == f.max_hausdorff, [&] { return facts_str(f); });
}

void maxspec_pm_retract(const Ctx& c, Probe& p) {
  const auto f = maxspec_facts(c);
  p.expect(f.pm == f.retract, [&] { return facts_str(f); });
  p.expect(!f.retract || f.max_hausdorff, [&] { return facts_str(f); });
  if (f.pm) {
    const auto r = retraction_spec_to_max(c.alg);
    const auto all = retractions(c.alg, c.spec, c.max, Which::hull_kernel);
    p.expect(std::find(all.begin(), all.end(), r.image) != all.end(),
             [&] { return "canonical retraction is not continuous"; });
  }
}

void maxspec_hausdorff_iff_normal(const Ctx& c, Probe& p) {
  const auto f = maxspec_facts(c);
  p.expect(f.max_hausdorff == f.spec_normal, [&] { return facts_str(f); });
}

void maxspec_normal_implies_hausdorff(const Ctx& c, Probe& p) {
  const auto f = maxspec_facts(c);
  p.expect(!f.spec_normal || f.max_hausdorff, [&] { return facts_str(f); });
  p.expect(!f.pm || f.spec_normal, [&] { return facts_str(f); });
}

void maxspec_mtl(const Ctx& c, Probe& p) {
  if (!c.mtl) return;
  const auto f = maxspec_facts(c);
  p.expect(f.pm && f.retract && f.max_hausdorff && f.spec_normal, [&] { return facts_str(f); });
}

void normal_from_retract(const Ctx& c, Probe& p) {
  for (const auto& s : c.spaces) {
    const auto big = s_pi(c.alg, s.pi());
    if (retractions(c.alg, big, s.pi(), Which::hull_kernel).empty()) continue;
    const auto bs = make_space(c.alg, big);
    const bool t4 = is_t1(s.hk.hk) && is_normal(s.hk.hk);
    if (t4 && is_compact(bs.hk))
      p.expect(is_normal(bs.hk), [&] { return s.label; });
  }
}

void normal_implies_hausdorff(const Ctx& c, Probe& p) {
  for (const auto& s : c.spaces) {
    if (!is_antichain(s.pi())) continue;
    const auto bs = make_space(c.alg, s_pi(c.alg, s.pi()));
    if (is_normal(bs.hk)) p.expect(is_hausdorff(s.hk.hk), [&] { return s.label; });
  }
}

void compact_criteria(const Ctx& c, Probe& p) {
  for (const auto& s : c.spaces) {
    const auto r = compactness(c.alg, s.hk);
    if (r.full) p.expect(r.compact_h, [&] { return s.label + " full but not compact"; });
    if (contains_min_of_base(c, s.pi()))
      p.expect(r.compact_d, [&] { return s.label + " dual not compact"; });
  }
}

void min_spaces_hausdorff(const Ctx& c, Probe& p) {
  for (const auto& f : c.proper) {
    const auto mins = min_primes_over(c.alg, f.elems);
    p.expect(mins.meet(c.alg) == f.elems, [&] { return "meet of Min_F, F=" + c.f(f); });
    for (const auto& m : mins)
      p.expect(d_set(c.alg, f, m) == m.elems, [&] { return "F=" + c.f(f) + " m=" + c.f(m); });
    const auto sp = make_space(c.alg, mins);
    p.expect(is_hausdorff(sp.hk), [&] { return "Min_F not Hausdorff, F=" + c.f(f); });
  }
}

void min_dual_compact(const Ctx& c, Probe& p) {
  const Space s{"min", *c.min_sp};
  p.expect(is_compact(s.hk.dual), [] { return std::string("dual topology on Min"); });
}

void min_perp_identities(const Ctx& c, Probe& p) {
  const auto report = min_space_identities(c.alg, c.samples);
  if (!report.ok())
    p.expect(false, [&] {
      return report.failures.front().identity + ": " + report.failures.front().witness;
    });
}

void min_zero_dimensional(const Ctx& c, Probe& p) {
  const Space s{"min", *c.min_sp};
  const auto r = connectedness(s.hk.hk);
  p.expect(r.zero_dimensional && r.totally_disconnected, [] { return std::string("Min"); });
  p.expect(is_finer(s.hk.dual, s.hk.hk), [] { return std::string("dual not finer"); });
}

void min_star(const Ctx& c, Probe& p) {
  const Space s{"min", *c.min_sp};
  const bool star = star_check(c.alg);
  const bool same = s.hk.hk == s.hk.dual;
  const bool compact = is_compact(s.hk.hk);
  p.expect(star == same && same == compact, [&] {
    return "star=" + bstr(star) + " coincide=" + bstr(same) + " compact=" + bstr(compact);
  });
}

void min_extremal(const Ctx& c, Probe& p) {
  const Space s{"min", *c.min_sp};
  const bool ed = is_extremally_disconnected(s.hk.hk);
  bool all_open = true;
  std::string first;
  for (ElementSet x : all_perps(c.alg)) {
    if (!s.hk.hk.is_open(hull(s.pi(), x))) {
      if (all_open) first = c.set(x);
      all_open = false;
    }
  }
  p.expect(ed == all_open, [&] { return "extremal=" + bstr(ed) + " first non-open hull " + first; });
}

void min_stonean(const Ctx& c, Probe& p) {
  const Space s{"min", *c.min_sp};
  const bool stonean = connectedness(s.hk.hk).stonean;
  const bool big = bigstar_check(c.alg);
  p.expect(stonean == big, [&] { return "stonean=" + bstr(stonean) + " bigstar=" + bstr(big); });
}

void finite_star(const Ctx& c, Probe& p) {
  const Space s{"min", *c.min_sp};
  p.expect(star_check(c.alg), [] { return std::string("star fails"); });
  p.expect(bigstar_check(c.alg), [] { return std::string("bigstar fails"); });
  p.expect(s.hk.hk == s.hk.dual, [] { return std::string("topologies differ on Min"); });
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {{"algebra.adjointness", "x (.) y <= z iff x <= y -> z"}, algebra_adjointness},
      {{"algebra.prod_distributes",
        "x (.) (y v z) = (x (.) y) v (x (.) z), and (x v y) (.) (x v z) <= x v (y (.) z)"},
       algebra_distrib},
      {{"algebra.residuum_is_greatest", "x -> y is the greatest z with x (.) z <= y"},
       algebra_residuum},
      {{"filter.lattice_closed",
        "the filters form a lattice under intersection and generated join, with {1} and A"},
       filter_lattice_closed},
      {{"filter.adjoin_normal_form",
        "F(F, x) = {a | f (.) x^k <= a for some f in F, k >= 1}"},
       filter_adjoin_form},
      {{"filter.adjoin_lattice",
        "F(F,x) meet F(F,y) = F(F, x v y), F(F,x) join F(F,y) = F(F, x (.) y), antitone in x"},
       filter_adjoin_lattice},
      {{"filter.principal_sublattice",
        "up(x) meet up(y) = up(x v y) and up(x) join up(y) = up(x (.) y)"},
       filter_principal_sublattice},
      {{"filter.finite_generators", "if F(X) = A then F(Y) = A for a finite Y inside X"},
       filter_finite_generators},
      {{"filter.generated_meet_of_primes",
        "F(X) is the meet of the primes containing X and the meet of Min_X"},
       filter_generated_by_primes},
      {{"prime.equivalent_definitions",
        "meet-irreducible, prime in the filter lattice, join-prime and join-closed complement agree"},
       prime_definitions},
      {{"prime.max_are_prime", "maximal filters are prime and every proper filter lies in one"},
       prime_max},
      {{"prime.union_complement_join_closed",
        "the complement of a union of primes is join-closed when nonempty"},
       prime_union_complement},
      {{"prime.prime_filter_theorem",
        "a filter missing a join-closed set C extends to a prime missing C; C extends to a "
        "maximal join-closed set missing F whose complement is F-minimal"},
       prime_filter_theorem},
      {{"prime.separation",
        "X not in F gives a prime over F and an F-minimal prime not containing X"},
       prime_separation},
      {{"prime.min_over_iff_maximal_join_closed",
        "P is F-minimal iff its complement is a maximal join-closed set missing F"},
       prime_min_over_maximal_vee},
      {{"prime.contains_minimal", "every prime containing X contains an X-minimal prime"},
       prime_contains_minimal},
      {{"coann.meet_formula", "(meet Pi : X) = meet of the members of Pi not containing X"},
       coann_meet_formula},
      {{"coann.perp_via_primes",
        "X^perp is the meet of primes not containing X, and of minimal primes not containing X"},
       coann_perp},
      {{"dset.union_form", "D_F(P) is the union of (F:x) over x not in P, and contains F"},
       dset_union_form},
      {{"dset.order", "D_F is antitone in P and D_F(P) <= P when F <= P"}, dset_order},
      {{"fclosed.unique_containment",
        "Pi is F-closed iff each member is the only member containing its D_F"},
       fclosed_unique_containment},
      {{"fclosed.s_pi_chain",
        "F-closed implies each member of S_Pi lies in one member of Pi, which implies antichain"},
       fclosed_s_pi_chain},
      {{"fclosed.prelinear_antichain",
        "an antichain is F-closed when (x -> y) v (y -> x) is in F for all x, y"},
       fclosed_prelinear},
      {{"fclosed.mtl_antichain", "in an MTL-algebra, {1}-closed iff antichain"}, fclosed_mtl},
      {{"min.three_way", "P in Min_F iff P = D_F(P) iff exactly one of x, (F:x) lies in P"},
       min_three_way},
      {{"min.dset",
        "Min over D_F(P) = {m in Min_F | m <= P}, and D_F(P) = meet of those = meet of primes "
        "between F and P"},
       min_dset},
      {{"galois.battery", "h and k form an antitone Galois connection"}, galois_battery},
      {{"hull.filter_identities", "hull identities over arbitrary families of filters"},
       hull_filter_identities},
      {{"hull.prime_identities", "hull identities over families of prime filters"},
       hull_prime_identities},
      {{"open.d_identities", "identities of the open sets d(X), including h(x) <= d(neg x)"}, open_d_identities},
      {{"closure.topological",
        "hk is a topological closure whose opens are the d(X); d(x) and h(x) are bases"},
       closure_topological},
      {{"closure.specialization_order",
        "P <= Q iff Q is in the hk-closure of P iff P is in the dual closure of Q"},
       specialization_order},
      {{"sep.t0", "both topologies are T0"}, separation_t0},
      {{"sep.t1_iff_antichain",
        "either topology is T1 iff Pi is an antichain; Max and Min are T1"},
       separation_t1},
      {{"sep.hausdorff_iff_self_closed",
        "either topology is Hausdorff iff Pi is closed over its own meet"},
       separation_hausdorff},
      {{"sep.mtl_hausdorff_iff_antichain",
        "in an MTL-algebra, Hausdorff iff antichain"},
       separation_mtl},
      {{"retract.hk_implies_hausdorff",
        "an antichain that is a hull-kernel retract of S_Pi is Hausdorff"},
       retract_hk_hausdorff},
      {{"retract.dual_implies_unique",
        "an antichain that is a dual retract of S_Pi has unique containment over S_Pi"},
       retract_dual_unique},
      {{"maxspec.pm_retract_hausdorff",
        "pm, Max a hull-kernel retract of Spec, and Max Hausdorff are equivalent"},
       maxspec_pm_retract_hausdorff},
      {{"maxspec.pm_iff_retract", "pm iff Max is a retract of Spec; a retract is Hausdorff"},
       maxspec_pm_retract},
      {{"maxspec.hausdorff_iff_spec_normal", "Max is Hausdorff iff Spec is normal"},
       maxspec_hausdorff_iff_normal},
      {{"maxspec.normal_implies_hausdorff",
        "Spec normal implies Max Hausdorff; pm implies Spec normal"},
       maxspec_normal_implies_hausdorff},
      {{"maxspec.mtl", "an MTL-algebra is pm, with Max a Hausdorff retract and Spec normal"},
       maxspec_mtl},
      {{"normal.from_retract",
        "a T4 hull-kernel retract Pi of a compact S_Pi makes S_Pi normal"},
       normal_from_retract},
      {{"normal.implies_hausdorff", "an antichain with S_Pi normal is Hausdorff"},
       normal_implies_hausdorff},
      {{"compact.criteria",
        "full implies hull-kernel compact; containing Min over the meet implies dual compact"},
       compact_criteria},
      {{"min.spaces_hausdorff",
        "Min_F is Hausdorff, has meet F, and each member equals its D_F"},
       min_spaces_hausdorff},
      {{"min.dual_compact", "Min is compact in the dual topology"}, min_dual_compact},
      {{"min.perp_identities", "hulls, kernels and perps on the minimal prime space"},
       min_perp_identities},
      {{"min.zero_dimensional",
        "Min is zero-dimensional and totally disconnected; the dual topology is finer"},
       min_zero_dimensional},
      {{"min.star_iff_coincide",
        "star holds iff the topologies coincide on Min iff Min is hull-kernel compact"},
       min_star},
      {{"min.extremal_iff_perp_hulls_open",
        "Min is extremally disconnected iff every h(X^perp) is open"},
       min_extremal},
      {{"min.stonean_iff_bigstar", "Min is Stonean iff bigstar holds"}, min_stonean},
      {{"finite.star_bigstar", "star and bigstar hold, and the topologies agree on Min"},
       finite_star},
  };
  return all;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& c : checks()) out.push_back(c.entry);
    return out;
  }();
  return entries;
}

TheoremReport run_suite(const Algebra& alg, const SuiteOptions& options, std::string algebra_id) {
  Ctx ctx{alg, all_filters(alg), {}, spec(alg), max_filters(alg), min_primes(alg), {}, {}, is_mtl(alg), {}, {}, {}};
  for (const auto& f : ctx.lattice)
    if (is_proper(alg, f)) ctx.proper.push_back(f);
  for (auto& pi : suite_collections(alg, options.max_exhaustive_collection)) {
    std::string label = describe(alg, pi);
    ctx.spaces.push_back(Space{std::move(label), make_space(alg, std::move(pi))});
  }
  ctx.spec_sp = make_space(alg, ctx.spec);
  ctx.max_sp = make_space(alg, ctx.max);
  ctx.min_sp = make_space(alg, ctx.min);
  ctx.samples = sample_subsets(alg, options.seed, options.random_samples);

  TheoremReport report;
  report.algebra_id = std::move(algebra_id);
  for (const auto& c : checks()) {
    Probe probe;
    try {
      c.fn(ctx, probe);
    } catch (const std::exception& e) {
      probe.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    report.checks.push_back(CheckResult{std::string(c.entry.id), std::string(c.entry.statement),
                                        !probe.failed(), probe.witness().value_or("")});
  }
  return report;
}

TheoremReport run_suite(const AlgebraTables& tables, const SuiteOptions& options,
                        std::string algebra_id) {
  return run_suite(Algebra::from_tables(tables), options, std::move(algebra_id));
}

}  // namespace rlat
