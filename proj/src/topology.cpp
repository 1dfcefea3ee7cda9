#include "rlat/topology.hpp"

#include <algorithm>
#include <unordered_set>

namespace rlat {

namespace {

using WordSet = std::unordered_set<PointSet::word_type>;

std::vector<PointSet> sorted_sets(const WordSet& words) {
  std::vector<PointSet> out;
  out.reserve(words.size());
  for (auto w : words) out.push_back(PointSet::from_word(w));
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest open set containing p (finite spaces have one).
PointSet min_neighbourhood(const FiniteTopology& t, std::size_t p) {
  PointSet n = t.ground();
  for (PointSet u : t.opens())
    if (u.contains(p)) n &= u;
  return n;
}

PointSet min_neighbourhood(const FiniteTopology& t, PointSet s) {
  PointSet n;
  for (std::size_t p : s) n |= min_neighbourhood(t, p);
  return n;
}

}  // namespace

FiniteTopology FiniteTopology::generated(std::size_t ground_size, std::vector<BasisSet> basis,
                                         std::size_t max_opens) {
  if (ground_size > PointSet::max_width)
    throw CapExceeded("space has more than 64 points");
  FiniteTopology t;
  t.m_ = ground_size;
  const PointSet ground = PointSet::full(ground_size);

  // finite intersections of the subbase, the empty one being the ground set
  WordSet meets{ground.word()};
  for (const auto& b : basis) {
    std::vector<PointSet::word_type> snapshot(meets.begin(), meets.end());
    for (auto w : snapshot) meets.insert(w & b.set.word());
    if (meets.size() > max_opens) throw CapExceeded("open family exceeds cap");
  }
  WordSet opens{0};
  for (auto m : meets) {
    std::vector<PointSet::word_type> snapshot(opens.begin(), opens.end());
    for (auto w : snapshot) opens.insert(w | m);
    if (opens.size() > max_opens) throw CapExceeded("open family exceeds cap");
  }
  t.opens_ = sorted_sets(opens);
  t.basis_ = std::move(basis);
  return t;
}

std::vector<PointSet> FiniteTopology::closed_sets() const {
  std::vector<PointSet> out;
  for (PointSet u : opens_) out.push_back(u.complement(m_));
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteTopology::is_open(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

PointSet FiniteTopology::closure(PointSet s) const {
  PointSet outside;
  for (PointSet u : opens_)
    if (!u.intersects(s)) outside |= u;
  return outside.complement(m_);
}

PointSet FiniteTopology::interior(PointSet s) const {
  PointSet in;
  for (PointSet u : opens_)
    if (u.subset_of(s)) in |= u;
  return in;
}

bool is_t0(const FiniteTopology& t) {
  const auto m = t.ground_size();
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      bool separated = false;
      for (PointSet u : t.opens())
        if (u.contains(p) != u.contains(q)) { separated = true; break; }
      if (!separated) return false;
    }
  return true;
}

bool is_t1(const FiniteTopology& t) {
  const auto m = t.ground_size();
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      if (p == q) continue;
      bool separated = false;
      for (PointSet u : t.opens())
        if (u.contains(p) && !u.contains(q)) { separated = true; break; }
      if (!separated) return false;
    }
  return true;
}

bool is_hausdorff(const FiniteTopology& t) {
  const auto m = t.ground_size();
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q)
      if (min_neighbourhood(t, p).intersects(min_neighbourhood(t, q))) return false;
  return true;
}

bool is_normal(const FiniteTopology& t) {
  const auto closed = t.closed_sets();
  std::vector<PointSet> nbhd;
  for (PointSet c : closed) nbhd.push_back(min_neighbourhood(t, c));
  for (std::size_t i = 0; i < closed.size(); ++i)
    for (std::size_t j = i + 1; j < closed.size(); ++j)
      if (!closed[i].intersects(closed[j]) && nbhd[i].intersects(nbhd[j])) return false;
  return true;
}

std::vector<std::size_t> reduce_cover(const FiniteTopology& t, const std::vector<PointSet>& cover) {
  PointSet all;
  for (PointSet u : cover) all |= u;
  if (all != t.ground()) throw PreconditionError("family does not cover the space");

  if (cover.size() <= 16) {
    const std::uint32_t limit = std::uint32_t{1} << cover.size();
    std::uint32_t best = limit - 1;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      if (std::popcount(mask) >= std::popcount(best)) continue;
      PointSet u;
      for (std::size_t i = 0; i < cover.size(); ++i)
        if ((mask >> i) & 1u) u |= cover[i];
      if (u == t.ground()) best = mask;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cover.size(); ++i)
      if ((best >> i) & 1u) out.push_back(i);
    return out;
  }

  // Larger covers: drop members whose removal keeps the cover, largest last.
  std::vector<std::size_t> order(cover.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cover[a].size() < cover[b].size(); });
  std::vector<bool> kept(cover.size(), true);
  for (std::size_t i : order) {
    kept[i] = false;
    PointSet u;
    for (std::size_t j = 0; j < cover.size(); ++j)
      if (kept[j]) u |= cover[j];
    if (u != t.ground()) kept[i] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (kept[i]) out.push_back(i);
  return out;
}

bool is_compact(const FiniteTopology& t) {
  std::vector<PointSet> cover;
  for (const auto& b : t.basis()) cover.push_back(b.set);
  PointSet u;
  for (PointSet s : cover) u |= s;
  // A basis that misses points leaves only the open family itself to cover with.
  if (u != t.ground()) cover = t.opens();
  const auto sub = reduce_cover(t, cover);
  PointSet covered;
  for (std::size_t i : sub) covered |= cover[i];
  return covered == t.ground();
}

bool is_zero_dimensional(const FiniteTopology& t) {
  std::vector<PointSet> clopens;
  for (PointSet u : t.opens())
    if (t.is_closed(u)) clopens.push_back(u);
  for (PointSet u : t.opens()) {
    PointSet from_clopens;
    for (PointSet c : clopens)
      if (c.subset_of(u)) from_clopens |= c;
    if (from_clopens != u) return false;
  }
  return true;
}

bool is_totally_disconnected(const FiniteTopology& t) {
  std::vector<PointSet> clopens;
  for (PointSet u : t.opens())
    if (t.is_closed(u)) clopens.push_back(u);
  const auto m = t.ground_size();
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      bool separated = false;
      for (PointSet c : clopens)
        if (c.contains(p) && !c.contains(q)) { separated = true; break; }
      if (!separated) return false;
    }
  return true;
}

bool is_extremally_disconnected(const FiniteTopology& t) {
  for (PointSet u : t.opens())
    if (!t.is_open(t.closure(u))) return false;
  return true;
}

bool is_finer(const FiniteTopology& fine, const FiniteTopology& coarse) {
  if (fine.ground_size() != coarse.ground_size()) return false;
  for (PointSet u : coarse.opens())
    if (!fine.is_open(u)) return false;
  return true;
}

bool is_continuous(const FiniteTopology& from, const FiniteTopology& to,
                   const std::vector<std::size_t>& map) {
  for (PointSet v : to.opens()) {
    PointSet pre;
    for (std::size_t i = 0; i < map.size(); ++i)
      if (v.contains(map[i])) pre.insert(i);
    if (!from.is_open(pre)) return false;
  }
  return true;
}

PointSet hull(const std::vector<Filter>& family, ElementSet x) {
  PointSet out;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (x.subset_of(family[i].elems)) out.insert(i);
  return out;
}

PointSet d_open(const std::vector<Filter>& family, ElementSet x) {
  return hull(family, x).complement(family.size());
}

ElementSet kernel(const Algebra& alg, const std::vector<Filter>& family, PointSet pts) {
  ElementSet acc = alg.carrier();
  for (std::size_t i : pts) acc &= family[i].elems;
  return acc;
}

namespace {

void require_primes(const Algebra& alg, const PrimeCollection& pi) {
  for (const auto& p : pi)
    if (!is_prime_filter(alg, p))
      throw NotPrimeCollection(format_set(alg, p.elems) + " is not a prime filter");
}

std::vector<BasisSet> element_basis(const Algebra& alg, const PrimeCollection& pi, BasisTag tag) {
  std::vector<BasisSet> basis;
  for (Element x = 0; x < alg.size(); ++x) {
    const auto s = ElementSet::singleton(x);
    basis.push_back({tag == BasisTag::d ? d_open(pi, s) : hull(pi, s), tag, x});
  }
  return basis;
}

}  // namespace

FiniteTopology hk_topology(const Algebra& alg, const PrimeCollection& pi) {
  require_primes(alg, pi);
  auto t = FiniteTopology::generated(pi.size(), element_basis(alg, pi, BasisTag::d));

  // closed sets must be exactly the hulls h(X) = intersections of the h(x)
  WordSet hulls{pi.all_points().word()};
  for (Element x = 0; x < alg.size(); ++x) {
    const auto hx = hull(pi, ElementSet::singleton(x));
    std::vector<PointSet::word_type> snapshot(hulls.begin(), hulls.end());
    for (auto w : snapshot) hulls.insert(w & hx.word());
  }
  if (sorted_sets(hulls) != t.closed_sets())
    throw InternalInconsistency("closed sets of the hull-kernel topology are not the hulls");
  return t;
}

FiniteTopology dual_topology(const Algebra& alg, const PrimeCollection& pi) {
  require_primes(alg, pi);
  return FiniteTopology::generated(pi.size(), element_basis(alg, pi, BasisTag::h));
}

bool is_full(const Algebra& alg, const PrimeCollection& pi) {
  for (const auto& f : all_filters(alg)) {
    if (!is_proper(alg, f)) continue;
    if (std::none_of(pi.begin(), pi.end(), [&](const Filter& p) { return f.subset_of(p); }))
      return false;
  }
  return true;
}

HullKernelSpace make_space(const Algebra& alg, PrimeCollection pi) {
  auto hk = hk_topology(alg, pi);
  auto dual = dual_topology(alg, pi);
  return {std::move(pi), std::move(hk), std::move(dual)};
}

PointSet closure(const Algebra& alg, const HullKernelSpace& space, PointSet pts) {
  const PointSet c = hull(space.collection, kernel(alg, space.collection, pts));
  if (c != space.hk.closure(pts))
    throw InternalInconsistency("hk closure differs from the topological closure");
  return c;
}

SeparationReport separation(const Algebra& alg, const HullKernelSpace& space, Which which) {
  const FiniteTopology& t = which == Which::hull_kernel ? space.hk : space.dual;
  SeparationReport r;
  r.t0 = is_t0(t);
  r.t1 = is_t1(t);
  r.hausdorff = is_hausdorff(t);
  r.normal = is_normal(t);
  r.t4 = r.t1 && r.normal;

  const auto& pi = space.collection;
  const bool antichain = is_antichain(pi);
  const bool self_closed = is_f_closed(alg, pi, Filter{pi.meet(alg)}).closed;
  if (!r.t0) throw InternalInconsistency("prime collection " + pi.label(alg) + " is not T0");
  if (r.t1 != antichain)
    throw InternalInconsistency("T1 disagrees with the antichain test on " + pi.label(alg));
  if (r.hausdorff != self_closed)
    throw InternalInconsistency("Hausdorff disagrees with the closedness test on " +
                                pi.label(alg));
  return r;
}

CompactnessReport compactness(const Algebra& alg, const HullKernelSpace& space) {
  return {is_compact(space.hk), is_compact(space.dual), is_full(alg, space.collection)};
}

ConnectednessReport connectedness(const FiniteTopology& t) {
  ConnectednessReport r;
  r.zero_dimensional = is_zero_dimensional(t);
  r.totally_disconnected = is_totally_disconnected(t);
  r.extremally_disconnected = is_extremally_disconnected(t);
  r.stonean = r.extremally_disconnected && is_compact(t) && is_hausdorff(t);
  return r;
}

std::vector<std::vector<std::size_t>> retractions(const Algebra& alg, const PrimeCollection& big,
                                                  const PrimeCollection& sub, Which which,
                                                  std::size_t max_maps) {
  auto topo = [&](const PrimeCollection& c) {
    return which == Which::hull_kernel ? hk_topology(alg, c) : dual_topology(alg, c);
  };
  const auto from = topo(big);
  const auto to = topo(sub);

  std::vector<std::size_t> map(big.size(), 0);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (auto j = sub.index_of(big[i])) map[i] = *j;
    else free.push_back(i);
  }
  if (sub.size() != big.size() - free.size())
    throw PreconditionError("retraction target is not a subcollection");
  std::vector<std::vector<std::size_t>> out;
  if (sub.empty()) return out;

  std::size_t total = 1;
  for (std::size_t k = 0; k < free.size(); ++k) {
    total *= sub.size();
    if (total > max_maps) throw CapExceeded("too many candidate retractions");
  }
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i : free) {
      map[i] = c % sub.size();
      c /= sub.size();
    }
    if (is_continuous(from, to, map)) out.push_back(map);
  }
  return out;
}

Retraction retraction_spec_to_max(const Algebra& alg) {
  Retraction r{spec(alg), max_filters(alg), {}};
  for (const auto& p : r.spec) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < r.max.size(); ++j)
      if (p.subset_of(r.max[j])) above.push_back(j);
    if (above.size() != 1)
      throw NotPm(p, format_set(alg, p.elems) + " lies under " + std::to_string(above.size()) +
                         " maximal filters");
    r.image.push_back(above.front());
  }
  for (std::size_t j = 0; j < r.max.size(); ++j)
    if (r.image[*r.spec.index_of(r.max[j])] != j)
      throw InternalInconsistency("retraction moves a maximal filter");
  if (!is_continuous(hk_topology(alg, r.spec), hk_topology(alg, r.max), r.image))
    throw InternalInconsistency("retraction onto Max is not continuous");
  return r;
}

namespace {

std::string pts_str(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace

IdentityReport check_galois(const Algebra& alg, const std::vector<Filter>& family,
                            const std::vector<ElementSet>& samples) {
  IdentityReport r;
  auto expect = [&](bool cond, const char* id, auto&& witness) {
    ++r.checked;
    if (!cond) r.failures.push_back({id, witness()});
  };
  const std::size_t g = family.size();
  const PointSet all = PointSet::full(g);
  const bool exhaustive = g <= 10;
  std::vector<PointSet> subfams;
  if (exhaustive) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << g); ++w) subfams.push_back(PointSet::from_word(w));
  } else {
    subfams = {PointSet{}, all};
    for (std::size_t i = 0; i < g; ++i) {
      subfams.push_back(PointSet::singleton(i));
      subfams.push_back(all - PointSet::singleton(i));
    }
  }
  auto h = [&](ElementSet x) { return hull(family, x); };
  auto k = [&](PointSet f) { return kernel(alg, family, f); };

  for (ElementSet x : samples) {
    const PointSet hx = h(x);
    expect(x.subset_of(k(hx)), "galois.kh_inflationary", [&] { return format_set(alg, x); });
    expect(h(k(hx)) == hx, "galois.hkh", [&] { return format_set(alg, x); });
    for (PointSet f : subfams)
      expect(x.subset_of(k(f)) == f.subset_of(hx), "galois.adjunction",
             [&] { return format_set(alg, x) + " / " + pts_str(f); });
    for (ElementSet y : samples) {
      if (x.subset_of(y))
        expect(h(y).subset_of(hx), "galois.h_antitone",
               [&] { return format_set(alg, x) + " <= " + format_set(alg, y); });
      expect((hx & h(y)) == h(x | y), "galois.hull_of_union",
             [&] { return format_set(alg, x) + ", " + format_set(alg, y); });
    }
  }
  for (PointSet f : subfams) {
    const ElementSet kf = k(f);
    const PointSet hkf = h(kf);
    expect(f.subset_of(hkf), "galois.hk_inflationary", [&] { return pts_str(f); });
    expect(k(hkf) == kf, "galois.khk", [&] { return pts_str(f); });
    expect(h(k(hkf)) == hkf, "galois.hk_idempotent", [&] { return pts_str(f); });
    for (std::size_t i = 0; i < g; ++i) {
      const PointSet fi = f | PointSet::singleton(i);
      expect(k(fi).subset_of(kf), "galois.k_antitone", [&] { return pts_str(f) + " + " + std::to_string(i); });
      expect(hkf.subset_of(h(k(fi))), "galois.hk_monotone",
             [&] { return pts_str(f) + " + " + std::to_string(i); });
      expect((kf & k(PointSet::singleton(i))) == k(fi), "galois.kernel_of_union",
             [&] { return pts_str(f) + " + " + std::to_string(i); });
    }
  }
  if (exhaustive) {
    WordSet fixed, hulls{all.word()};
    for (PointSet f : subfams)
      if (h(k(f)) == f) fixed.insert(f.word());
    for (Element x = 0; x < alg.size(); ++x) {
      const auto hx = h(ElementSet::singleton(x));
      std::vector<PointSet::word_type> snapshot(hulls.begin(), hulls.end());
      for (auto w : snapshot) hulls.insert(w & hx.word());
    }
    expect(sorted_sets(fixed) == sorted_sets(hulls), "galois.closed_are_hulls",
           [] { return std::string("closed family differs from hull family"); });
  }
  return r;
}

IdentityReport min_space_identities(const Algebra& alg, const std::vector<ElementSet>& samples) {
  IdentityReport r;
  auto expect = [&](bool cond, const char* id, auto&& witness) {
    ++r.checked;
    if (!cond) r.failures.push_back({id, witness()});
  };
  const auto space = make_space(alg, min_primes(alg));
  const auto& pi = space.collection;
  auto h = [&](ElementSet x) { return hull(pi, x); };
  auto d = [&](ElementSet x) { return d_open(pi, x); };
  auto k = [&](PointSet f) { return kernel(alg, pi, f); };
  auto one = [](Element x) { return ElementSet::singleton(x); };
  auto name = [&](Element x) { return alg.name(x); };

  std::vector<ElementSet> perp_of(alg.size()), perp2_of(alg.size());
  for (Element x = 0; x < alg.size(); ++x) {
    perp_of[x] = perp(alg, one(x));
    perp2_of[x] = perp(alg, perp_of[x]);
  }
  for (Element x = 0; x < alg.size(); ++x) {
    expect(!h(one(x)).intersects(h(perp_of[x])), "min.hull_perp_disjoint", [&] { return name(x); });
    expect(d(one(x)) == h(perp_of[x]), "min.d_is_hull_perp", [&] { return name(x); });
    expect(d(perp_of[x]) == h(one(x)), "min.d_perp_is_hull", [&] { return name(x); });
    expect(h(k(d(one(x)))) == d(one(x)), "min.hkd", [&] { return name(x); });
    expect(h(one(x)) == h(perp2_of[x]), "min.hull_double_perp", [&] { return name(x); });
    for (Element y = 0; y < alg.size(); ++y)
      expect((h(perp_of[x]) == h(one(y))) == (perp2_of[x] == perp_of[y]), "min.hull_perp_eq",
             [&] { return name(x) + ", " + name(y); });
  }
  for (ElementSet x : samples) {
    const ElementSet xp = perp(alg, x);
    expect(k(d(x)) == xp, "min.kd_is_perp", [&] { return format_set(alg, x); });
    expect(k(h(xp)) == xp, "min.kh_perp_fixed", [&] { return format_set(alg, x); });
    PointSet s;
    for (Element e : x) s |= h(perp_of[e]);
    expect(closure(alg, space, s) == h(xp), "min.closure_of_perp_hulls",
           [&] { return format_set(alg, x); });
  }
  return r;
}

}  // namespace rlat
