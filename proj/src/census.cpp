#include "rlat/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rlat/io.hpp"

namespace rlat {

namespace {

using Code = std::vector<std::uint8_t>;

std::vector<std::vector<Element>> middle_permutations(std::size_t n) {
  std::vector<Element> mid(n >= 2 ? n - 2 : 0);
  std::iota(mid.begin(), mid.end(), Element{1});
  std::vector<std::vector<Element>> out;
  do {
    std::vector<Element> perm(n);
    perm[0] = 0;
    perm[n - 1] = n - 1;
    for (std::size_t i = 0; i < mid.size(); ++i) perm[i + 1] = mid[i];
    out.push_back(std::move(perm));
  } while (std::next_permutation(mid.begin(), mid.end()));
  return out;
}

// Table of the renamed structure: t'[p(x)][p(y)] = p(t[x][y]).
Table permute(const Table& t, const std::vector<Element>& perm) {
  const std::size_t n = perm.size();
  Table out(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) out[perm[x] * n + perm[y]] = perm[t[x * n + y]];
  return out;
}

Code encode(std::initializer_list<const Table*> tables) {
  Code c;
  for (const Table* t : tables)
    for (Element e : *t) c.push_back(static_cast<std::uint8_t>(e));
  return c;
}

// Least permutation image of (join, prod); prod may be null for lattices.
std::pair<Code, std::vector<Element>> canonical_code(const Table& join, const Table* prod,
                                                     std::size_t n) {
  if (n > 10) throw CapExceeded("canonical form limited to 10 elements");
  std::optional<Code> best;
  std::vector<Element> best_perm;
  for (const auto& perm : middle_permutations(n)) {
    const Table j = permute(join, perm);
    Code c;
    if (prod) {
      const Table p = permute(*prod, perm);
      c = encode({&j, &p});
    } else {
      c = encode({&j});
    }
    if (!best || c < *best) {
      best = std::move(c);
      best_perm = perm;
    }
  }
  return {*best, best_perm};
}

Table meet_from_join(const Table& join, std::size_t n) {
  // x meet y = greatest common lower bound, with x <= y iff x v y = y
  Table meet(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element best = 0;
      for (Element z = 0; z < n; ++z)
        if (join[z * n + x] == x && join[z * n + y] == y && join[best * n + z] == z) best = z;
      meet[x * n + y] = best;
    }
  return meet;
}

AlgebraTables tables_of(std::size_t n, Table join, Table prod) {
  AlgebraTables t;
  t.names = default_names(n);
  t.bottom = 0;
  t.top = n - 1;
  t.meet = meet_from_join(join, n);
  t.join = std::move(join);
  t.prod = std::move(prod);
  return t;
}

class ProdSearch {
public:
  ProdSearch(const AlgebraTables& lattice, const EnumerateOptions& options,
             std::chrono::steady_clock::time_point start, std::set<Code>& seen,
             std::vector<Algebra>& out)
      : lat_(lattice), n_(lattice.size()), options_(options), start_(start), seen_(seen),
        out_(out) {
    leq_.assign(n_ * n_, false);
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) leq_[x * n_ + y] = lat_.join[x * n_ + y] == y;
    t_.assign(n_ * n_, unset());
    for (Element y = 0; y < n_; ++y) {
      set(0, y, 0);
      set(n_ - 1, y, y);
    }
    for (Element x = 1; x + 1 < n_; ++x)
      for (Element y = x; y + 1 < n_; ++y) cells_.emplace_back(x, y);
  }

  /// False when stopped by a cap.
  bool run() { return step(0); }

private:
  Element unset() const { return n_; }
  Element& at(Element x, Element y) { return t_[x * n_ + y]; }
  Element get(Element x, Element y) const { return t_[x * n_ + y]; }
  void set(Element x, Element y, Element v) { at(x, y) = v; at(y, x) = v; }
  bool leq(Element x, Element y) const { return leq_[x * n_ + y]; }
  Element join(Element x, Element y) const { return lat_.join[x * n_ + y]; }

  bool capped() const {
    if (out_.size() >= options_.max_count) return true;
    if (options_.time_limit.count() > 0 &&
        std::chrono::steady_clock::now() - start_ > options_.time_limit)
      return true;
    return false;
  }

  bool monotone_at(Element x, Element y) const {
    const Element v = get(x, y);
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) {
        const Element w = get(a, b);
        if (w == unset()) continue;
        if (leq(a, x) && leq(b, y) && !leq(w, v)) return false;
        if (leq(x, a) && leq(y, b) && !leq(v, w)) return false;
      }
    return true;
  }

  bool consistent() const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        for (Element c = 0; c < n_; ++c) {
          const Element ab = get(a, b), ac = get(a, c), abc = get(a, join(b, c));
          if (ab != unset() && ac != unset() && abc != unset() && abc != join(ab, ac))
            return false;
          const Element bc = get(b, c);
          if (ab == unset() || bc == unset()) continue;
          const Element l = get(ab, c), r = get(a, bc);
          if (l != unset() && r != unset() && l != r) return false;
        }
    return true;
  }

  bool step(std::size_t i) {
    if (capped()) return false;
    if (i == cells_.size()) {
      emit();
      return true;
    }
    const auto [x, y] = cells_[i];
    const Element bound = lat_.meet[x * n_ + y];
    for (Element v = 0; v < n_; ++v) {
      if (!leq(v, bound)) continue;
      set(x, y, v);
      if (monotone_at(x, y) && consistent() && !step(i + 1)) {
        set(x, y, unset());
        return false;
      }
    }
    set(x, y, unset());
    return true;
  }

  void emit() {
    auto [code, perm] = canonical_code(lat_.join, &t_, n_);
    if (!seen_.insert(code).second) return;
    AlgebraTables t = tables_of(n_, permute(lat_.join, perm), permute(t_, perm));
    try {
      out_.push_back(Algebra::from_tables(std::move(t)));
    } catch (const ValidationError& e) {
      throw InternalInconsistency(std::string("generated product is not residuated: ") + e.what());
    }
  }

  const AlgebraTables& lat_;
  std::size_t n_;
  const EnumerateOptions& options_;
  std::chrono::steady_clock::time_point start_;
  std::set<Code>& seen_;
  std::vector<Algebra>& out_;
  std::vector<bool> leq_;
  Table t_;
  std::vector<std::pair<Element, Element>> cells_;
};

void check_size(std::size_t n) {
  if (n < 2 || n > max_enumeration_size)
    throw PreconditionError("enumeration size must be between 2 and " +
                            std::to_string(max_enumeration_size));
}

}  // namespace

std::vector<AlgebraTables> enumerate_lattices(std::size_t n) {
  check_size(n);
  const std::size_t m = n - 2;
  // Middle elements 1..m; by taking a linear extension as the labelling,
  // only pairs i < j can be related, and only as i below j.
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 1; i <= m; ++i)
    for (Element j = i + 1; j <= m; ++j) pairs.emplace_back(i, j);

  std::set<Code> seen;
  std::vector<std::pair<Code, AlgebraTables>> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<bool> le(n * n, false);
    for (Element x = 0; x < n; ++x) {
      le[x * n + x] = true;
      le[0 * n + x] = true;
      le[x * n + (n - 1)] = true;
    }
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1u) le[pairs[k].first * n + pairs[k].second] = true;
    bool transitive = true;
    for (Element a = 0; a < n && transitive; ++a)
      for (Element b = 0; b < n && transitive; ++b)
        for (Element c = 0; c < n; ++c)
          if (le[a * n + b] && le[b * n + c] && !le[a * n + c]) { transitive = false; break; }
    if (!transitive) continue;

    Table join(n * n);
    bool lattice = true;
    for (Element x = 0; x < n && lattice; ++x)
      for (Element y = 0; y < n; ++y) {
        std::optional<Element> lub;
        for (Element z = 0; z < n; ++z) {
          if (!le[x * n + z] || !le[y * n + z]) continue;
          bool least = true;
          for (Element w = 0; w < n; ++w)
            if (le[x * n + w] && le[y * n + w] && !le[z * n + w]) { least = false; break; }
          if (least) { lub = z; break; }
        }
        if (!lub) { lattice = false; break; }
        join[x * n + y] = *lub;
      }
    if (!lattice) continue;

    auto [code, perm] = canonical_code(join, nullptr, n);
    if (!seen.insert(code).second) continue;
    Table canon = permute(join, perm);
    AlgebraTables t = tables_of(n, canon, Table(n * n, 0));
    found.emplace_back(std::move(code), std::move(t));
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<AlgebraTables> out;
  for (auto& [code, t] : found) out.push_back(std::move(t));
  return out;
}

Enumeration enumerate_algebras(std::size_t n, const EnumerateOptions& options) {
  check_size(n);
  const auto start = std::chrono::steady_clock::now();
  Enumeration result;
  std::set<Code> seen;
  for (const auto& lattice : enumerate_lattices(n)) {
    ProdSearch search(lattice, options, start, seen, result.algebras);
    if (!search.run()) {
      result.complete = false;
      break;
    }
  }
  std::vector<std::pair<Code, std::size_t>> order;
  for (std::size_t i = 0; i < result.algebras.size(); ++i) {
    const auto t = result.algebras[i].tables();
    order.emplace_back(encode({&t.join, &t.prod}), i);
  }
  std::sort(order.begin(), order.end());
  std::vector<Algebra> sorted;
  for (const auto& [code, i] : order) sorted.push_back(result.algebras[i]);
  result.algebras = std::move(sorted);
  return result;
}

Algebra canonical_form(const Algebra& alg) {
  const auto t = alg.tables();
  auto [code, perm] = canonical_code(t.join, &t.prod, alg.size());
  return Algebra::from_tables(
      tables_of(alg.size(), permute(t.join, perm), permute(t.prod, perm)));
}

bool isomorphic(const Algebra& a, const Algebra& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::string canonical_encoding(const Algebra& alg) {
  return emit_rlat(canonical_form(alg), RlatLayout::single_line);
}

CensusRecord census_record(const Algebra& alg, const TheoremReport& report) {
  CensusRecord r;
  r.size = alg.size();
  r.encoding = canonical_encoding(alg);
  r.filters = all_filters(alg).size();
  r.primes = spec(alg).size();
  r.maximal = max_filters(alg).size();
  r.minimal = min_primes(alg).size();
  r.mtl = is_mtl(alg);
  r.star = star_check(alg);
  r.bigstar = bigstar_check(alg);
  r.pm = is_pm(alg);
  r.checks_passed = report.passed();
  r.checks_failed = report.failed();
  for (const auto& c : report.checks)
    if (!c.pass) r.failed_ids.push_back(c.id);
  return r;
}

nlohmann::ordered_json to_json(const CensusRecord& r) {
  nlohmann::ordered_json j;
  j["schema"] = "rlat/1";
  j["size"] = r.size;
  j["encoding"] = r.encoding;
  j["counts"] = {{"filters", r.filters}, {"primes", r.primes}, {"maximal", r.maximal},
                 {"minimal", r.minimal}};
  j["flags"] = {{"mtl", r.mtl}, {"star", r.star}, {"bigstar", r.bigstar}, {"pm", r.pm}};
  j["checks"] = {{"passed", r.checks_passed}, {"failed", r.checks_failed},
                 {"failed_ids", r.failed_ids}};
  return j;
}

CensusSummary run_census(std::size_t max_n, const CensusOptions& options,
                         const std::function<void(const CensusRecord&)>& sink) {
  check_size(max_n);
  CensusSummary summary;
  summary.counts_by_size.assign(max_n + 1, 0);
  for (std::size_t n = 2; n <= max_n; ++n) {
    const auto e = enumerate_algebras(n, options.enumerate);
    summary.complete = summary.complete && e.complete;
    summary.counts_by_size[n] = e.algebras.size();
    for (const auto& alg : e.algebras) {
      const auto rec = census_record(alg, run_suite(alg, options.suite));
      ++summary.records;
      if (rec.checks_failed) ++summary.with_failures;
      if (sink) sink(rec);
    }
  }
  return summary;
}

}  // namespace rlat
