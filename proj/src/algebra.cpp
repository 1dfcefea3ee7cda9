#include "rlat/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rlat {

namespace {

class TableView {
public:
  TableView(const Table& t, std::size_t n) : t_(t), n_(n) {}
  Element operator()(Element x, Element y) const { return t_[x * n_ + y]; }

private:
  const Table& t_;
  std::size_t n_;
};

void check_shape(const AlgebraTables& c) {
  const std::size_t n = c.size();
  if (n == 0) throw ValidationError("algebra has no elements");
  if (n > max_algebra_size)
    throw CapExceeded("algebra size " + std::to_string(n) + " exceeds " +
                      std::to_string(max_algebra_size));
  auto check = [&](const Table& t, const char* label) {
    if (t.size() != n * n)
      throw ValidationError(std::string("table ") + label + " is not " + std::to_string(n) + "x" +
                            std::to_string(n));
    for (Element v : t)
      if (v >= n)
        throw TableOutOfRange(std::string("table ") + label + " has entry " + std::to_string(v) +
                              " >= " + std::to_string(n));
  };
  check(c.join, "join");
  check(c.meet, "meet");
  check(c.prod, "odot");
  if (c.res) check(*c.res, "arrow");
  if (c.bottom >= n || c.top >= n) throw TableOutOfRange("bottom/top index out of range");
}

std::optional<Element> greatest_in(const TableView& meet, ElementSet s) {
  for (Element m : s) {
    bool is_max = true;
    for (Element c : s)
      if (meet(c, m) != c) { is_max = false; break; }
    if (is_max) return m;
  }
  return std::nullopt;
}

// Shared by validate_algebra and residual_from_prod; returns the first
// (x, y) with no greatest residual candidate.
std::optional<std::pair<Element, Element>> derive_residual(const AlgebraTables& t, Table& out) {
  const std::size_t n = t.size();
  TableView meet(t.meet, n), prod(t.prod, n);
  out.assign(n * n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      ElementSet cand;
      for (Element z = 0; z < n; ++z)
        if (meet(prod(x, z), y) == prod(x, z)) cand.insert(z);
      auto m = greatest_in(meet, cand);
      if (!m) return std::pair{x, y};
      out[x * n + y] = *m;
    }
  return std::nullopt;
}

}  // namespace

ValidationReport validate_algebra(const AlgebraTables& c) {
  check_shape(c);
  const std::size_t n = c.size();
  ValidationReport report;
  auto fail = [&](const char* law, std::vector<Element> w) {
    report.violations.push_back({law, std::move(w)});
  };

  {
    std::set<std::string> seen(c.names.begin(), c.names.end());
    if (seen.size() != n) fail("names.distinct", {});
  }

  TableView join(c.join, n), meet(c.meet, n), prod(c.prod, n);
  auto le = [&](Element x, Element y) { return meet(x, y) == x; };

  for (Element x = 0; x < n; ++x) {
    if (join(x, x) != x) fail("join.idempotent", {x});
    if (meet(x, x) != x) fail("meet.idempotent", {x});
    if (meet(c.bottom, x) != c.bottom) fail("bottom.least", {x});
    if (join(c.top, x) != c.top) fail("top.greatest", {x});
    if (prod(c.top, x) != x) fail("prod.identity", {x});
    for (Element y = 0; y < n; ++y) {
      if (join(x, y) != join(y, x)) fail("join.commutative", {x, y});
      if (meet(x, y) != meet(y, x)) fail("meet.commutative", {x, y});
      if (prod(x, y) != prod(y, x)) fail("prod.commutative", {x, y});
      if (join(x, meet(x, y)) != x) fail("absorption.join_meet", {x, y});
      if (meet(x, join(x, y)) != x) fail("absorption.meet_join", {x, y});
      if ((join(x, y) == y) != le(x, y)) fail("join.consistent_with_meet", {x, y});
      for (Element z = 0; z < n; ++z) {
        if (join(join(x, y), z) != join(x, join(y, z))) fail("join.associative", {x, y, z});
        if (meet(meet(x, y), z) != meet(x, meet(y, z))) fail("meet.associative", {x, y, z});
        if (prod(prod(x, y), z) != prod(x, prod(y, z))) fail("prod.associative", {x, y, z});
      }
    }
  }

  Table derived;
  const Table* res = nullptr;
  if (c.res) {
    res = &*c.res;
  } else if (auto bad = derive_residual(c, derived)) {
    fail("residuated", {bad->first, bad->second});
  } else {
    res = &derived;
  }
  if (res) {
    TableView arrow(*res, n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (le(prod(x, y), z) != le(x, arrow(y, z))) fail("adjointness", {x, y, z});
  }
  return report;
}

Table residual_from_prod(const AlgebraTables& tables) {
  check_shape(tables);
  Table out;
  if (auto bad = derive_residual(tables, out)) {
    const auto& nm = tables.names;
    throw NotResiduated(bad->first, bad->second,
                        "no greatest z with " + nm[bad->first] + "*z <= " + nm[bad->second]);
  }
  return out;
}

namespace {
std::string describe(const ValidationReport& r) {
  std::string s = "validation failed:";
  for (std::size_t i = 0; i < r.violations.size() && i < 8; ++i) s += " " + r.violations[i].law;
  if (r.violations.size() > 8) s += " ...";
  return s;
}
}  // namespace

ValidationFailed::ValidationFailed(ValidationReport report)
    : ValidationError(describe(report)), report_(std::move(report)) {}

Algebra Algebra::from_tables(AlgebraTables t) {
  std::optional<Table> supplied = std::move(t.res);
  t.res.reset();
  auto report = validate_algebra(t);
  if (!report.ok()) throw ValidationFailed(std::move(report));
  const std::size_t n = t.size();
  if (n > 1 && t.bottom == t.top) throw ValidationFailed(ValidationReport{{Violation{"bounds.distinct", {}}}});

  Table res = residual_from_prod(t);
  if (supplied) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if ((*supplied)[x * n + y] != res[x * n + y])
          throw ArrowMismatch(x, y,
                              "arrow(" + t.names[x] + "," + t.names[y] + ") is " +
                                  t.names[(*supplied)[x * n + y]] + ", residuum gives " +
                                  t.names[res[x * n + y]]);
  }

  // order[new] = old
  std::vector<Element> order;
  order.push_back(t.bottom);
  for (Element x = 0; x < n; ++x)
    if (x != t.bottom && x != t.top) order.push_back(x);
  if (n > 1) order.push_back(t.top);
  std::vector<Element> rank(n);
  for (Element i = 0; i < n; ++i) rank[order[i]] = i;

  Algebra a;
  a.n_ = n;
  for (Element i = 0; i < n; ++i) a.names_.push_back(t.names[order[i]]);
  auto remap = [&](const Table& src) {
    Table dst(n * n);
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j) dst[i * n + j] = rank[src[order[i] * n + order[j]]];
    return dst;
  };
  a.join_ = remap(t.join);
  a.meet_ = remap(t.meet);
  a.prod_ = remap(t.prod);
  a.res_ = remap(res);
  a.up_.assign(n, {});
  a.down_.assign(n, {});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (a.meet(x, y) == x) {
        a.up_[x].insert(y);
        a.down_[y].insert(x);
      }
  return a;
}

std::optional<Element> Algebra::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

AlgebraTables Algebra::tables() const {
  AlgebraTables t;
  t.names = names_;
  t.bottom = bottom();
  t.top = top();
  t.join = join_;
  t.meet = meet_;
  t.prod = prod_;
  t.res = res_;
  return t;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.push_back("0");
  for (std::size_t i = 1; i + 1 < n; ++i)
    names.push_back(i <= 26 ? std::string(1, static_cast<char>('a' + i - 1))
                            : "e" + std::to_string(i));
  if (n > 1) names.push_back("1");
  return names;
}

bool leq(const Algebra& alg, Element x, Element y) { return alg.leq(x, y); }

bool is_mtl(const Algebra& alg) {
  for (Element x = 0; x < alg.size(); ++x)
    for (Element y = 0; y < alg.size(); ++y)
      if (alg.join(alg.res(x, y), alg.res(y, x)) != alg.top()) return false;
  return true;
}

Element negation(const Algebra& alg, Element x) { return alg.res(x, alg.bottom()); }

std::pair<bool, bool> check_prod_distrib(const AlgebraTables& t) {
  const std::size_t n = t.size();
  TableView join(t.join, n), meet(t.meet, n), prod(t.prod, n);
  bool r1 = true, r2 = true;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        if (prod(x, join(y, z)) != join(prod(x, y), prod(x, z))) r1 = false;
        Element lhs = join(x, prod(y, z));
        Element rhs = prod(join(x, y), join(x, z));
        if (meet(rhs, lhs) != rhs) r2 = false;
      }
  return {r1, r2};
}

std::pair<bool, bool> check_prod_distrib(const Algebra& alg) {
  return check_prod_distrib(alg.tables());
}

Element join_all(const Algebra& alg, ElementSet s) {
  Element acc = alg.bottom();
  for (Element x : s) acc = alg.join(acc, x);
  return acc;
}

Element prod_all(const Algebra& alg, ElementSet s) {
  Element acc = alg.top();
  for (Element x : s) acc = alg.prod(acc, x);
  return acc;
}

std::string format_set(const Algebra& alg, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ", ";
    out += alg.name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace rlat
