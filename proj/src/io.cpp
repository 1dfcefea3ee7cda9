#include "rlat/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace rlat {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') { ++line; ++i; continue; }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '#')
      ++j;
    out.push_back({std::string(text.substr(i, j - i)), line});
    i = j;
  }
  return out;
}

class Reader {
public:
  explicit Reader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  std::size_t line() const {
    if (tokens_.empty()) return 1;
    return done() ? tokens_.back().line : tokens_[pos_].line;
  }
  const Token& next(const char* expecting) {
    if (done()) throw ParseError(line(), std::string("unexpected end of input, expected ") + expecting);
    return tokens_[pos_++];
  }

private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraTables parse_rlat(std::string_view text) {
  Reader r(tokenize(text));
  std::optional<std::size_t> size;
  std::vector<std::string> names;
  std::map<std::string, Element> index;
  std::optional<std::string> bottom, top;
  std::map<std::string, Table> tables;

  auto lookup = [&](const Token& t) {
    auto it = index.find(t.text);
    if (it == index.end()) throw ParseError(t.line, "undeclared element '" + t.text + "'");
    return it->second;
  };

  while (!r.done()) {
    const Token& kw = r.next("a section keyword");
    if (kw.text == "size") {
      if (size) throw ParseError(kw.line, "duplicate size");
      const Token& v = r.next("a size");
      std::size_t pos = 0;
      unsigned long n = 0;
      try {
        n = std::stoul(v.text, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != v.text.size() || v.text.empty() || v.text[0] == '-')
        throw ParseError(v.line, "size must be a positive integer, got '" + v.text + "'");
      if (n == 0) throw ParseError(v.line, "size must be positive");
      if (n > max_algebra_size)
        throw CapExceeded("size " + std::to_string(n) + " exceeds " +
                          std::to_string(max_algebra_size));
      size = n;
    } else if (kw.text == "elements") {
      if (!size) throw ParseError(kw.line, "elements before size");
      if (!names.empty()) throw ParseError(kw.line, "duplicate elements");
      for (std::size_t i = 0; i < *size; ++i) {
        const Token& t = r.next("an element name");
        if (!index.emplace(t.text, i).second)
          throw ParseError(t.line, "duplicate element '" + t.text + "'");
        names.push_back(t.text);
      }
    } else if (kw.text == "bottom" || kw.text == "top") {
      const Token& t = r.next("an element name");
      if (names.empty()) throw ParseError(kw.line, kw.text + " before elements");
      lookup(t);
      auto& slot = kw.text == "bottom" ? bottom : top;
      if (slot) throw ParseError(kw.line, "duplicate " + kw.text);
      slot = t.text;
    } else if (kw.text == "table") {
      const Token& which = r.next("a table name");
      if (which.text != "join" && which.text != "meet" && which.text != "odot" &&
          which.text != "arrow")
        throw ParseError(which.line, "unknown table '" + which.text + "'");
      if (names.empty()) throw ParseError(which.line, "table before elements");
      if (tables.count(which.text)) throw ParseError(which.line, "duplicate table " + which.text);
      const std::size_t n = names.size();
      Table t;
      t.reserve(n * n);
      for (std::size_t k = 0; k < n * n; ++k) t.push_back(lookup(r.next("a table entry")));
      tables.emplace(which.text, std::move(t));
    } else {
      throw ParseError(kw.line, "unknown keyword '" + kw.text + "'");
    }
  }

  const std::size_t end = r.line();
  if (!size) throw ParseError(end, "missing size");
  if (names.empty()) throw ParseError(end, "missing elements");
  if (!bottom) throw ParseError(end, "missing bottom");
  if (!top) throw ParseError(end, "missing top");
  for (const char* t : {"join", "meet", "odot"})
    if (!tables.count(t)) throw ParseError(end, std::string("missing table ") + t);

  AlgebraTables out;
  out.names = std::move(names);
  out.bottom = index.at(*bottom);
  out.top = index.at(*top);
  out.join = std::move(tables.at("join"));
  out.meet = std::move(tables.at("meet"));
  out.prod = std::move(tables.at("odot"));
  if (auto it = tables.find("arrow"); it != tables.end()) out.res = std::move(it->second);
  return out;
}

Algebra load_algebra(std::string_view text) { return Algebra::from_tables(parse_rlat(text)); }

Algebra load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_algebra(ss.str());
}

std::string emit_rlat(const Algebra& alg, RlatLayout layout, bool with_arrow) {
  const std::size_t n = alg.size();
  const bool multi = layout == RlatLayout::multi_line;
  const char* sep = multi ? "\n" : " ";
  std::ostringstream os;
  os << "size " << n << sep << "elements";
  for (const auto& name : alg.names()) os << ' ' << name;
  os << sep << "bottom " << alg.name(alg.bottom()) << sep << "top " << alg.name(alg.top());
  auto table = [&](const char* label, auto op) {
    os << sep << "table " << label;
    for (Element x = 0; x < n; ++x) {
      os << (multi ? "\n " : "");
      for (Element y = 0; y < n; ++y) os << ' ' << alg.name(op(x, y));
    }
  };
  table("join", [&](Element x, Element y) { return alg.join(x, y); });
  table("meet", [&](Element x, Element y) { return alg.meet(x, y); });
  table("odot", [&](Element x, Element y) { return alg.prod(x, y); });
  if (with_arrow) table("arrow", [&](Element x, Element y) { return alg.res(x, y); });
  if (multi) os << '\n';
  return os.str();
}

Json set_json(const Algebra& alg, ElementSet s) {
  Json arr = Json::array();
  for (Element x : s) arr.push_back(alg.name(x));
  return arr;
}

Json algebra_json(const Algebra& alg) {
  Json j;
  j["size"] = alg.size();
  j["elements"] = alg.names();
  j["mtl"] = is_mtl(alg);
  return j;
}

Json envelope(std::string_view command, const Algebra& alg) {
  Json j;
  j["schema"] = schema_version;
  j["command"] = command;
  j["algebra"] = algebra_json(alg);
  return j;
}

namespace {

Json collection_json(const Algebra& alg, const PrimeCollection& pi) {
  Json arr = Json::array();
  for (const auto& f : pi) arr.push_back(set_json(alg, f.elems));
  return arr;
}

Json points_json(const Algebra& alg, const PrimeCollection& pi, PointSet pts) {
  Json arr = Json::array();
  for (std::size_t i : pts) arr.push_back(set_json(alg, pi[i].elems));
  return arr;
}

}  // namespace

Json filters_json(const Algebra& alg) {
  Json j = envelope("filters", alg);
  Json arr = Json::array();
  for (const auto& f : all_filters(alg)) arr.push_back(set_json(alg, f.elems));
  j["filters"] = std::move(arr);
  return j;
}

Json spectrum_json(const Algebra& alg) {
  Json j = envelope("spectrum", alg);
  const auto sp = spec(alg);
  j["spec"] = collection_json(alg, sp);
  j["max"] = collection_json(alg, max_filters(alg));
  j["min"] = collection_json(alg, min_primes(alg));
  const Filter one{ElementSet::singleton(alg.top())};
  Json d = Json::array();
  for (const auto& p : sp)
    d.push_back({{"prime", set_json(alg, p.elems)}, {"d", set_json(alg, d_set(alg, one, p))}});
  j["d_sets"] = std::move(d);
  Json perps = Json::object();
  for (Element x = 0; x < alg.size(); ++x)
    perps[alg.name(x)] = set_json(alg, perp(alg, ElementSet::singleton(x)));
  j["perp"] = std::move(perps);
  return j;
}

Json topology_json(const Algebra& alg, const HullKernelSpace& space, Which which) {
  Json j = envelope("topology", alg);
  const auto& pi = space.collection;
  const auto& t = which == Which::hull_kernel ? space.hk : space.dual;
  j["collection"] = describe(alg, pi);
  j["topology"] = which == Which::hull_kernel ? "hull-kernel" : "dual";
  j["points"] = collection_json(alg, pi);
  Json basis = Json::array();
  for (const auto& b : t.basis())
    basis.push_back({{"kind", b.tag == BasisTag::d ? "d" : "h"},
                     {"element", alg.name(b.x)},
                     {"set", points_json(alg, pi, b.set)}});
  j["basis"] = std::move(basis);
  Json opens = Json::array();
  for (PointSet o : t.opens()) opens.push_back(points_json(alg, pi, o));
  j["opens"] = std::move(opens);
  const auto sep = separation(alg, space, which);
  j["separation"] = {{"t0", sep.t0},
                     {"t1", sep.t1},
                     {"hausdorff", sep.hausdorff},
                     {"normal", sep.normal},
                     {"t4", sep.t4}};
  const auto comp = compactness(alg, space);
  j["compactness"] = {{"compact", which == Which::hull_kernel ? comp.compact_h : comp.compact_d},
                      {"full", comp.full}};
  const auto conn = connectedness(t);
  j["connectedness"] = {{"zero_dimensional", conn.zero_dimensional},
                        {"totally_disconnected", conn.totally_disconnected},
                        {"extremally_disconnected", conn.extremally_disconnected},
                        {"stonean", conn.stonean}};
  return j;
}

Json theorems_json(const TheoremReport& report) {
  Json j;
  j["schema"] = schema_version;
  j["command"] = "theorems";
  if (!report.algebra_id.empty()) j["algebra_id"] = report.algebra_id;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["pass"] = c.pass;
    if (!c.pass) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"total", report.checks.size()},
                  {"passed", report.passed()},
                  {"failed", report.failed()}};
  return j;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Covering pairs (lo, hi) of a strict order given by `below(i, j)`.
template <class Below>
std::vector<std::pair<std::size_t, std::size_t>> covers(std::size_t m, Below below) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!below(i, j)) continue;
      bool covering = true;
      for (std::size_t k = 0; k < m && covering; ++k)
        if (below(i, k) && below(k, j)) covering = false;
      if (covering) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace

std::string hasse_dot(const Algebra& alg) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < alg.size(); ++x) os << "  " << quote(alg.name(x)) << ";\n";
  for (auto [lo, hi] : covers(alg.size(), [&](std::size_t i, std::size_t j) {
         return i != j && alg.leq(i, j);
       }))
    os << "  " << quote(alg.name(lo)) << " -> " << quote(alg.name(hi)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string collection_dot(const Algebra& alg, const PrimeCollection& pi) {
  std::ostringstream os;
  os << "digraph spectrum {\n  rankdir=BT;\n  node [shape=box];\n";
  std::vector<std::string> labels;
  for (const auto& f : pi) labels.push_back(quote(format_set(alg, f.elems)));
  for (const auto& l : labels) os << "  " << l << ";\n";
  for (auto [lo, hi] : covers(pi.size(), [&](std::size_t i, std::size_t j) {
         return i != j && pi[i].subset_of(pi[j]);
       }))
    os << "  " << labels[lo] << " -> " << labels[hi] << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

ElementSet parse_names(const Algebra& alg, std::string_view list) {
  ElementSet s;
  std::size_t i = 0;
  while (i <= list.size()) {
    std::size_t j = list.find(',', i);
    if (j == std::string_view::npos) j = list.size();
    const std::string name(list.substr(i, j - i));
    if (!name.empty()) {
      auto e = alg.find(name);
      if (!e) throw ValidationError("unknown element '" + name + "'");
      s.insert(*e);
    }
    i = j + 1;
  }
  return s;
}

}  // namespace

PrimeCollection parse_collection(const Algebra& alg, std::string_view arg) {
  if (arg == "spec") return spec(alg);
  if (arg == "max") return max_filters(alg);
  if (arg == "min") return min_primes(alg);
  if (arg.rfind("minover:", 0) == 0) return min_primes_over(alg, parse_names(alg, arg.substr(8)));
  if (arg.rfind("list:", 0) == 0) {
    std::vector<Filter> members;
    std::string_view rest = arg.substr(5);
    std::size_t i = 0;
    while (i <= rest.size()) {
      std::size_t j = rest.find(';', i);
      if (j == std::string_view::npos) j = rest.size();
      const auto part = rest.substr(i, j - i);
      if (!part.empty()) members.push_back(Filter{parse_names(alg, part)});
      i = j + 1;
    }
    return PrimeCollection::custom(alg, std::move(members));
  }
  throw ValidationError("unknown collection '" + std::string(arg) + "'");
}

}  // namespace rlat
