#include "rlat/cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "rlat/census.hpp"
#include "rlat/io.hpp"

namespace rlat::cli {

namespace {

int code(ExitCode c) { return static_cast<int>(c); }

std::string yes(bool b) { return b ? "true" : "false"; }

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto tables = parse_rlat(read_file(path));
  auto without_arrow = tables;
  without_arrow.res.reset();
  const auto report = validate_algebra(without_arrow);
  if (!report.ok()) {
    for (const auto& v : report.violations) {
      err << "violation: " << v.law;
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        err << (i ? ", " : " at ") << tables.names[v.witness[i]];
      err << '\n';
    }
    return code(ExitCode::validation_failure);
  }
  const auto alg = Algebra::from_tables(tables);
  out << "ok: " << alg.size() << " elements" << (is_mtl(alg) ? ", MTL" : "") << '\n';
  return 0;
}

int cmd_filters(const Algebra& alg, bool json, std::ostream& out) {
  if (json) {
    print_json(out, filters_json(alg));
    return 0;
  }
  for (const auto& f : all_filters(alg)) out << format_set(alg, f.elems) << '\n';
  return 0;
}

void print_collection(std::ostream& out, const Algebra& alg, const char* label,
                      const PrimeCollection& pi) {
  out << label << ':';
  for (const auto& f : pi) out << ' ' << format_set(alg, f.elems);
  out << '\n';
}

int cmd_spectrum(const Algebra& alg, bool json, std::ostream& out) {
  if (json) {
    print_json(out, spectrum_json(alg));
    return 0;
  }
  const auto sp = spec(alg);
  print_collection(out, alg, "spec", sp);
  print_collection(out, alg, "max", max_filters(alg));
  print_collection(out, alg, "min", min_primes(alg));
  const Filter one{ElementSet::singleton(alg.top())};
  for (const auto& p : sp)
    out << "D(" << format_set(alg, p.elems) << ") = " << format_set(alg, d_set(alg, one, p)) << '\n';
  for (Element x = 0; x < alg.size(); ++x)
    out << alg.name(x) << "^perp = " << format_set(alg, perp(alg, ElementSet::singleton(x))) << '\n';
  return 0;
}

int cmd_topology(const Algebra& alg, const std::string& collection, bool dual, bool json,
                 std::ostream& out) {
  const auto space = make_space(alg, parse_collection(alg, collection));
  const Which which = dual ? Which::dual : Which::hull_kernel;
  const Json j = topology_json(alg, space, which);
  if (json) {
    print_json(out, j);
    return 0;
  }
  const auto& t = dual ? space.dual : space.hk;
  auto pts = [&](PointSet p) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i : p) {
      s += first ? "" : ", ";
      first = false;
      s += format_set(alg, space.collection[i].elems);
    }
    return s + "}";
  };
  out << "collection: " << describe(alg, space.collection) << '\n';
  out << "topology: " << (dual ? "dual" : "hull-kernel") << '\n';
  out << "basis:\n";
  for (const auto& b : t.basis())
    out << "  " << (b.tag == BasisTag::d ? "d(" : "h(") << alg.name(b.x) << ") = " << pts(b.set)
        << '\n';
  out << "opens:\n";
  for (PointSet o : t.opens()) out << "  " << pts(o) << '\n';
  for (const char* group : {"separation", "compactness", "connectedness"})
    for (const auto& [k, v] : j[group].items()) out << k << '=' << yes(v.get<bool>()) << '\n';
  return 0;
}

int cmd_theorems(const Algebra& alg, bool json, std::ostream& out) {
  SuiteOptions options;
  options.seed = sampling_seed();
  const auto report = run_suite(alg, options);
  if (json) {
    print_json(out, theorems_json(report));
  } else {
    for (const auto& c : report.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.id;
      if (!c.pass) out << "  [" << c.witness << ']';
      out << '\n';
    }
    out << report.passed() << '/' << report.checks.size() << " checks passed\n";
  }
  return report.ok() ? 0 : code(ExitCode::internal_inconsistency);
}

int cmd_search(std::size_t size, const std::string& census_out, std::size_t max_count,
               long time_limit_ms, std::ostream& out, std::ostream& err) {
  EnumerateOptions eo;
  eo.max_count = max_count;
  eo.time_limit = std::chrono::milliseconds(time_limit_ms);
  if (census_out.empty()) {
    const auto e = enumerate_algebras(size, eo);
    for (const auto& alg : e.algebras) out << canonical_encoding(alg) << '\n';
    out << e.algebras.size() << " algebras of size " << size << '\n';
    if (!e.complete) {
      err << "search stopped at a cap; the list is partial\n";
      return code(ExitCode::cap_exceeded);
    }
    return 0;
  }
  std::ofstream file(census_out, std::ios::binary);
  if (!file) throw ValidationError("cannot write " + census_out);
  CensusOptions co;
  co.enumerate = eo;
  co.suite.seed = sampling_seed();
  const auto summary = run_census(size, co, [&](const CensusRecord& r) {
    file << to_json(r).dump() << '\n';
    file.flush();
  });
  for (std::size_t n = 2; n < summary.counts_by_size.size(); ++n)
    out << "size " << n << ": " << summary.counts_by_size[n] << '\n';
  out << summary.records << " records, " << summary.with_failures << " with failing checks\n";
  if (!summary.complete) {
    err << "census stopped at a cap; records are partial\n";
    return code(ExitCode::cap_exceeded);
  }
  return summary.with_failures ? code(ExitCode::internal_inconsistency) : 0;
}

int cmd_export(const Algebra& alg, const std::string& dot, bool rlat, std::ostream& out) {
  if (rlat) {
    out << emit_rlat(alg, RlatLayout::multi_line, true);
    return 0;
  }
  if (dot == "hasse") {
    out << hasse_dot(alg);
  } else if (dot == "spec") {
    out << collection_dot(alg, spec(alg));
  } else {
    throw ValidationError("--dot must be hasse or spec");
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite residuated lattices: filters, spectra and hull-kernel topologies", "rlat"};
  app.require_subcommand(1);

  std::string file, collection = "spec", census_out, dot;
  bool json = false, dual = false, rlat_out = false;
  std::size_t size = 0, max_count = 100'000;
  long time_limit_ms = 0;

  auto* validate = app.add_subcommand("validate", "check the residuated-lattice axioms");
  validate->add_option("file", file, ".rlat file")->required();

  auto* filters = app.add_subcommand("filters", "list all filters");
  filters->add_option("file", file)->required();
  filters->add_flag("--json", json);

  auto* spectrum = app.add_subcommand("spectrum", "prime, maximal and minimal prime filters");
  spectrum->add_option("file", file)->required();
  spectrum->add_flag("--json", json);

  auto* topology = app.add_subcommand("topology", "hull-kernel or dual topology of a collection");
  topology->add_option("file", file)->required();
  topology->add_option("--collection", collection, "spec|max|min|minover:<elems>|list:<filters>");
  topology->add_flag("--dual", dual);
  topology->add_flag("--json", json);

  auto* theorems = app.add_subcommand("theorems", "run the check catalog");
  theorems->add_option("file", file)->required();
  theorems->add_flag("--json", json);

  auto* search = app.add_subcommand("search", "enumerate algebras up to isomorphism");
  search->add_option("--size", size, "carrier size")->required()->check(
      CLI::Range(std::size_t{2}, max_enumeration_size));
  search->add_option("--census-out", census_out, "write JSON-lines census of sizes 2..N");
  search->add_option("--max-count", max_count, "stop after this many algebras per size");
  search->add_option("--time-limit-ms", time_limit_ms, "stop after this many milliseconds");

  auto* exporter = app.add_subcommand("export", "DOT or .rlat output");
  exporter->add_option("file", file)->required();
  auto* dot_opt = exporter->add_option("--dot", dot, "hasse|spec");
  auto* rlat_opt = exporter->add_flag("--rlat", rlat_out);
  dot_opt->excludes(rlat_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return code(ExitCode::parse_error);
  }

  try {
    if (*validate) return cmd_validate(file, out, err);
    if (*search) return cmd_search(size, census_out, max_count, time_limit_ms, out, err);
    const Algebra alg = load_algebra(read_file(file));
    if (*filters) return cmd_filters(alg, json, out);
    if (*spectrum) return cmd_spectrum(alg, json, out);
    if (*topology) return cmd_topology(alg, collection, dual, json, out);
    if (*theorems) return cmd_theorems(alg, json, out);
    if (*exporter) {
      if (dot.empty() && !rlat_out) throw ValidationError("export needs --dot or --rlat");
      return cmd_export(alg, dot, rlat_out, out);
    }
  } catch (const ValidationFailed& e) {
    for (const auto& v : e.report().violations) err << "violation: " << v.law << '\n';
    return code(e.exit_code());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return code(e.exit_code());
  }
  return 0;
}

}  // namespace rlat::cli
