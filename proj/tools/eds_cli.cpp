// SPDX-License-Identifier: Apache-2.0
//
// eds: command-line front end. Exit status: 0 ok, 1 usage or parse error,
// 2 verification mismatch (including an empty class), 3 computational cap.
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eds/apparition.hpp"
#include "eds/cache_store.hpp"
#include "eds/curve_file.hpp"
#include "eds/density.hpp"
#include "eds/error.hpp"
#include "eds/gcd_classes.hpp"
#include "eds/reference_tables.hpp"
#include "eds/report_io.hpp"

#ifndef EDS_DATA_DIR
#define EDS_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace eds;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitCap = 3;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexCapExceeded:
    case ErrorKind::Overflow:
    case ErrorKind::ApparitionNotFound:
    case ErrorKind::AmbiguousOrder:
      return kExitCap;
    case ErrorKind::ClassEmpty:
    case ErrorKind::Integrity:
      return kExitMismatch;
    default:
      return kExitUsage;
  }
}

// Loads a curve and, when $EDS_CACHE_DIR is set, its persisted terms/ranks.
struct Session {
  LoadedCurve curve;
  std::optional<fs::path> cache_path;

  explicit Session(const fs::path& file) : curve(open_curve_file(file)) {
    for (const auto& w : curve.sequence->warnings()) std::cerr << "warning: " << w << '\n';
    cache_path = cache_path_from_env(curve.file.name);
    if (cache_path) load_cache(*cache_path, *curve.sequence, *curve.apparition);
  }
  void persist() const {
    if (cache_path) save_cache(*cache_path, *curve.sequence, *curve.apparition);
  }
  EdsSequence& seq() { return *curve.sequence; }
  ApparitionCache& app() { return *curve.apparition; }
};

std::string format_rel(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

int cmd_terms(const fs::path& file, u64 n, OutputFormat fmt) {
  Session s(file);
  Table t{{"n", "D_n"}, {}};
  const auto terms = s.seq().terms_upto(n);
  for (u64 i = 1; i <= n; ++i) t.rows.push_back({std::to_string(i), terms[i - 1].get_str()});
  write_table(std::cout, t, fmt);
  s.persist();
  return kExitOk;
}

int cmd_rank(const fs::path& file, u64 n, OutputFormat fmt) {
  Session s(file);
  Table t{{"n", "r_n", "l_n", "g_n", "note"}, {}};
  for (u64 i = 1; i <= n; ++i) {
    std::vector<std::string> row{std::to_string(i), "", "", "", ""};
    try {
      row[1] = std::to_string(s.app().rank(i));
      row[2] = std::to_string(s.app().l(i));
      row[3] = std::to_string(s.seq().g(i));
    } catch (const Error& e) {
      row[4] = to_string(e.kind());
    }
    t.rows.push_back(std::move(row));
  }
  write_table(std::cout, t, fmt);
  s.persist();
  return kExitOk;
}

int cmd_class(const fs::path& file, u64 k, u64 x, const std::string& method, OutputFormat fmt) {
  Session s(file);
  std::vector<u64> members;
  if (method == "structural") {
    members = class_members_structural(s.app(), k, x);
  } else if (method == "direct") {
    members = class_members_direct(s.seq(), k, x);
  } else {
    const auto direct = class_members_direct(s.seq(), k, x);
    std::vector<u64> structural;
    if (is_class_nonempty(s.app(), k)) structural = class_members_structural(s.app(), k, x);
    if (structural != direct) {
      std::cerr << "mismatch: structural has " << structural.size() << " members, direct has " << direct.size()
                << '\n';
      s.persist();
      return kExitMismatch;
    }
    members = direct;
  }
  Table t{{"n"}, {}};
  for (u64 m : members) t.rows.push_back({std::to_string(m)});
  write_table(std::cout, t, fmt);
  s.persist();
  return kExitOk;
}

int cmd_density(const fs::path& file, std::optional<u64> k, std::optional<u64> nterms, bool abs_sum, bool empirical,
                std::optional<u64> x, OutputFormat fmt) {
  Session s(file);
  DensityReport rep;
  if (empirical) {
    if (!x) throw CLI::ValidationError("--empirical needs --x");
    rep = empirical_density(s.app(), k.value_or(1), *x);
  } else if (abs_sum) {
    if (!nterms) throw CLI::ValidationError("--abs needs --nterms");
    rep = partial_abs_sum(s.app(), *nterms);
  } else {
    if (!k || !nterms) throw CLI::ValidationError("density needs --k and --nterms, --abs --nterms, or --empirical --x");
    rep = partial_density(s.app(), *k, *nterms);
  }
  write_report(std::cout, rep, fmt);
  s.persist();
  return kExitOk;
}

int cmd_anomalous(const fs::path& file, u64 xmax, OutputFormat fmt) {
  Session s(file);
  write_report(std::cout, anomalous_scan(s.seq(), xmax), fmt);
  return kExitOk;
}

int cmd_tables(const fs::path& data_dir, const std::string& which_name, OutputFormat fmt) {
  const auto which = parse_reference_table(which_name);
  if (!which) throw CLI::ValidationError("--which must be e1-abs, e1-k, e2-abs or e2-k");
  Session s(data_dir / (std::string(reference_table_curve(*which)) + ".curve"));
  const TableCheck check = check_reference_table(*which, s.app());
  Table t{{"n", "k", "computed", "expected", "rel_error", "status"}, {}};
  for (const auto& c : check.cells) {
    t.rows.push_back({std::to_string(c.cell.n), c.cell.k == 0 ? "" : std::to_string(c.cell.k), c.rendered,
                      std::string(c.cell.expected), format_rel(c.rel_error), c.match ? "match" : "MISMATCH"});
  }
  write_table(std::cout, t, fmt);
  s.persist();
  if (check.all_match()) return kExitOk;
  for (const auto& c : check.cells) {
    if (c.match) continue;
    std::cerr << "mismatch " << which_name << " n=" << c.cell.n;
    if (c.cell.k) std::cerr << " k=" << c.cell.k;
    std::cerr << ": computed " << c.rendered << ", expected " << c.cell.expected << " (rel " << format_rel(c.rel_error)
              << ")\n";
  }
  return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic divisibility sequences, ranks of apparition and gcd classes"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string curve;
  std::string data_dir = EDS_DATA_DIR;
  u64 n = 0, k = 0, x = 0, nterms = 0, xmax = 0;
  std::string method = "structural";
  std::string which;
  bool abs_sum = false, empirical = false;

  auto add_common = [&](CLI::App* sub, bool needs_curve) {
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    if (needs_curve) sub->add_option("--curve", curve, "curve file")->required()->check(CLI::ExistingFile);
  };

  auto* terms = app.add_subcommand("terms", "print D_1 .. D_N");
  add_common(terms, true);
  terms->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  auto* rank = app.add_subcommand("rank", "print r_n, l(n), g(n) for n <= N");
  add_common(rank, true);
  rank->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  auto* cls = app.add_subcommand("class", "members of A_k up to X");
  add_common(cls, true);
  cls->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  cls->add_option("--x", x)->required()->check(CLI::PositiveNumber);
  cls->add_option("--method", method)->check(CLI::IsMember({"structural", "direct", "both"}));

  auto* density = app.add_subcommand("density", "partial density sums or empirical density");
  add_common(density, true);
  auto* k_opt = density->add_option("--k", k)->check(CLI::PositiveNumber);
  auto* n_opt = density->add_option("--nterms", nterms)->check(CLI::PositiveNumber);
  auto* x_opt = density->add_option("--x", x)->check(CLI::PositiveNumber);
  density->add_flag("--abs", abs_sum, "sum |mu(d)| / l(d)");
  density->add_flag("--empirical", empirical, "count A_k up to --x");

  auto* anomalous = app.add_subcommand("anomalous", "anomalous prime census");
  add_common(anomalous, true);
  anomalous->add_option("--xmax", xmax)->required()->check(CLI::Range(u64{2}, u64{1} << 40));

  auto* tables = app.add_subcommand("tables", "recompute a reference table and diff it");
  add_common(tables, false);
  tables->add_option("--which", which)->required()->check(CLI::IsMember({"e1-abs", "e1-k", "e2-abs", "e2-k"}));
  tables->add_option("--data-dir", data_dir, "directory holding e1.curve and e2.curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const OutputFormat fmt = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  auto opt = [](CLI::Option* o, u64 v) { return o->count() ? std::optional<u64>(v) : std::nullopt; };
  try {
    if (*terms) return cmd_terms(curve, n, fmt);
    if (*rank) return cmd_rank(curve, n, fmt);
    if (*cls) return cmd_class(curve, k, x, method, fmt);
    if (*density) return cmd_density(curve, opt(k_opt, k), opt(n_opt, nterms), abs_sum, empirical, opt(x_opt, x), fmt);
    if (*anomalous) return cmd_anomalous(curve, xmax, fmt);
    if (*tables) return cmd_tables(data_dir, which, fmt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
