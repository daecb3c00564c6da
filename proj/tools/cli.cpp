#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "interlace/boros_moll.hpp"
#include "interlace/criterion.hpp"
#include "interlace/inequalities.hpp"
#include "interlace/parallel.hpp"
#include "interlace/recurrence_file.hpp"

namespace interlace::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

enum class Format { Json, Csv, Pretty };

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}, {"pretty", Format::Pretty}};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json rational_json(const Rational& r) { return {{"numerator", r.num().get_str()}, {"denominator", r.den().get_str()}}; }

json dyadic_json(const Rational& r) {
  const auto d = DyadicRational::from_rational(r);
  return {{"numerator", d.numerator().get_str()}, {"exp2", std::to_string(d.exp2())}};
}

json report_json(const CheckReport& r, bool required = true) {
  return {{"property", r.property},
          {"mode", std::string(to_string(r.mode))},
          {"checked", r.checked},
          {"violation_count", r.violation_count},
          {"pass", r.pass()},
          {"required", required}};
}

json violations_json(const CheckReport& r) {
  json out = json::array();
  for (const auto& v : r.violations) {
    out.push_back({{"property", r.property},
                   {"m", v.m},
                   {"i", v.i},
                   {"lhs", rational_json(v.lhs)},
                   {"rhs", rational_json(v.rhs)},
                   {"clause", v.clause}});
  }
  return out;
}

json envelope(const std::string& command, json parameters, json results, json violations) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"parameters", std::move(parameters)},
          {"results", std::move(results)},
          {"violations", std::move(violations)}};
}

void emit_json(std::ostream& out, json record, Clock::time_point start) {
  record["timing_ms"] = static_cast<std::int64_t>(elapsed_ms(start));
  out << record.dump(2) << "\n";
}

std::string pass_word(bool pass) { return pass ? "PASS" : "FAIL"; }

void pretty_report(std::ostream& out, const CheckReport& r, const std::string& note = {}) {
  out << "  " << pass_word(r.pass()) << "  " << std::left << std::setw(36) << r.property << std::setw(12)
      << to_string(r.mode) << " checked=" << r.checked << " violations=" << r.violation_count;
  if (!note.empty()) out << "  (" << note << ")";
  out << "\n";
  for (const auto& v : r.violations) {
    out << "        at m=" << v.m << " i=" << v.i << ": " << v.lhs.str() << " vs " << v.rhs.str();
    if (!v.clause.empty()) out << " [" << v.clause << "]";
    out << "\n";
  }
  if (r.violation_count > r.violations.size()) {
    out << "        ... " << (r.violation_count - r.violations.size()) << " more not shown\n";
  }
}

void csv_reports(std::ostream& out, const std::vector<std::pair<CheckReport, bool>>& reports) {
  out << "property,mode,checked,violation_count,pass,required\n";
  for (const auto& [r, required] : reports) {
    out << '"' << r.property << "\"," << to_string(r.mode) << ',' << r.checked << ',' << r.violation_count << ','
        << (r.pass() ? "true" : "false") << ',' << (required ? "true" : "false") << "\n";
  }
  bool header = false;
  for (const auto& [r, required] : reports) {
    for (const auto& v : r.violations) {
      if (!header) {
        out << "\nproperty,m,i,lhs,rhs,clause\n";
        header = true;
      }
      out << '"' << r.property << "\"," << v.m << ',' << v.i << ',' << v.lhs.str() << ',' << v.rhs.str() << ','
          << v.clause << "\n";
    }
  }
}

struct Common {
  std::string format = "pretty";
  int workers = 0;

  Format fmt() const { return kFormats.at(format); }
  int worker_count() const { return workers > 0 ? workers : default_workers(); }
};

void add_common(CLI::App& sub, Common& common, bool with_workers) {
  sub.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  if (with_workers) {
    sub.add_option("--workers", common.workers, "Worker threads (default: INTERLACE_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
  }
}

// ---------------------------------------------------------------------------
// row
// ---------------------------------------------------------------------------

struct RowArgs {
  Common common;
  long m = -1;
  std::string method = "direct";
  long m_cap = 2000;
};

int cmd_row(const RowArgs& a, std::ostream& out) {
  if (a.m < 0) throw UsageError("--m must be non-negative");
  if (a.m > a.m_cap) {
    throw UsageError("--m " + std::to_string(a.m) + " exceeds the cap " + std::to_string(a.m_cap) +
                     " (raise it with --m-cap)");
  }
  const auto method = boros_moll::parse_method(a.method);
  if (!method) throw UsageError("unknown method '" + a.method + "'");

  const auto start = Clock::now();
  const CoefficientRow row = boros_moll::generate_row(static_cast<int>(a.m), *method);

  switch (a.common.fmt()) {
    case Format::Csv: {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].str();
      out << "\n";
      break;
    }
    case Format::Json: {
      json entries = json::array();
      for (const auto& e : row.entries()) entries.push_back(dyadic_json(e));
      emit_json(out,
                envelope("row", {{"m", a.m}, {"method", a.method}},
                         {{"degree", row.degree()}, {"entries", std::move(entries)}}, json::array()),
                start);
      break;
    }
    case Format::Pretty: {
      out << "Boros-Moll row m = " << a.m << " (method: " << a.method << ")\n";
      out << std::left << std::setw(6) << "  i" << std::setw(40) << "exact" << "approx. (6 s.f., NOT exact)\n";
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::string exact = row[i].str();
        if (exact.size() > 38) exact = exact.substr(0, 35) + "...";
        out << "  " << std::setw(4) << i << std::setw(40) << exact << "~" << row[i].approx(6) << "\n";
      }
      out << "elapsed: " << static_cast<std::int64_t>(elapsed_ms(start)) << " ms\n";
      break;
    }
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string property = "all";
  long m_max = 50;
  bool strict = false;
  long m_cap = 2000;
};

constexpr int kCrossCheckRows = 30;

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.m_max < 2) throw UsageError("--m-max must be at least 2");
  if (a.m_max > a.m_cap) throw UsageError("--m-max exceeds the cap " + std::to_string(a.m_cap));

  const auto start = Clock::now();
  const int workers = a.common.worker_count();
  const int top = static_cast<int>(a.m_max);
  const CoefficientTriangle tri = boros_moll::triangle_recurrence(top);
  const Strictness mode = a.strict ? Strictness::Strict : Strictness::NonStrict;

  std::vector<CheckReport> reports;

  // Cross-check the generator against the direct formula on small rows.
  const int cross_top = std::min(top, kCrossCheckRows);
  prepare_binomials(2L * cross_top);
  reports.push_back(sweep_rows(
      tri, 0, cross_top,
      [](const CoefficientRow& row) {
        CheckReport r("direct-formula cross-check", Strictness::Equality);
        const auto direct = boros_moll::row_direct(row.degree());
        for (std::size_t i = 0; i < row.size(); ++i) {
          ++r.checked;
          if (row[i] != direct[i]) r.record({row.degree(), static_cast<int>(i), row[i], direct[i], {}});
        }
        return r;
      },
      workers));
  reports.back().property = "direct-formula cross-check";
  reports.back().mode = Strictness::Equality;

  const bool all = a.property == "all";
  auto named = [](CheckReport r, std::string name, Strictness how) {
    r.property = std::move(name);
    r.mode = how;
    return r;
  };

  if (all || a.property == "unimodal") {
    reports.push_back(named(sweep_rows(tri, 0, top, check_unimodal_middle, workers), "unimodal-middle",
                            Strictness::Strict));
  }
  if (all || a.property == "logconcave") {
    reports.push_back(named(
        sweep_rows(tri, 0, top, [mode](const CoefficientRow& r) { return check_log_concave(r, mode); }, workers),
        "log-concave", mode));
  }
  if (all || a.property == "interlacing") {
    reports.push_back(named(sweep_pairs(
                                tri, 0, top - 1,
                                [mode](const CoefficientRow& lo, const CoefficientRow& hi) {
                                  return check_interlacing_pair(lo, hi, mode);
                                },
                                workers),
                            "interlacing", mode));
  }
  if (all || a.property == "theorem1") {
    reports.push_back(
        named(sweep_pairs(tri, 2, top - 1, check_cross_products, workers), "cross-products", Strictness::Strict));
  }
  if (all || a.property == "strlog") {
    reports.push_back(named(sweep_rows(tri, 2, top, check_weighted_log_concave, workers), "weighted-log-concave",
                            Strictness::Strict));
  }
  if (all || a.property == "tl1") {
    reports.push_back(named(sweep_pairs(tri, 2, top - 1, check_weighted_ratio_descent, workers),
                            "weighted-ratio-descent", Strictness::Strict));
  }
  if (all || a.property == "recurrences") {
    for (auto id : {boros_moll::RecurrenceId::R1, boros_moll::RecurrenceId::R2, boros_moll::RecurrenceId::R3,
                    boros_moll::RecurrenceId::R4}) {
      reports.push_back(boros_moll::verify_recurrence(tri, id));
    }
  }

  const bool pass = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass(); });

  switch (a.common.fmt()) {
    case Format::Json: {
      json results = json::array();
      json violations = json::array();
      for (const auto& r : reports) {
        results.push_back(report_json(r));
        for (auto& v : violations_json(r)) violations.push_back(std::move(v));
      }
      emit_json(out,
                envelope("verify", {{"property", a.property}, {"m_max", a.m_max}, {"strict", a.strict}},
                         {{"pass", pass}, {"reports", std::move(results)}}, std::move(violations)),
                start);
      break;
    }
    case Format::Csv: {
      std::vector<std::pair<CheckReport, bool>> rows;
      for (const auto& r : reports) rows.emplace_back(r, true);
      csv_reports(out, rows);
      break;
    }
    case Format::Pretty: {
      out << "Boros-Moll verification, rows 0.." << top << " (generated by recurrence)\n";
      for (const auto& r : reports) pretty_report(out, r);
      out << (pass ? "all checks passed" : "VIOLATIONS FOUND") << "\n";
      out << "elapsed: " << static_cast<std::int64_t>(elapsed_ms(start)) << " ms\n";
      break;
    }
  }
  return pass ? kExitPass : kExitViolation;
}

// ---------------------------------------------------------------------------
// criterion
// ---------------------------------------------------------------------------

struct CriterionArgs {
  Common common;
  std::string family;
  std::string file;
  int param = 0;
  long n_max = 30;
  long sturm_up_to = 15;
  std::uint64_t seed = 0;
};

int cmd_criterion(const CriterionArgs& a, std::ostream& out) {
  if (a.family.empty() == a.file.empty()) throw UsageError("give exactly one of --family or --file");
  if (a.n_max < 0) throw UsageError("--n-max must be non-negative");
  if (a.sturm_up_to < 0) throw UsageError("--sturm-up-to must be non-negative");

  TriangularRecurrence rec;
  std::optional<std::uint64_t> seed;
  if (!a.file.empty()) {
    try {
      rec = load_recurrence_file(a.file);
    } catch (const ParseError& e) {
      throw ConfigError(a.file + ": " + e.what());
    }
  } else if (a.family == "random") {
    rec = random_cone_recurrence(a.seed);
    seed = a.seed;
  } else {
    const auto id = parse_family(a.family, a.param);
    if (!id) throw UsageError("unknown family '" + a.family + "'");
    rec = family(*id);
  }

  const auto start = Clock::now();
  const int sturm_bound = static_cast<int>(std::min(a.sturm_up_to, a.n_max));
  CriterionReport report = criterion_report(rec, static_cast<int>(a.n_max), sturm_bound, a.common.worker_count());
  report.seed = seed;

  const std::vector<std::pair<CheckReport, bool>> parts{{report.f_condition, true},   {report.g_condition, true},
                                                        {report.real_rooted, true},   {report.newton_proxy, true},
                                                        {report.interlacing, true},   {report.strict_interlacing, false}};
  const bool pass = report.pass();

  switch (a.common.fmt()) {
    case Format::Json: {
      json reports = json::array();
      json violations = json::array();
      for (const auto& [r, required] : parts) {
        reports.push_back(report_json(r, required));
        if (required) {
          for (auto& v : violations_json(r)) violations.push_back(std::move(v));
        }
      }
      json sturm = json::array();
      for (std::size_t n = 0; n < report.sturm.size(); ++n) {
        const auto& s = report.sturm[n];
        sturm.push_back({{"n", n},
                         {"degree", s.degree},
                         {"real_root_count", s.real_root_count},
                         {"square_free_degree", s.square_free_degree},
                         {"all_real", s.all_real}});
      }
      json params = {{"family", report.family}, {"n_max", a.n_max}, {"sturm_up_to", sturm_bound}};
      if (seed) params["seed"] = *seed;
      emit_json(out,
                envelope("criterion", std::move(params),
                         {{"pass", pass},
                          {"hypotheses_hold", report.hypotheses_hold()},
                          {"conclusion_holds", report.conclusion_holds()},
                          {"reports", std::move(reports)},
                          {"sturm", std::move(sturm)}},
                         std::move(violations)),
                start);
      break;
    }
    case Format::Csv: csv_reports(out, parts); break;
    case Format::Pretty: {
      out << "Triangular recurrence criterion: " << report.family << ", rows 0.." << a.n_max << "\n";
      if (seed) out << "  seed: " << *seed << "\n";
      out << " hypotheses:\n";
      pretty_report(out, report.f_condition);
      pretty_report(out, report.g_condition);
      pretty_report(out, report.real_rooted, "Sturm, rows 0.." + std::to_string(sturm_bound));
      pretty_report(out, report.newton_proxy, "necessary condition only, not a proof of real roots");
      out << " conclusion:\n";
      pretty_report(out, report.interlacing);
      pretty_report(out, report.strict_interlacing, "observed, not required");
      out << "  hypotheses " << (report.hypotheses_hold() ? "hold" : "FAIL") << ", conclusion "
          << (report.conclusion_holds() ? "holds" : "FAILS") << "\n";
      out << "elapsed: " << static_cast<std::int64_t>(elapsed_ms(start)) << " ms\n";
      break;
    }
  }
  return pass ? kExitPass : kExitViolation;
}

// ---------------------------------------------------------------------------
// explore
// ---------------------------------------------------------------------------

struct ExploreArgs {
  Common common;
  long m_max = 10;
  int l_iterations = 2;
};

int cmd_explore(const ExploreArgs& a, std::ostream& out) {
  if (a.l_iterations < 1) throw UsageError("--l-iterations must be at least 1");
  if (a.m_max < 0) throw UsageError("--m-max must be non-negative");

  const auto start = Clock::now();
  const int workers = a.common.worker_count();
  const CoefficientTriangle tri = boros_moll::triangle_recurrence(static_cast<int>(a.m_max));
  const auto k_fold = parallel_map(tri.size(), workers,
                                   [&](std::size_t m) { return k_fold_log_concavity(tri.row(m), a.l_iterations); });
  const auto depth = interlacing_depth(tri, a.l_iterations, workers);

  switch (a.common.fmt()) {
    case Format::Json: {
      json kf = json::array();
      for (std::size_t m = 0; m < k_fold.size(); ++m) {
        json row = {{"m", m}, {"k", k_fold[m].k}, {"k_max", k_fold[m].k_max}};
        row["failed_at"] = k_fold[m].failed_at ? json(*k_fold[m].failed_at) : json(nullptr);
        kf.push_back(std::move(row));
      }
      json levels = json::array();
      for (const auto& d : depth) {
        levels.push_back({{"j", d.j},
                          {"pairs_checked", d.pairs_checked},
                          {"pairs_interlacing", d.pairs_interlacing},
                          {"pairs_strictly_interlacing", d.pairs_strictly_interlacing},
                          {"pairs_skipped", d.pairs_skipped},
                          {"all_interlacing", d.all_interlacing()}});
      }
      emit_json(out,
                envelope("explore", {{"m_max", a.m_max}, {"l_iterations", a.l_iterations}},
                         {{"k_fold", std::move(kf)}, {"interlacing_depth", std::move(levels)}}, json::array()),
                start);
      break;
    }
    case Format::Csv: {
      out << "m,k_fold,failed_at\n";
      for (std::size_t m = 0; m < k_fold.size(); ++m) {
        out << m << ',' << k_fold[m].k << ',' << (k_fold[m].failed_at ? std::to_string(*k_fold[m].failed_at) : "")
            << "\n";
      }
      out << "\nj,pairs_checked,pairs_interlacing,pairs_strictly_interlacing,pairs_skipped\n";
      for (const auto& d : depth) {
        out << d.j << ',' << d.pairs_checked << ',' << d.pairs_interlacing << ',' << d.pairs_strictly_interlacing
            << ',' << d.pairs_skipped << "\n";
      }
      break;
    }
    case Format::Pretty: {
      out << "Iterated L-operator on Boros-Moll rows 0.." << a.m_max << " (informational, nothing asserted)\n";
      out << "  k-fold log-concavity (largest k <= " << a.l_iterations << "):\n";
      for (std::size_t m = 0; m < k_fold.size(); ++m) {
        out << "    m=" << std::setw(4) << m << "  k=" << k_fold[m].k;
        if (k_fold[m].failed_at) out << "  (fails at j=" << *k_fold[m].failed_at << ")";
        out << "\n";
      }
      out << "  interlacing of L^j(rows):\n";
      out << "     j  checked  interlacing  strict  skipped\n";
      for (const auto& d : depth) {
        out << "  " << std::right << std::setw(4) << d.j << std::setw(9) << d.pairs_checked << std::setw(13)
            << d.pairs_interlacing << std::setw(8) << d.pairs_strictly_interlacing << std::setw(9) << d.pairs_skipped
            << "\n";
      }
      out << "elapsed: " << static_cast<std::int64_t>(elapsed_ms(start)) << " ms\n";
      break;
    }
  }
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of log-concavity properties of Boros-Moll and triangular-recurrence polynomials",
               "interlace"};
  app.require_subcommand(1);

  RowArgs row;
  auto* row_cmd = app.add_subcommand("row", "Print one Boros-Moll coefficient row exactly");
  row_cmd->add_option("--m", row.m, "Degree m")->required();
  row_cmd->add_option("--method", row.method, "Generation method")
      ->check(CLI::IsMember({"expand", "direct", "recurrence"}))
      ->capture_default_str();
  row_cmd->add_option("--m-cap", row.m_cap, "Largest m accepted")->capture_default_str();
  add_common(*row_cmd, row.common, false);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Verify inequalities and recurrences on Boros-Moll rows");
  verify_cmd->add_option("--property", verify.property, "Property to check")
      ->check(CLI::IsMember({"unimodal", "logconcave", "interlacing", "theorem1", "strlog", "tl1", "recurrences", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--m-max", verify.m_max, "Largest degree")->capture_default_str();
  verify_cmd->add_flag("--strict", verify.strict, "Use strict inequalities for log-concavity and interlacing");
  verify_cmd->add_option("--m-cap", verify.m_cap, "Largest m accepted")->capture_default_str();
  add_common(*verify_cmd, verify.common, true);

  CriterionArgs criterion;
  auto* criterion_cmd = app.add_subcommand("criterion", "Check the triangular-recurrence criterion for a family");
  auto* family_opt = criterion_cmd->add_option(
      "--family", criterion.family, "pascal | stirling-cycle | stirling-second (bell) | whitney | random");
  auto* file_opt = criterion_cmd->add_option("--file", criterion.file, "Recurrence file");
  family_opt->excludes(file_opt);
  criterion_cmd->add_option("--param", criterion.param, "Family parameter (Whitney m)")->capture_default_str();
  criterion_cmd->add_option("--n-max", criterion.n_max, "Largest row")->capture_default_str();
  criterion_cmd->add_option("--sturm-up-to", criterion.sturm_up_to, "Largest row checked with Sturm chains")
      ->capture_default_str();
  criterion_cmd->add_option("--seed", criterion.seed, "Seed for --family random")->capture_default_str();
  add_common(*criterion_cmd, criterion.common, true);

  ExploreArgs explore;
  auto* explore_cmd = app.add_subcommand("explore", "Iterated L-operator probes (informational)");
  explore_cmd->add_option("--m-max", explore.m_max, "Largest degree")->capture_default_str();
  explore_cmd->add_option("--l-iterations", explore.l_iterations, "Number of L-operator iterations")
      ->capture_default_str();
  add_common(*explore_cmd, explore.common, true);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  try {
    if (*row_cmd) return cmd_row(row, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*criterion_cmd) return cmd_criterion(criterion, out);
    if (*explore_cmd) return cmd_explore(explore, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace interlace::cli
