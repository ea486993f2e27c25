#include "cli/cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "flagdom/domain.hpp"
#include "flagdom/error.hpp"
#include "flagdom/report.hpp"
#include "flagdom/verify.hpp"

namespace flagdom::cli {
namespace {

const std::vector<std::string> kFamilies{"ci", "ci-fibered", "aiii", "aiii-fibered-s", "aiii-fibered-t"};

struct SpecArgs {
  std::string family;
  std::optional<int> n, p, q, a, m;
  std::vector<int> keep;
};

void add_spec_options(CLI::App& cmd, SpecArgs& args) {
  cmd.add_option("family", args.family, "Domain family")->required()->check(CLI::IsMember(kFamilies));
  cmd.add_option("--n", args.n, "Rank of Sp(2n,R)");
  cmd.add_option("--p", args.p, "p of SU(p,q), p <= q");
  cmd.add_option("--q", args.q, "q of SU(p,q)");
  cmd.add_option("--a", args.a, "Size of the Cayley set");
  cmd.add_option("--m", args.m, "dim V_1 for ci-fibered");
}

int require(const std::optional<int>& v, const char* flag, const std::string& family) {
  if (!v) throw ParameterError(family + " requires " + flag);
  return *v;
}

DomainSpec spec_from_args(const SpecArgs& args) {
  const Family fam = *parse_family(args.family);
  const auto& f = args.family;
  switch (fam) {
    case Family::CI:
      return CIHermitian{require(args.n, "--n", f), require(args.a, "--a", f)};
    case Family::CIFibered:
      return CIFibered{require(args.n, "--n", f), require(args.a, "--a", f), require(args.m, "--m", f)};
    case Family::AIII:
      return AIIIHermitian{require(args.p, "--p", f), require(args.q, "--q", f), require(args.a, "--a", f)};
    case Family::AIIIFiberedS:
    case Family::AIIIFiberedT: {
      const int p = require(args.p, "--p", f);
      const int q = require(args.q, "--q", f);
      const int a = require(args.a, "--a", f);
      const KeepSet keep = args.keep.empty() ? KeepSet::full(a) : KeepSet::from_indices(args.keep);
      if (fam == Family::AIIIFiberedS) return AIIIFiberedS{p, q, a, keep};
      return AIIIFiberedT{p, q, a, keep};
    }
  }
  throw ParameterError("unknown family " + f);
}

std::vector<DomainSpec> family_from_args(const SpecArgs& args) {
  const Family fam = *parse_family(args.family);
  const auto& f = args.family;
  std::vector<DomainSpec> specs;
  auto a_in_range = [&](int a) { return !args.a || *args.a == a; };
  switch (fam) {
    case Family::CI: {
      const int n = require(args.n, "--n", f);
      if (n < 1) throw ParameterError("--n must be >= 1");
      for (int a = 0; a <= n; ++a) {
        if (a_in_range(a)) specs.emplace_back(CIHermitian{n, a});
      }
      break;
    }
    case Family::CIFibered: {
      const int n = require(args.n, "--n", f);
      if (n < 2) throw ParameterError("--n must be >= 2 for ci-fibered");
      for (int a = 1; a < n; ++a) {
        for (int m = 1; m <= a; ++m) {
          if (a_in_range(a)) specs.emplace_back(CIFibered{n, a, m});
        }
      }
      break;
    }
    case Family::AIII:
    case Family::AIIIFiberedS:
    case Family::AIIIFiberedT: {
      const int p = require(args.p, "--p", f);
      const int q = require(args.q, "--q", f);
      if (p < 1 || p > q) throw ParameterError("requires 1 <= p <= q");
      if (fam != Family::AIII && p > 30) throw ParameterError("--p too large to enumerate keep subsets");
      for (int a = 0; a <= p; ++a) {
        if (!a_in_range(a)) continue;
        if (fam == Family::AIII) {
          specs.emplace_back(AIIIHermitian{p, q, a});
          continue;
        }
        for (std::uint32_t mask = 1; mask <= KeepSet::full(a).mask(); ++mask) {
          if (fam == Family::AIIIFiberedS) {
            specs.emplace_back(AIIIFiberedS{p, q, a, KeepSet(mask)});
          } else {
            specs.emplace_back(AIIIFiberedT{p, q, a, KeepSet(mask)});
          }
        }
      }
      break;
    }
  }
  for (const DomainSpec& s : specs) validate(s);
  return specs;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string agreement_str(const std::optional<bool>& a) { return a ? bool_str(*a) : "n/a"; }

std::string witnesses_str(const std::vector<Root>& roots) {
  return to_string(RootSet(roots.begin(), roots.end()));
}

void print_check(std::ostream& out, const CheckResult& r) {
  out << std::left;
  out << std::setw(12) << "spec" << to_string(r.spec) << '\n';
  out << std::setw(12) << "connected" << bool_str(r.connected) << '\n';
  out << std::setw(12) << "defect" << r.defect << '\n';
  out << std::setw(12) << "witnesses" << witnesses_str(r.witness_roots) << '\n';
  out << std::setw(12) << "prediction" << to_string(r.prediction) << '\n';
  out << std::setw(12) << "agreement" << agreement_str(r.agreement) << '\n';
}

void print_table(std::ostream& out, const std::vector<CheckResult>& rows) {
  std::size_t width = 4;
  for (const CheckResult& r : rows) width = std::max(width, to_string(r.spec).size());
  out << std::left << std::setw(static_cast<int>(width + 2)) << "spec" << std::setw(11) << "connected"
      << std::setw(8) << "defect" << std::setw(13) << "prediction" << "agreement" << '\n';
  for (const CheckResult& r : rows) {
    out << std::setw(static_cast<int>(width + 2)) << to_string(r.spec) << std::setw(11) << bool_str(r.connected)
        << std::setw(8) << r.defect << std::setw(13) << to_string(r.prediction) << agreement_str(r.agreement)
        << '\n';
  }
}

std::string opt_str(const std::optional<bool>& b) { return b ? bool_str(*b) : "-"; }

void print_summary(std::ostream& out, const GridReport& report) {
  const GridSummary& s = report.summary;
  if (s.disagreements == 0) {
    out << "OK " << s.entries << " entries, 0 disagreements\n";
  } else {
    out << "FAIL " << s.entries << " entries, " << s.disagreements << " disagreements\n";
    for (const GridEntry& e : report.entries) {
      if (e.agrees) continue;
      out << "  " << to_string(e.spec) << ": predicted=" << to_string(e.predicted)
          << " computed=" << bool_str(e.computed) << " defect=" << e.defect << " wk_scan=" << opt_str(e.oracle_wk)
          << " double_coset=" << opt_str(e.oracle_dc) << " witnesses=" << to_string(e.witnesses) << '\n';
    }
  }
  out << "oracles=" << to_string(report.oracles) << " wk_scan_runs=" << s.oracle_wk_runs
      << " double_coset_runs=" << s.oracle_dc_runs << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic 1-connectivity of flag domains of types CI and AIII", "flagdom"};
  app.require_subcommand(1);

  SpecArgs check_args;
  bool check_json = false;
  CLI::App* check = app.add_subcommand("check", "Decide a single flag domain");
  add_spec_options(*check, check_args);
  check->add_option("--keep", check_args.keep, "Kept indices of the s/t sequence (default: all)")->delimiter(',');
  check->add_flag("--json", check_json, "Emit JSON");

  SpecArgs enum_args;
  bool enum_json = false, enum_csv = false;
  CLI::App* enumerate = app.add_subcommand("enumerate", "Check every domain of a family");
  add_spec_options(*enumerate, enum_args);
  enumerate->add_flag("--json", enum_json, "Emit a JSON array");
  enumerate->add_flag("--csv", enum_csv, "Emit CSV");

  std::string grid;
  int n_max = 12, sum_max = 16;
  std::string oracles = "off";
  VerifyOptions vopt;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand("verify", "Verify the closed forms over a parameter grid");
  verify->add_option("grid", grid, "ci | aiii | fibered")->required()->check(CLI::IsMember({"ci", "aiii", "fibered"}));
  CLI::Option* n_opt = verify->add_option("--n-max", n_max, "Largest n");
  CLI::Option* s_opt = verify->add_option("--sum-max", sum_max, "Largest p+q");
  verify->add_option("--oracles", oracles, "off | auto | required")->check(CLI::IsMember({"off", "auto", "required"}));
  verify->add_option("--wk-cap", vopt.wk_cap, "Largest |W_K| the scan oracle enumerates");
  verify->add_option("--w-cap", vopt.w_cap, "Largest |W| the double-coset oracle accepts");
  verify->add_flag("--json", verify_json, "Emit the full report as JSON");

  std::vector<std::string> argv_store{"flagdom"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*check) {
      const CheckResult r = make_check_result(build_domain(spec_from_args(check_args)));
      if (check_json) {
        out << dump(to_json(r)) << '\n';
      } else {
        print_check(out, r);
      }
      return kOk;
    }

    if (*enumerate) {
      if (enum_json && enum_csv) throw ParameterError("--json and --csv are exclusive");
      std::vector<CheckResult> rows;
      for (const DomainSpec& s : family_from_args(enum_args)) rows.push_back(make_check_result(build_domain(s)));
      if (enum_csv) {
        out << csv_header() << '\n';
        for (const CheckResult& r : rows) out << csv_row(r) << '\n';
      } else if (enum_json) {
        Json arr = Json::array();
        for (const CheckResult& r : rows) arr.push_back(to_json(r));
        out << dump(arr) << '\n';
      } else {
        print_table(out, rows);
      }
      return kOk;
    }

    vopt.oracles = *parse_oracle_mode(oracles);
    GridReport report;
    if (grid == "ci") {
      report = verify_theorem_CI(n_max, vopt);
    } else if (grid == "aiii") {
      report = verify_theorem_AIII(sum_max, vopt);
    } else {
      if (n_opt->count() == 0) n_max = 8;
      if (s_opt->count() == 0) sum_max = 12;
      report = verify_fibered(n_max, sum_max, vopt);
    }
    if (verify_json) {
      out << dump(to_json(report)) << '\n';
    } else {
      print_summary(out, report);
    }
    err << "elapsed " << std::fixed << std::setprecision(3) << report.elapsed.count() << " s\n";
    return report.summary.disagreements == 0 ? kOk : kDisagreement;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kCapacity;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace flagdom::cli
