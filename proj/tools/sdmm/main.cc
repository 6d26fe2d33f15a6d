// Copyright 2026 The sdmm-pre Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// sdmm: command-line front end for the sdmm-pre library.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdmm/csv.h"
#include "sdmm/degree_table.h"
#include "sdmm/error.h"
#include "sdmm/matrix_io.h"
#include "sdmm/protocol.h"
#include "sdmm/rational.h"
#include "sdmm/scheme_formulas.h"
#include "sdmm/security_audit.h"
#include "sdmm/table_search.h"

namespace {

using sdmm::CsvWriter;
using sdmm::ErrorCode;
using sdmm::Rational;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRetryable = 3;
constexpr int kExitRefused = 4;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPointSelectionFailed:
      return kExitRetryable;
    case ErrorCode::kSearchTooLarge:
    case ErrorCode::kAuditTooLarge:
      return kExitRefused;
    default:
      return kExitValidation;
  }
}

// Writes to --out when given, otherwise to stdout.
void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  SDMM_ENFORCE(out.good(), ErrorCode::kInvalidArgument,
               "cannot write " + out_path);
  out << text;
}

std::string S(std::int64_t v) { return std::to_string(v); }

struct KltOptions {
  std::int64_t k = 1;
  std::int64_t l = 1;
  std::int64_t t = 1;
};

void AddKlt(CLI::App* cmd, KltOptions& o) {
  cmd->add_option("--K", o.k, "row blocks of A")->required();
  cmd->add_option("--L", o.l, "column blocks of B")->required();
  cmd->add_option("--T", o.t, "colluding servers tolerated")->required();
}

// ---- tables ---------------------------------------------------------------

struct TablesOptions {
  std::int64_t k = 4;
  std::int64_t l = 4;
  std::int64_t t_max = 15;
  std::vector<std::int64_t> r_list;
  bool precompute = false;
  std::string out;
};

int RunTables(const TablesOptions& o) {
  SDMM_ENFORCE(o.k >= 1 && o.l >= 1 && o.t_max >= 1,
               ErrorCode::kInvalidArgument, "K, L, T-max must be positive");
  std::vector<std::int64_t> rs = o.r_list;
  if (rs.empty()) {
    for (std::int64_t r = 1; r <= o.k; ++r) rs.push_back(r);
  }
  CsvWriter w({"T", "r", o.precompute ? "N_pre" : "N"});
  w.Comment(" K=" + S(o.k) + " L=" + S(o.l) +
            (o.precompute ? " precompute" : " no precompute"));
  for (std::int64_t t = 1; t <= o.t_max; ++t) {
    for (std::int64_t r : rs) {
      if (r < 1 || r > std::min(o.k, t)) {
        w.Comment(" T=" + S(t) + " r=" + S(r) +
                  " omitted: r must satisfy 1 <= r <= min(K, T)");
        continue;
      }
      const sdmm::SchemeParams params{o.k, o.l, t, r};
      const std::int64_t n =
          sdmm::CountServers(sdmm::BuildGaspExponents(params), o.precompute);
      if (o.precompute) {
        SDMM_ENFORCE(n == sdmm::PrecomputeServersClosedForm(params),
                     ErrorCode::kInternal,
                     "closed form disagrees with enumeration at " +
                         params.ToString());
      }
      w.Row({S(t), S(r), S(n)});
    }
    if (o.precompute) {
      const sdmm::BoundsReport b = sdmm::LowerBounds(o.k, o.l, t);
      w.Row({S(t), "bound", S(b.bound1)});
      w.Row({S(t), "bound_best", S(b.best)});
    }
  }
  Emit(w.str(), o.out);
  return kExitOk;
}

// ---- table ----------------------------------------------------------------

struct TableOptions {
  KltOptions klt;
  std::int64_t r = 1;
  bool csv = false;
};

int RunTable(const TableOptions& o) {
  const sdmm::SchemeParams params{o.klt.k, o.klt.l, o.klt.t, o.r};
  const sdmm::GaspExponents e = sdmm::BuildGaspExponents(params);
  const sdmm::DegreeTable table(e);
  if (o.csv) {
    std::cout << table.RenderCsv();
    return kExitOk;
  }
  const sdmm::ConditionReport rep = sdmm::CheckTableConditions(e);
  std::cout << "GASP_r " << params.ToString() << '\n'
            << table.RenderText() << '\n'
            << "N = " << sdmm::CountServers(e, false) << '\n'
            << "N_pre = " << sdmm::CountServers(e, true) << '\n'
            << "conditions: info/info unique "
            << (rep.info_unique ? "yes" : "no") << ", random exponents distinct "
            << (rep.rand_distinct ? "yes" : "no") << '\n';
  return kExitOk;
}

// ---- multiply -------------------------------------------------------------

struct MultiplyOptions {
  std::optional<std::uint64_t> q;
  KltOptions klt;
  std::int64_t r = 1;
  std::string a_file;
  std::string b_file;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out;
  std::string transcript;
};

int RunMultiply(const MultiplyOptions& o) {
  const sdmm::FieldMatrix a = sdmm::ReadMatrixFile(o.a_file);
  const sdmm::FieldMatrix b = sdmm::ReadMatrixFile(o.b_file);
  SDMM_ENFORCE(a.field() == b.field(), ErrorCode::kFieldMismatch,
               "A is over F_" + std::to_string(a.field().modulus()) +
                   " but B is over F_" + std::to_string(b.field().modulus()));
  if (o.q) {
    SDMM_ENFORCE(*o.q == a.field().modulus(), ErrorCode::kFieldMismatch,
                 "--q " + std::to_string(*o.q) +
                     " does not match the modulus in the input files");
  }
  const sdmm::SchemeParams params{o.klt.k, o.klt.l, o.klt.t, o.r};
  const sdmm::MultiplyResult res =
      sdmm::SecureMultiply(a, b, params, {o.seed, 8, o.threads});
  Emit(sdmm::FormatMatrix(res.product), o.out);
  if (!o.transcript.empty()) {
    const sdmm::TranscriptStats& t = res.transcript;
    std::ostringstream os;
    os << "params=" << params.ToString() << '\n'
       << "q=" << a.field().modulus() << '\n'
       << "N_pre=" << t.servers << '\n'
       << "upload_per_server=" << t.upload_per_server << '\n'
       << "download_per_server=" << t.download_per_server << '\n'
       << "total_upload=" << t.total_upload << '\n'
       << "total_download=" << t.total_download << '\n'
       << "precompute_symbols=" << t.precompute_symbols << '\n'
       << "point_attempts=" << res.point_attempts << '\n';
    Emit(os.str(), o.transcript == "-" ? "" : o.transcript);
  }
  return kExitOk;
}

// ---- bounds / compare -----------------------------------------------------

int RunBounds(const KltOptions& o, bool csv) {
  const sdmm::BoundsReport b = sdmm::LowerBounds(o.k, o.l, o.t);
  const sdmm::Optimality opt = sdmm::OptimalityCheck(o.k, o.l, o.t);
  const std::int64_t small = sdmm::SmallPrecomputeServersSymmetric(o.k, o.l, o.t);
  if (csv) {
    CsvWriter w({"K", "L", "T", "bound", "m", "value"});
    auto row = [&](const std::string& name, const std::string& m,
                   std::int64_t v) {
      w.Row({S(o.k), S(o.l), S(o.t), name, m, S(v)});
    };
    row("bound1", "", b.bound1);
    if (b.bound2) row("bound2", "", *b.bound2);
    for (std::size_t m = 0; m < b.bound3_by_m.size(); ++m) {
      row("bound3", S(static_cast<std::int64_t>(m + 1)), b.bound3_by_m[m]);
    }
    row("best", "", b.best);
    row("gasp_small_symmetric", "", small);
    row("gap", "", opt.gap);
    std::cout << w.str();
    return kExitOk;
  }
  std::cout << "K=" << o.k << " L=" << o.l << " T=" << o.t << '\n'
            << "bound1 = " << b.bound1 << '\n';
  if (b.bound2) std::cout << "bound2 = " << *b.bound2 << '\n';
  std::cout << "bound3 =";
  for (std::size_t m = 0; m < b.bound3_by_m.size(); ++m) {
    std::cout << " m" << (m + 1) << ":" << b.bound3_by_m[m];
  }
  std::cout << '\n'
            << "best = " << b.best << '\n'
            << "GASP_small (symmetric) = " << small << '\n'
            << (opt.achieving ? "BoundAchieving" : "Gap(" + S(opt.gap) + ")")
            << '\n';
  return kExitOk;
}

int RunCompare(const KltOptions& o, bool csv) {
  const sdmm::Verdict v = sdmm::CompareSmallBig(o.k, o.l, o.t);
  const std::int64_t small = sdmm::SmallPrecomputeServersSymmetric(o.k, o.l, o.t);
  const auto big = sdmm::BigPrecomputeServersSymmetric(o.k, o.l, o.t);
  // Outside the formula's cases, count the better orientation directly.
  const std::int64_t big_count =
      big ? *big
          : std::min(sdmm::PrecomputeServersClosedForm(
                         {o.k, o.l, o.t, std::min(o.k, o.t)}),
                     sdmm::PrecomputeServersClosedForm(
                         {o.l, o.k, o.t, std::min(o.l, o.t)}));
  std::string direct = small < big_count   ? "SmallWins"
                       : small > big_count ? "BigWins"
                                           : "Tie";
  if (csv) {
    CsvWriter w({"K", "L", "T", "verdict", "n_small", "n_big", "direct"});
    w.Row({S(o.k), S(o.l), S(o.t), std::string(sdmm::VerdictName(v)),
           S(small), S(big_count), direct});
    std::cout << w.str();
    return kExitOk;
  }
  std::cout << sdmm::VerdictName(v) << '\n'
            << "GASP_small = " << small << '\n'
            << "GASP_big = " << big_count
            << (big ? "" : " (counted; outside the closed-form cases)") << '\n';
  if (v == sdmm::Verdict::kUndetermined) {
    std::cout << "direct comparison: " << direct << '\n';
  }
  return kExitOk;
}

// ---- collusion / complexity -----------------------------------------------

bool ParseMode(const std::string& mode) {
  SDMM_ENFORCE(mode == "pre" || mode == "nopre", ErrorCode::kInvalidArgument,
               "--mode must be 'pre' or 'nopre'");
  return mode == "pre";
}

int RunCollusion(std::int64_t k, std::int64_t l, const std::string& delta,
                 const std::string& mode, bool csv) {
  const Rational d = sdmm::ParseRational(delta);
  const sdmm::CollusionResult r =
      sdmm::CollusionTolerance(k, l, d, ParseMode(mode));
  const std::string threshold =
      r.feasible ? sdmm::FormatRational(*r.threshold) : "";
  if (csv) {
    CsvWriter w({"K", "L", "delta", "mode", "feasible", "threshold", "N"});
    w.Row({S(k), S(l), sdmm::FormatRational(d), mode,
           r.feasible ? "feasible" : "infeasible",
           r.feasible ? threshold.substr(0, threshold.find(' ')) : "",
           r.feasible ? S(*r.servers) : ""});
    std::cout << w.str();
    return kExitOk;
  }
  if (!r.feasible) {
    std::cout << "infeasible\n";
  } else {
    std::cout << "feasible\nthreshold N = " << threshold << '\n'
              << "servers = " << *r.servers << '\n';
  }
  return kExitOk;
}

int RunComplexity(const std::string& omega, const std::string& epsilon,
                  const std::string& delta, const std::string& mode, bool csv) {
  sdmm::ComplexityParams cp;
  cp.omega = sdmm::ParseRational(omega);
  cp.epsilon = sdmm::ParseRational(epsilon);
  cp.delta = sdmm::ParseRational(delta);
  const sdmm::ComplexityExponents x = sdmm::ComplexityExponent(cp, ParseMode(mode));
  if (csv) {
    CsvWriter w({"omega", "epsilon", "mode", "exponent", "optimal_epsilon",
                 "optimal_exponent"});
    auto f = [](const Rational& v) {
      const std::string s = sdmm::FormatRational(v);
      return s.substr(0, s.find(' '));
    };
    w.Row({f(cp.omega), f(cp.epsilon), mode, f(x.exponent),
           f(x.optimal_epsilon), f(x.optimal_exponent)});
    std::cout << w.str();
    return kExitOk;
  }
  std::cout << "exponent at epsilon=" << sdmm::FormatRational(cp.epsilon)
            << ": " << sdmm::FormatRational(x.exponent) << '\n'
            << "optimal epsilon: " << sdmm::FormatRational(x.optimal_epsilon)
            << '\n'
            << "optimal exponent: " << sdmm::FormatRational(x.optimal_exponent)
            << '\n';
  return kExitOk;
}

// ---- audit ----------------------------------------------------------------

struct AuditOptions {
  KltOptions klt;
  std::int64_t r = 1;
  std::uint64_t q = sdmm::PrimeField::kMersenne61;
  std::uint64_t seed = 0;
  std::string mode = "rank";
  std::optional<std::size_t> subset_size;
  bool zero_masks = false;
  bool csv = false;
};

int RunAudit(const AuditOptions& o) {
  const sdmm::PrimeField field(o.q);
  const sdmm::GaspExponents e =
      sdmm::BuildGaspExponents({o.klt.k, o.klt.l, o.klt.t, o.r});
  const sdmm::SchemeInstance si = sdmm::ChoosePoints(field, e, o.seed, 32);
  sdmm::LeakageReport rep;
  if (o.mode == "rank") {
    rep = sdmm::RankAudit(si, o.seed);
  } else if (o.mode == "mi") {
    rep = sdmm::ExhaustiveMiAudit(
        si, o.subset_size.value_or(static_cast<std::size_t>(o.klt.t)),
        o.zero_masks ? sdmm::MaskHook::kZeroMasks : sdmm::MaskHook::kNone);
  } else {
    sdmm::Throw(ErrorCode::kInvalidArgument, "--mode must be 'rank' or 'mi'");
  }
  std::cout << (o.csv ? rep.ToCsv() : rep.ToText());
  return kExitOk;
}

// ---- search ---------------------------------------------------------------

struct SearchOptions {
  KltOptions klt;
  std::int64_t d = -1;
  bool all_roles = false;
  unsigned threads = 0;
  std::string ledger;
  bool csv = false;
};

std::string Join(const std::vector<sdmm::Exponent>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

int RunSearch(const SearchOptions& o) {
  sdmm::SearchSpace space;
  space.row_blocks = o.klt.k;
  space.col_blocks = o.klt.l;
  space.colluders = o.klt.t;
  space.max_exponent = o.d;
  space.all_role_assignments = o.all_roles;
  const sdmm::SearchResult r = sdmm::ExhaustiveSearch(space, o.threads);
  if (!o.ledger.empty()) sdmm::AppendSearchLedger(o.ledger, space, r);
  const auto& w = r.witness;
  if (o.csv) {
    CsvWriter c({"K", "L", "T", "D", "best_n_pre", "bound", "gap",
                 "tables_examined", "valid_tables", "alpha_info",
                 "alpha_rand", "beta_info", "beta_rand"});
    c.Row({S(o.klt.k), S(o.klt.l), S(o.klt.t), S(r.max_exponent),
           S(r.best_n_pre), S(r.best_bound), S(r.bound_gap),
           std::to_string(r.tables_examined), std::to_string(r.valid_tables),
           Join(w.alpha_info), Join(w.alpha_rand), Join(w.beta_info),
           Join(w.beta_rand)});
    std::cout << c.str();
    return kExitOk;
  }
  std::cout << "K=" << o.klt.k << " L=" << o.klt.l << " T=" << o.klt.t
            << " D=" << r.max_exponent << '\n'
            << "tables examined: " << r.tables_examined << " (valid "
            << r.valid_tables << ")\n"
            << "best N_pre: " << r.best_n_pre << '\n'
            << "best lower bound: " << r.best_bound << " (gap " << r.bound_gap
            << ")\n"
            << "witness: alpha_info={" << Join(w.alpha_info) << "} alpha_rand={"
            << Join(w.alpha_rand) << "} beta_info={" << Join(w.beta_info)
            << "} beta_rand={" << Join(w.beta_rand) << "}\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secure distributed matrix multiplication with precomputation"};
  app.require_subcommand(1);

  TablesOptions tables;
  auto* c_tables = app.add_subcommand("tables", "server counts per (T, r) as CSV");
  c_tables->add_option("--K", tables.k, "row blocks of A")->required();
  c_tables->add_option("--L", tables.l, "column blocks of B")->required();
  c_tables->add_option("--T-max", tables.t_max, "largest T")->required();
  c_tables->add_option("--r-list", tables.r_list, "chain lengths")->delimiter(',');
  c_tables->add_flag("--precompute", tables.precompute, "count N_pre");
  c_tables->add_option("--out", tables.out, "output file (default stdout)");

  TableOptions table;
  auto* c_table = app.add_subcommand("table", "render one GASP_r degree table");
  AddKlt(c_table, table.klt);
  c_table->add_option("--r", table.r, "chain length");
  c_table->add_flag("--csv", table.csv, "CSV output");

  MultiplyOptions mult;
  auto* c_mult = app.add_subcommand("multiply", "run the protocol on matrix files");
  c_mult->add_option("--q", mult.q, "expected field modulus");
  AddKlt(c_mult, mult.klt);
  c_mult->add_option("--r", mult.r, "chain length");
  c_mult->add_option("--a-file", mult.a_file, "matrix A")->required();
  c_mult->add_option("--b-file", mult.b_file, "matrix B")->required();
  c_mult->add_option("--seed", mult.seed, "randomness seed");
  c_mult->add_option("--threads", mult.threads, "server threads (0 = all)");
  c_mult->add_option("--out", mult.out, "product file (default stdout)");
  c_mult->add_option("--transcript", mult.transcript,
                     "write transcript statistics ('-' for stdout)");

  KltOptions bounds;
  bool bounds_csv = false;
  auto* c_bounds = app.add_subcommand("bounds", "lower bounds and optimality");
  AddKlt(c_bounds, bounds);
  c_bounds->add_flag("--csv", bounds_csv, "CSV output");

  KltOptions compare;
  bool compare_csv = false;
  auto* c_compare = app.add_subcommand("compare", "GASP_small versus GASP_big");
  AddKlt(c_compare, compare);
  c_compare->add_flag("--csv", compare_csv, "CSV output");

  std::int64_t col_k = 1;
  std::int64_t col_l = 1;
  std::string col_delta;
  std::string col_mode = "pre";
  bool col_csv = false;
  auto* c_col = app.add_subcommand("collusion", "servers needed for a collusion fraction");
  c_col->add_option("--K", col_k, "row blocks")->required();
  c_col->add_option("--L", col_l, "column blocks")->required();
  c_col->add_option("--delta", col_delta, "colluding fraction in [0, 1)")->required();
  c_col->add_option("--mode", col_mode, "pre or nopre");
  c_col->add_flag("--csv", col_csv, "CSV output");

  std::string cx_omega = "3";
  std::string cx_epsilon = "0";
  std::string cx_delta = "0";
  std::string cx_mode = "pre";
  bool cx_csv = false;
  auto* c_cx = app.add_subcommand("complexity", "total time complexity exponents");
  c_cx->add_option("--omega", cx_omega, "matrix multiplication exponent");
  c_cx->add_option("--epsilon", cx_epsilon, "partition exponent");
  c_cx->add_option("--delta", cx_delta, "colluding fraction");
  c_cx->add_option("--mode", cx_mode, "pre or nopre");
  c_cx->add_flag("--csv", cx_csv, "CSV output");

  AuditOptions audit;
  auto* c_audit = app.add_subcommand("audit", "T-security audit of a fresh instance");
  AddKlt(c_audit, audit.klt);
  c_audit->add_option("--r", audit.r, "chain length");
  c_audit->add_option("--q", audit.q, "field modulus");
  c_audit->add_option("--seed", audit.seed, "randomness seed");
  c_audit->add_option("--mode", audit.mode, "rank or mi");
  c_audit->add_option("--subset-size", audit.subset_size, "servers per audited subset (mi)");
  c_audit->add_flag("--zero-masks", audit.zero_masks, "force random blocks to zero (mi)");
  c_audit->add_flag("--csv", audit.csv, "CSV output");

  SearchOptions search;
  auto* c_search = app.add_subcommand("search", "exhaustive degree-table search");
  AddKlt(c_search, search.klt);
  c_search->add_option("--D", search.d, "largest exponent (default GASP_1 max + 2)");
  c_search->add_flag("--all-roles", search.all_roles, "try every info/random split");
  c_search->add_option("--threads", search.threads, "worker threads (0 = all)");
  c_search->add_option("--ledger", search.ledger, "append the result to this CSV");
  c_search->add_flag("--csv", search.csv, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_tables) return RunTables(tables);
    if (*c_table) return RunTable(table);
    if (*c_mult) return RunMultiply(mult);
    if (*c_bounds) return RunBounds(bounds, bounds_csv);
    if (*c_compare) return RunCompare(compare, compare_csv);
    if (*c_col) return RunCollusion(col_k, col_l, col_delta, col_mode, col_csv);
    if (*c_cx) return RunComplexity(cx_omega, cx_epsilon, cx_delta, cx_mode, cx_csv);
    if (*c_audit) return RunAudit(audit);
    if (*c_search) return RunSearch(search);
  } catch (const sdmm::Error& e) {
    std::cerr << "sdmm: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
  return kExitUsage;
}
