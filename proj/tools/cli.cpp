// Copyright 2026 The permcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "permcount/closed_form.hpp"
#include "permcount/matrices.hpp"
#include "permcount/modring.hpp"
#include "permcount/oracle.hpp"

namespace permcount::cli {
namespace {

enum class Format { Table, Csv, Json };

const std::map<std::string, Format> kFormats = {
    {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Column order of the class table: n, g(n,0), then the five classes.
const std::vector<std::string> kClassColumns = {"n",          "g(n,0)",     "g(n,0,1,1)",
                                                "g(n,0,1,2)", "g(n,0,1,3)", "g(n,0,2,1)",
                                                "g(n,0,2,2)"};

std::vector<std::uint64_t> parse_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1) throw UsageError("bad list entry '" + item + "'");
      out.push_back(static_cast<std::uint64_t>(v));
    } catch (const std::logic_error&) {
      throw UsageError("bad list entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  out << '\n';
}

void write_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += "  ";
      line += std::string(width[i] - r[i].size(), ' ') + r[i];
    }
    out << line << '\n';
  }
}

// Header row first, then data rows.
void emit(std::ostream& out, Format f, const std::vector<std::vector<std::string>>& rows) {
  switch (f) {
    case Format::Table:
      write_aligned(out, rows);
      break;
    case Format::Csv:
      for (const auto& r : rows) write_csv_row(out, r);
      break;
    case Format::Json: {
      for (std::size_t i = 1; i < rows.size(); ++i) {
        nlohmann::ordered_json j;
        for (std::size_t c = 0; c < rows[0].size(); ++c) j[rows[0][c]] = rows[i][c];
        out << j.dump() << '\n';
      }
      break;
    }
  }
}

ProgressHook progress_hook(std::ostream& err, bool enabled) {
  if (!enabled) return {};
  return [&err](std::uint64_t done, std::uint64_t total) {
    err << "\rprefixes " << done << "/" << total << (done == total ? "\n" : "") << std::flush;
  };
}

std::string nat(const Natural& v) { return v.str(); }

int cmd_eval(std::uint64_t n, std::int64_t x, Format f, std::ostream& out) {
  if (n == 0) throw UsageError("n must be at least 1");
  const Modulus m(n);
  const Natural g = g_n(m, x);
  const std::uint64_t xr = reduce(x, n);
  if (f == Format::Table) {
    out << nat(g) << '\n';
  } else {
    emit(out, f, {{"n", "x", "g"}, {std::to_string(n), std::to_string(xr), nat(g)}});
  }
  return kOk;
}

struct OracleArgs {
  std::uint64_t n = 0;
  std::optional<std::int64_t> x;
  bool classes = false;
  unsigned threads = 0;
  bool progress = false;
};

int cmd_oracle(const OracleArgs& a, Format f, std::ostream& out, std::ostream& err) {
  if (a.n == 0) throw UsageError("n must be at least 1");
  const Modulus m(a.n);
  CensusOptions opts;
  opts.threads = a.threads;
  opts.progress = progress_hook(err, a.progress);

  std::vector<std::uint64_t> xs;
  if (a.x) {
    xs.push_back(reduce(*a.x, a.n));
  } else {
    for (std::uint64_t x = 0; x < a.n; ++x) xs.push_back(x);
  }

  if (!a.classes) {
    const CountTable t = census(m, opts);
    if (a.x && f == Format::Table) {
      out << nat(t.counts[xs[0]]) << '\n';
      return kOk;
    }
    std::vector<std::vector<std::string>> rows = {{"x", "count"}};
    for (std::uint64_t x : xs) rows.push_back({std::to_string(x), nat(t.counts[x])});
    emit(out, f, rows);
    return kOk;
  }

  if (!m.is_prime_power()) throw UsageError("--classes needs a prime-power modulus");
  const auto [p, k] = m.factors()[0];
  const ClassCensus cc = class_census(p, k, opts);
  std::vector<std::vector<std::string>> rows = {{"x", "count"}};
  for (ClassLabel l : kClassLabels) rows[0].push_back("g(n,x," + std::string(label_name(l)) + ")");
  for (std::uint64_t x : xs) {
    std::vector<std::string> r = {std::to_string(x), nat(cc.row_total(x) + cc.unclassified[x])};
    for (ClassLabel l : kClassLabels) r.push_back(nat(cc.at(x, l)));
    rows.push_back(std::move(r));
  }
  emit(out, f, rows);
  return kOk;
}

struct TableArgs {
  std::string section;
  std::string p_list;
  bool confirm = false;
  unsigned threads = 0;
};

int cmd_table(const TableArgs& a, Format f, std::ostream& out) {
  CensusOptions opts;
  opts.threads = a.threads;
  const bool classes = a.section == "4.2" || a.section == "classes";
  const bool cases = a.section == "4-cases" || a.section == "cases";
  if (!classes && !cases) throw UsageError("unknown section '" + a.section + "'");

  if (classes) {
    const auto ns = parse_list(a.p_list.empty() ? "3,5,7,9,11,13" : a.p_list);
    std::vector<std::vector<std::string>> rows = {kClassColumns};
    if (a.confirm) rows[0].push_back("oracle");
    for (std::uint64_t n : ns) {
      const Modulus m(n);
      if (!m.is_prime_power() || m.factors()[0].p == 2)
        throw UsageError(std::to_string(n) + " is not an odd prime power");
      const auto [p, k] = m.factors()[0];
      std::vector<std::string> r = {std::to_string(n), nat(g_pk0(p, k))};
      for (ClassLabel l : kClassLabels) r.push_back(nat(g_pk0_class(p, k, l)));
      if (a.confirm) {
        const ClassCensus cc = class_census(p, k, opts);
        bool ok = cc.row_total(0) == g_pk0(p, k);
        for (ClassLabel l : kClassLabels) ok = ok && cc.at(0, l) == g_pk0_class(p, k, l);
        r.push_back(ok ? "match" : "MISMATCH");
      }
      rows.push_back(std::move(r));
    }
    emit(out, f, rows);
    return kOk;
  }

  const auto ps = parse_list(a.p_list.empty() ? "3,5,7,11,13" : a.p_list);
  std::vector<std::vector<std::string>> rows = {{"p", "row", "count"}};
  if (a.confirm) rows[0].push_back("oracle");
  for (std::uint64_t p : ps) {
    if (!is_prime(p) || p == 2) throw UsageError(std::to_string(p) + " is not an odd prime");
    std::optional<CaseCensus> oracle;
    if (a.confirm) oracle = case_census_oracle(p, opts);
    Natural total = 0;
    for (const auto& row : case_census_closed(p)) {
      std::vector<std::string> r = {std::to_string(p), std::string(case_row_name(row.row)),
                                    nat(row.count)};
      if (oracle) r.push_back(oracle->at(row.row) == row.count ? "match" : "MISMATCH");
      rows.push_back(std::move(r));
      total += row.count;
    }
    if (f == Format::Table) {
      std::vector<std::string> r = {std::to_string(p), "total", nat(total)};
      if (oracle) r.push_back(oracle->total() == total ? "match" : "MISMATCH");
      rows.push_back(std::move(r));
    }
  }
  emit(out, f, rows);
  return kOk;
}

}  // namespace

int verify_exit_code(const std::vector<CheckResult>& results) {
  return count_failures(results) == 0 ? kOk : kVerificationFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts invertible 3x3 matrices over Z_n by permanent value.", "permcount"};
  app.require_subcommand(1);

  std::string format_name = "table";
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember(allowed));
  };

  std::uint64_t eval_n = 0;
  std::int64_t eval_x = 0;
  auto* eval = app.add_subcommand("eval", "Closed-form g(n, x)");
  eval->add_option("n", eval_n, "Modulus")->required();
  eval->add_option("x", eval_x, "Permanent value (any integer)")->required()->allow_extra_args(false);
  add_format(eval, {"table", "csv", "json"});

  OracleArgs oracle_args;
  std::int64_t oracle_x = 0;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive census of GL3(Z_n) by permanent");
  oracle->add_option("n", oracle_args.n, "Modulus")->required();
  auto* x_opt = oracle->add_option("--x", oracle_x, "Report a single permanent value");
  oracle->add_flag("--classes", oracle_args.classes, "Split counts by sub-permanent class");
  oracle->add_option("--threads", oracle_args.threads, "Worker threads (0: all cores)");
  oracle->add_flag("--progress", oracle_args.progress, "Report prefixes processed on stderr");
  add_format(oracle, {"table", "csv", "json"});

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Reproduce the class table or the zero-pattern table");
  table->add_option("--section", table_args.section, "4.2 (classes) or 4-cases (cases)")
      ->required()
      ->check(CLI::IsMember({"4.2", "4-cases", "classes", "cases"}));
  table->add_option("--p-list", table_args.p_list, "Comma-separated moduli or primes");
  table->add_flag("--confirm", table_args.confirm, "Confirm every row with the oracle");
  table->add_option("--threads", table_args.threads, "Worker threads (0: all cores)");
  add_format(table, {"table", "csv", "json"});

  std::string profile_name = "quick";
  unsigned verify_threads = 0;
  auto* verify = app.add_subcommand("verify", "Run the cross-check suite");
  verify->add_option("--profile", profile_name, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--threads", verify_threads, "Worker threads (0: all cores)");
  add_format(verify, {"table", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const Format format = kFormats.at(format_name);
  try {
    if (*eval) return cmd_eval(eval_n, eval_x, format, out);
    if (*oracle) {
      if (*x_opt) oracle_args.x = oracle_x;
      return cmd_oracle(oracle_args, format, out, err);
    }
    if (*table) return cmd_table(table_args, format, out);
    if (*verify) {
      SuiteOptions opts;
      opts.profile = profile_name == "full" ? Profile::Full : Profile::Quick;
      opts.threads = verify_threads;
      const auto results = run_suite(opts);
      if (format == Format::Json) {
        write_json_lines(out, results);
      } else {
        write_table(out, results);
      }
      const int code = verify_exit_code(results);
      if (code != kOk) {
        err << count_failures(results) << " check(s) failed:\n";
        std::vector<CheckResult> failed;
        std::copy_if(results.begin(), results.end(), std::back_inserter(failed),
                     [](const CheckResult& r) { return !r.pass(); });
        write_json_lines(err, failed);
      }
      return code;
    }
  } catch (const ModulusTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kResourceBound;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace permcount::cli
