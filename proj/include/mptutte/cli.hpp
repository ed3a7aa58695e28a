#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mptutte/io.hpp"
#include "mptutte/tables.hpp"
#include "mptutte/tutte.hpp"
#include "mptutte/verify.hpp"

namespace mptutte {

namespace detail {

inline nlohmann::json report_json(const verification_report& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"check", c.check},
                      {"instance", c.instance},
                      {"pass", c.pass},
                      {"detail", c.detail}});
  return {{"checks", checks}, {"all_pass", report.all_pass()}};
}

inline void print_report(const verification_report& report, std::ostream& out) {
  int passed = 0;
  for (const auto& c : report.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.check;
    if (!c.instance.empty()) out << " (" << c.instance << ")";
    if (!c.pass) out << ": " << c.detail;
    out << "\n";
    if (c.pass) ++passed;
  }
  out << passed << "/" << report.checks.size() << " checks passed\n";
}

inline std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace detail

/// Command dispatcher; returns the process exit code (0 success, 1 input
/// parse/validation error, 2 failed verification).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Tutte polynomials of matroids and matroid perspectives"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a JSON document instead of plain text");

  std::string file;
  int dp = 0, dq = 0;
  std::string variant = "cr-nl";
  std::string family = "1";
  std::string checks = "all";
  int which = 1;
  unsigned long long seed = 0;
  int random_count = 0;

  auto* tutte_cmd = app.add_subcommand("tutte", "print the Tutte polynomial");
  auto* derive_cmd =
      app.add_subcommand("derive", "print a partial-derivative generating function");
  derive_cmd->add_option("-p", dp, "order in x")->required();
  derive_cmd->add_option("-q", dq, "order in y")->required();
  derive_cmd->add_option("--variant", variant, "cr-nl, i-nl, cr-e or i-e");
  auto* expand_cmd =
      app.add_subcommand("expand", "print per-subset summands of an expansion family");
  expand_cmd->add_option("--family", family, "1, 2, 3, 3b, 3c, 3d, 3e, 4 or 5")->required();
  auto* partition_cmd = app.add_subcommand("partition", "print the Dawson intervals");
  auto* fivevar_cmd = app.add_subcommand("fivevar", "print the five-variable expansion");
  auto* verify_cmd = app.add_subcommand("verify", "run the verification harness");
  verify_cmd->add_option("--checks", checks, "comma-separated check names, or 'all'");
  verify_cmd->add_option("--seed", seed, "seed for extra random instances");
  verify_cmd->add_option("--random", random_count, "number of extra random instances");
  auto* table_cmd = app.add_subcommand("table", "emit a table reproduction as CSV");
  table_cmd->add_option("--which", which, "table number 1-5")->required();

  for (auto* cmd : {tutte_cmd, derive_cmd, expand_cmd, partition_cmd, fivevar_cmd,
                    verify_cmd, table_cmd}) {
    cmd->add_option("file", file, "input document")->required();
    cmd->fallthrough();  // lets --json appear after the subcommand too
  }

  std::vector<std::string> argv_store = args;
  std::vector<char*> argv;
  std::string prog = "mptutte";
  argv.push_back(prog.data());
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App* cmd = app.get_subcommands().front();
  nlohmann::json result;
  std::ostringstream text;
  int exit_code = 0;
  try {
    const input_document doc = parse_document(read_file(file), file);
    const perspective p = doc.to_perspective();

    if (cmd == tutte_cmd) {
      const std::string s = tutte_corank_nullity(p).str();
      text << s << "\n";
      result = s;
    } else if (cmd == derive_cmd) {
      const std::string s =
          derivative_gf(p, dp, dq, derivative_variant_from(variant)).str();
      text << s << "\n";
      result = s;
    } else if (cmd == expand_cmd) {
      const expansion e = expansion_family(p, expansion_family_from(family));
      nlohmann::json summands = nlohmann::json::array();
      for (const auto& s : e.summands) {
        text << p.ground().render(s.set) << ": " << s.value.str() << "\n";
        summands.push_back({{"subset", p.ground().render(s.set)}, {"value", s.value.str()}});
      }
      text << "total: " << e.total.str() << "\n";
      result = {{"family", family}, {"summands", summands}, {"total", e.total.str()}};
    } else if (cmd == partition_cmd) {
      nlohmann::json intervals = nlohmann::json::array();
      for (const auto& iv : p.dawson_partition()) {
        text << "witness " << p.ground().render(iv.witness) << " -> ["
             << p.ground().render(iv.bottom) << ", " << p.ground().render(iv.top) << "]\n";
        intervals.push_back({{"witness", p.ground().render(iv.witness)},
                             {"bottom", p.ground().render(iv.bottom)},
                             {"top", p.ground().render(iv.top)}});
      }
      result = intervals;
    } else if (cmd == fivevar_cmd) {
      const std::string s = five_var(p).str();
      text << s << "\n";
      result = s;
    } else if (cmd == verify_cmd) {
      const auto selection = detail::split_names(checks);
      verification_report report = run_checks(p, selection, file);
      for (int i = 1; i <= random_count; ++i) {
        const std::uint64_t s = seed + i;
        const int n = 3 + static_cast<int>(s % 6);
        const random_kind kind = (i % 2 == 0) ? random_kind::perspective : random_kind::matroid;
        const perspective rp = random_instance(s, n, kind);
        std::string label = (kind == random_kind::perspective ? "random perspective seed "
                                                              : "random matroid seed ") +
                            std::to_string(s);
        verification_report extra = run_checks(rp, selection, label);
        for (auto& c : extra.checks) report.checks.push_back(std::move(c));
      }
      detail::print_report(report, text);
      result = detail::report_json(report);
      if (!report.all_pass()) exit_code = 2;
    } else if (cmd == table_cmd) {
      const std::string csv = table_csv(p, which);
      text << csv;
      result = {{"which", which}, {"csv", csv}};
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (json) {
    nlohmann::json doc = {{"command", cmd->get_name()}, {"input", file}, {"result", result}};
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return exit_code;
}

}  // namespace mptutte
