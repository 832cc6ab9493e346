// cosr: command-line front end for the row-deletion COP solver.
//
// Exit status: 0 = YES, 1 = NO, 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cosr/cop.hpp"
#include "cosr/error.hpp"
#include "cosr/interval.hpp"
#include "cosr/matrix_io.hpp"
#include "cosr/oracle.hpp"
#include "cosr/solver.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

template <class Seq>
std::string join(const Seq& xs) {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : xs) {
    out << (first ? "" : " ") << x;
    first = false;
  }
  return out.str();
}

std::string stats_lines(const cosr::SolveStats& s) {
  std::ostringstream out;
  out << "# branching_nodes: " << s.branching_nodes << '\n'
      << "# leaves: " << s.leaves << '\n'
      << "# helly_branches: " << s.helly_branches << '\n'
      << "# hole_branches: " << s.hole_branches << '\n'
      << "# clique_branches: " << s.clique_branches << '\n';
  return out.str();
}

cosr::BipartiteGraph read_bipartite(const std::string& path) {
  auto file = cosr::parse_graph(read_input(path));
  if (!file.sides) throw cosr::ParseError(1, "bipartite input needs a 'sides k' line");
  return cosr::BipartiteGraph{std::move(file.graph), *file.sides};
}

// Checks a solve report (YES, rows, order) against the matrix it claims to
// solve.
bool verify_report(const cosr::BinaryMatrix& m, const std::string& report, int d) {
  std::istringstream in(report);
  std::string verdict, rows_line, order_line;
  std::getline(in, verdict);
  if (verdict != "YES") return false;
  std::getline(in, rows_line);
  std::getline(in, order_line);
  cosr::RowSet rows;
  {
    std::istringstream r(rows_line);
    for (int x; r >> x;) rows.insert(x);
  }
  cosr::ColumnPermutation perm;
  {
    std::istringstream o(order_line);
    for (int x; o >> x;) perm.order.push_back(x);
  }
  if (d >= 0 && rows.size() > static_cast<std::size_t>(d)) return false;
  try {
    return cosr::verify_cop(cosr::delete_rows(m, rows), perm);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for deleting at most d rows to reach the consecutive ones property"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output;
  int d = -1;
  bool stats = false;

  auto add_common = [&](CLI::App* sub, bool budget) {
    sub->add_option("input", input, "Instance file, '-' for standard input")->capture_default_str();
    sub->add_option("-o,--output", output, "Write output here instead of standard output");
    if (budget) sub->add_option("-d,--d", d, "Deletion budget")->required()->check(CLI::NonNegativeNumber);
  };

  auto* check = app.add_subcommand("check-cop", "Test a matrix for the consecutive ones property");
  add_common(check, false);

  auto* solve = app.add_subcommand("solve", "Delete at most d rows to reach consecutive ones");
  add_common(solve, true);
  solve->add_flag("--stats", stats, "Append '# key: value' search statistics");

  auto* idel = app.add_subcommand("interval-deletion", "Delete at most d vertices to reach an interval graph");
  add_common(idel, true);

  auto* convex = app.add_subcommand("convex-bipartite", "Delete at most d V1 vertices to reach a convex bipartite graph");
  add_common(convex, true);
  convex->add_flag("--stats", stats, "Append '# key: value' search statistics");

  auto* oracle = app.add_subcommand("oracle", "Brute-force counterparts of check-cop, solve and interval-deletion");
  oracle->require_subcommand(1);
  auto* o_check = oracle->add_subcommand("check-cop", "Exhaustive COP search");
  add_common(o_check, false);
  auto* o_solve = oracle->add_subcommand("solve", "Exhaustive row-deletion search");
  add_common(o_solve, true);
  auto* o_idel = oracle->add_subcommand("interval-deletion", "Exhaustive vertex-deletion search");
  add_common(o_idel, true);

  std::size_t rows = 0, cols = 0;
  double density = 0.5;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Write a seeded random matrix");
  gen->add_option("--rows", rows, "Row count")->required();
  gen->add_option("--cols", cols, "Column count")->required();
  gen->add_option("--density", density, "Probability of a 1")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gen->add_option("--seed", seed, "PRNG seed (mt19937_64)")->capture_default_str();
  gen->add_option("-o,--output", output, "Write output here instead of standard output");

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Check a solve report against its matrix");
  verify->add_option("matrix", input, "Matrix file")->required();
  verify->add_option("report", report_path, "Report produced by solve, '-' for standard input")->required();
  verify->add_option("-d,--d", d, "Also require at most d deleted rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  std::ostringstream out;
  int status = kYes;
  try {
    if (*check) {
      auto m = cosr::parse_matrix(read_input(input));
      if (auto p = cosr::cop_order(m)) {
        out << "YES\n" << join(p->order) << '\n';
      } else {
        out << "NO\n";
        status = kNo;
      }
    } else if (*solve) {
      auto m = cosr::parse_matrix(read_input(input));
      auto report = cosr::cos_r(m, d);
      out << cosr::format_report(report);
      if (stats) out << stats_lines(report.stats);
      status = report.feasible ? kYes : kNo;
    } else if (*idel) {
      auto g = cosr::parse_graph(read_input(input)).graph;
      if (auto v = cosr::interval_deletion(g, d)) {
        out << "YES\n" << join(*v) << '\n';
      } else {
        out << "NO\n";
        status = kNo;
      }
    } else if (*convex) {
      auto b = read_bipartite(input);
      auto report = cosr::convex_bipartite_deletion(b, d);
      out << cosr::format_report(report);
      if (stats) out << stats_lines(report.stats);
      status = report.feasible ? kYes : kNo;
    } else if (*oracle) {
      if (*o_check) {
        auto m = cosr::parse_matrix(read_input(input));
        if (auto p = cosr::oracle::brute_cop(m)) {
          out << "YES\n" << join(p->order) << '\n';
        } else {
          out << "NO\n";
          status = kNo;
        }
      } else if (*o_solve) {
        auto m = cosr::parse_matrix(read_input(input));
        cosr::SolveReport report;
        if (auto rows_found = cosr::oracle::brute_cosr(m, d)) {
          report.feasible = true;
          report.solution = *rows_found;
          report.certificate = *cosr::oracle::brute_cop(cosr::delete_rows(m, *rows_found));
        }
        out << cosr::format_report(report);
        status = report.feasible ? kYes : kNo;
      } else if (*o_idel) {
        auto g = cosr::parse_graph(read_input(input)).graph;
        if (auto v = cosr::oracle::brute_interval_deletion(g, d)) {
          out << "YES\n" << join(*v) << '\n';
        } else {
          out << "NO\n";
          status = kNo;
        }
      }
    } else if (*gen) {
      out << cosr::serialize_matrix(cosr::oracle::random_instance(seed, rows, cols, density));
    } else if (*verify) {
      auto m = cosr::parse_matrix(read_input(input));
      const bool ok = verify_report(m, read_input(report_path), d);
      out << (ok ? "VALID\n" : "INVALID\n");
      status = ok ? kYes : kNo;
    }
  } catch (const cosr::ParseError& e) {
    std::cerr << "cosr: parse error: " << e.what() << '\n';
    return kError;
  } catch (const cosr::OracleRefusal& e) {
    std::cerr << "cosr: oracle refused: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "cosr: " << e.what() << '\n';
    return kError;
  }

  if (output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      std::cerr << "cosr: cannot write " << output << '\n';
      return kError;
    }
    file << out.str();
  }
  return status;
}
