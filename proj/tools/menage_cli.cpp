// Command-line front end: sequence tables, fixed-seat queries, the
// straight-table variant, constancy scans, rook polynomials of user-supplied
// boards, and the cross-identity verification suite.
//
// Exit codes: 0 ok, 1 mismatch (an identity or cross-check failed),
// 2 usage or parse error.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "menage/menage.hpp"
#include "menage/output.hpp"
#include "menage/problem3.hpp"
#include "menage/verify.hpp"

namespace {

using menage::BinaryMatrix;
using menage::Int;
using menage::OutputDocument;
using menage::Record;
using menage::RyserOptions;
using menage::Value;

struct GlobalOptions {
  std::string format = "plain";
  unsigned parallel = 1;

  RyserOptions ryser() const { return RyserOptions{.threads = parallel}; }
};

int emit(const OutputDocument& doc, const GlobalOptions& global) {
  std::cout << menage::render(doc, global.format);
  return menage::exit_code_for(doc);
}

OutputDocument error_document(const std::string& command, const std::string& message) {
  OutputDocument doc;
  doc.command = command;
  doc.params.emplace_back("message", Value::from_text(message));
  doc.status = "error";
  return doc;
}

std::vector<std::string> parse_methods(const std::string& methods) {
  std::vector<std::string> requested;
  std::string current;
  for (char c : methods + ",") {
    if (c == ',') {
      if (!current.empty()) requested.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  // Canonical column order, independent of how the request was spelled.
  std::vector<std::string> ordered;
  for (const char* name : {"touchard", "cayley", "permanent"}) {
    if (std::find(requested.begin(), requested.end(), name) != requested.end()) {
      ordered.push_back(name);
    }
  }
  if (ordered.size() != requested.size()) {
    throw std::invalid_argument("methods must be a comma list from {touchard, cayley, permanent}");
  }
  if (ordered.empty()) {
    throw std::invalid_argument("at least one method is required");
  }
  return ordered;
}

int run_table(int min_n, int max_n, const std::string& methods, const GlobalOptions& global) {
  const std::vector<std::string> selected = parse_methods(methods);
  const bool wants_permanent =
      std::find(selected.begin(), selected.end(), "permanent") != selected.end();
  if (min_n < 2 || min_n > max_n) {
    throw std::invalid_argument("need 2 <= min <= max");
  }
  if (max_n > (wants_permanent ? 28 : 100)) {
    throw std::invalid_argument(wants_permanent ? "max must be <= 28 with the permanent method"
                                                : "max must be <= 100");
  }

  OutputDocument doc;
  doc.command = "table";
  doc.params.emplace_back("min", Value::from_int(min_n));
  doc.params.emplace_back("max", Value::from_int(max_n));
  std::string joined;
  for (const auto& m : selected) joined += (joined.empty() ? "" : ",") + m;
  doc.params.emplace_back("methods", Value::from_text(joined));

  for (int n = min_n; n <= max_n; ++n) {
    Record row;
    row.emplace_back("n", Value::from_int(n));
    std::vector<Int> values;
    for (const auto& method : selected) {
      Int u;
      if (method == "touchard") {
        u = menage::touchard_u(n);
      } else if (method == "cayley") {
        u = menage::cayley_h(n);
      } else {
        u = menage::u_via_permanent(n, global.ryser());
      }
      row.emplace_back("u_" + method, Value::from_int(u));
      values.push_back(std::move(u));
    }
    for (const Int& v : values) {
      if (v != values.front()) doc.status = "mismatch";
    }
    row.emplace_back("m_total", Value::from_int(2 * menage::factorial(n) * values.front()));
    doc.rows.push_back(std::move(row));
  }
  return emit(doc, global);
}

int run_fixed_seat(int n, int r, const std::string& method, const GlobalOptions& global) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  if (r != 0 && (r < 3 || r > n)) throw std::invalid_argument("r must be in [3, n]");
  const bool wants_permanent = method != "formula";
  if (wants_permanent && n > 29) {
    throw std::invalid_argument("n must be <= 29 with the permanent method");
  }

  OutputDocument doc;
  doc.command = "fixed-seat";
  doc.params.emplace_back("n", Value::from_int(n));
  doc.params.emplace_back("r", r ? Value::from_int(r) : Value::from_text("all"));
  doc.params.emplace_back("method", Value::from_text(method));

  const int r_first = r ? r : 3;
  const int r_last = r ? r : n;
  for (int seat = r_first; seat <= r_last; ++seat) {
    Record row;
    row.emplace_back("n", Value::from_int(n));
    row.emplace_back("r", Value::from_int(seat));
    row.emplace_back("distance", Value::from_int(seat - 1));
    Int by_formula;
    Int by_permanent;
    if (method != "permanent") {
      by_formula = menage::fixed_seat_count(n, seat);
      row.emplace_back("count_formula", Value::from_int(by_formula));
    }
    if (method != "formula") {
      by_permanent =
          menage::permanent_ryser(minor(menage::menage_matrix(n), 1, seat), global.ryser());
      row.emplace_back("count_permanent", Value::from_int(by_permanent));
    }
    if (method == "both" && by_formula != by_permanent) {
      doc.status = "mismatch";
    }
    doc.rows.push_back(std::move(row));
  }
  return emit(doc, global);
}

int run_straight(int n, int r, const GlobalOptions& global) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  if (r < 3 || r > n) throw std::invalid_argument("r must be in [3, n]");
  if (n > 29) throw std::invalid_argument("n must be <= 29");

  OutputDocument doc;
  doc.command = "straight";
  doc.params.emplace_back("n", Value::from_int(n));
  doc.params.emplace_back("r", Value::from_int(r));

  const Int by_formula = menage::straight_table_count(n, r);
  const Int by_permanent = menage::permanent_ryser(
      menage::complement_in_J(menage::submatrix_B(n, r)), global.ryser());
  if (by_formula != by_permanent) doc.status = "mismatch";

  Record row;
  row.emplace_back("n", Value::from_int(n));
  row.emplace_back("r", Value::from_int(r));
  row.emplace_back("count_formula", Value::from_int(by_formula));
  row.emplace_back("count_permanent", Value::from_int(by_permanent));
  doc.rows.push_back(std::move(row));
  return emit(doc, global);
}

int run_problem3(int min_n, int max_n, const GlobalOptions& global) {
  const auto reports = menage::scan(min_n, max_n, menage::kDefaultScanGuard, global.parallel);

  OutputDocument doc;
  doc.command = "problem3";
  doc.params.emplace_back("min", Value::from_int(min_n));
  doc.params.emplace_back("max", Value::from_int(max_n));

  std::vector<Int> constant_n;
  for (const auto& report : reports) {
    Record row;
    row.emplace_back("n", Value::from_int(report.n));
    row.emplace_back("is_constant", Value::from_bool(report.is_constant));
    row.emplace_back("common_value", report.common_value ? Value::from_int(*report.common_value)
                                                         : Value::from_text(""));
    row.emplace_back("divides", Value::from_bool(report.divides));
    row.emplace_back("quotient",
                     report.quotient ? Value::from_int(*report.quotient) : Value::from_text(""));
    std::vector<std::pair<std::string, std::string>> counts;
    for (const auto& [r, value] : report.counts) {
      counts.emplace_back(std::to_string(r), menage::to_decimal(value));
    }
    row.emplace_back("counts", Value::from_pairs(std::move(counts)));
    doc.rows.push_back(std::move(row));
    if (report.is_constant) constant_n.emplace_back(report.n);
  }
  Record summary;
  summary.emplace_back("n", Value::from_text("summary"));
  summary.emplace_back("constant_n", Value::from_int_list(constant_n));
  doc.rows.push_back(std::move(summary));
  return emit(doc, global);
}

int run_rook(const std::string& path, const GlobalOptions& global) {
  const BinaryMatrix m = menage::read_matrix_file(path);
  const menage::RookPolynomial poly = menage::rook_polynomial(m);

  OutputDocument doc;
  doc.command = "rook";
  doc.params.emplace_back("file", Value::from_text(path));
  Record row;
  row.emplace_back("rows", Value::from_int(m.rows()));
  row.emplace_back("cols", Value::from_int(m.cols()));
  row.emplace_back("coefficients", Value::from_int_list(poly.coefficients()));
  doc.rows.push_back(std::move(row));
  return emit(doc, global);
}

int run_verify(int max_n, const GlobalOptions& global) {
  if (max_n < 0 || max_n > 18) throw std::invalid_argument("max-n must be in [0, 18]");
  const auto families = menage::run_verification(max_n, global.parallel);

  OutputDocument doc;
  doc.command = "verify";
  doc.params.emplace_back("max_n", Value::from_int(max_n));
  long long total_failures = 0;
  for (const auto& family : families) {
    Record row;
    row.emplace_back("family", Value::from_text(family.family));
    row.emplace_back("checks", Value::from_int(family.checks));
    row.emplace_back("failures", Value::from_int(family.failures));
    row.emplace_back("first_failure", Value::from_text(family.first_failure));
    doc.rows.push_back(std::move(row));
    total_failures += family.failures;
  }
  if (total_failures > 0) doc.status = "mismatch";
  return emit(doc, global);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact menage counts, fixed-seat permanents, and rook polynomials"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_option("--parallel", global.parallel, "Worker count for permanent sweeps and scans")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();

  int table_min = 2, table_max = 12;
  std::string table_methods = "touchard,cayley,permanent";
  CLI::App* table = app.add_subcommand("table", "U_n and M_n over a range of n");
  table->add_option("--min", table_min)->capture_default_str();
  table->add_option("--max", table_max)->capture_default_str();
  table->add_option("--methods", table_methods, "Comma list from {touchard, cayley, permanent}")
      ->capture_default_str();

  int fs_n = 0, fs_r = 0;
  std::string fs_method = "both";
  CLI::App* fixed_seat =
      app.add_subcommand("fixed-seat", "Seatings of the other men once man 1 takes chair r");
  fixed_seat->add_option("--n", fs_n, "Number of couples")->required();
  fixed_seat->add_option("--r", fs_r, "Chair in [3, n]; omit for all chairs");
  fixed_seat->add_option("--method", fs_method)
      ->check(CLI::IsMember({"formula", "permanent", "both"}))
      ->capture_default_str();

  int st_n = 0, st_r = 0;
  CLI::App* straight = app.add_subcommand("straight", "Straight-table variant of fixed-seat");
  straight->add_option("--n", st_n)->required();
  straight->add_option("--r", st_r)->required();

  int p3_min = 3, p3_max = 12;
  CLI::App* problem3 =
      app.add_subcommand("problem3", "Scan for n where the fixed-seat count ignores the chair");
  problem3->add_option("--min", p3_min)->capture_default_str();
  problem3->add_option("--max", p3_max)->capture_default_str();

  std::string rook_file;
  CLI::App* rook = app.add_subcommand("rook", "Rook polynomial of a (0,1) matrix file");
  rook->add_option("--file", rook_file, "Matrix in the text format (\"R C\" header, 0/1 rows)")
      ->required();

  int verify_max_n = 12;
  CLI::App* verify = app.add_subcommand("verify", "Run every cross-identity family");
  verify->add_option("--max-n", verify_max_n)->capture_default_str();

  std::string active = "";
  try {
    app.parse(argc, argv);
    if (*table) return run_table(table_min, table_max, table_methods, global);
    if (*fixed_seat) return run_fixed_seat(fs_n, fs_r, fs_method, global);
    if (*straight) return run_straight(st_n, st_r, global);
    if (*problem3) return run_problem3(p3_min, p3_max, global);
    if (*rook) return run_rook(rook_file, global);
    if (*verify) return run_verify(verify_max_n, global);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    for (CLI::App* sub : app.get_subcommands()) active = sub->get_name();
    std::cout << menage::render(error_document(active.empty() ? "menage" : active, e.what()),
                                global.format);
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
