#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <difun/difun.h>

namespace {

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { difun_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

// The status enum doubles as the exit-code contract for its first four
// values; everything else is a usage problem.
int exit_code(difun_status status) {
  switch (status) {
    case DIFUN_OK: return 0;
    case DIFUN_ERROR_VERIFICATION: return 1;
    case DIFUN_ERROR_BUDGET: return 3;
    default: return 2;
  }
}

int report_failure(const std::string& what, difun_status status) {
  std::cerr << what << ": " << difun_last_error() << '\n';
  return exit_code(status);
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open output file: " << out_path << '\n';
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"difunctional binary relation semigroup toolkit"};
  app.require_subcommand(1);

  int max_n = 10;
  std::string format = "text";
  auto* tables = app.add_subcommand(
      "tables", "print the rank tables for ideals and whole semigroups");
  tables->add_option("--max-n", max_n, "largest ground set (2..30)");
  tables->add_option("--format", format, "text, csv, or json");

  int verify_n = 2;
  std::string depth = "formula";
  std::uint64_t budget = 0;
  bool verify_json = false;
  auto* verify = app.add_subcommand(
      "verify", "run the verification suite at a chosen depth");
  verify->add_option("--n", verify_n, "ground set size")->required();
  verify->add_option("--depth", depth,
                     "formula, closure (n <= 4), or exhaustive (n <= 3)");
  verify->add_option("--budget", budget, "max block products (0 = unlimited)");
  verify->add_flag("--json", verify_json, "emit the report as JSON");

  int enum_n = 2;
  int enum_r = -1;
  bool ideal = false;
  std::string out_path;
  auto* enumerate = app.add_subcommand(
      "enumerate", "list elements as JSON, one per line, with a count");
  enumerate->add_option("--n", enum_n, "ground set size (1..5)")->required();
  enumerate->add_option("--r", enum_r, "rank; omit for every element");
  enumerate->add_flag("--ideal", ideal,
                      "take the whole ideal of rank <= r, not just rank = r");
  enumerate->add_option("--out", out_path, "write here instead of stdout");

  int rank_n = 2;
  int rank_r = 0;
  auto* rank = app.add_subcommand(
      "rank", "print the rank report for the ideal of rank <= r");
  rank->add_option("--n", rank_n, "ground set size")->required();
  rank->add_option("--r", rank_r, "ideal level")->required();

  std::string gens_path;
  std::string closure_out;
  std::uint64_t closure_budget = 0;
  auto* closure = app.add_subcommand(
      "closure", "close a JSON array of generators under the block product");
  closure->add_option("--gens", gens_path, "path to the generator file")
      ->required();
  closure->add_option("--budget", closure_budget,
                      "max block products (0 = unlimited)");
  closure->add_option("--out", closure_out, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (tables->parsed()) {
    OwnedString text;
    difun_status status = difun_render_tables(max_n, format.c_str(), &text.ptr);
    if (status != DIFUN_OK) return report_failure("tables", status);
    return emit(text.str(), "");
  }

  if (verify->parsed()) {
    OwnedString report;
    difun_status status = difun_verify(verify_n, depth.c_str(), budget,
                                       verify_json ? 1 : 0, &report.ptr);
    if (report.ptr) std::cout << report.str();
    if (status != DIFUN_OK) {
      std::cerr << "verify: " << difun_last_error() << '\n';
      return exit_code(status);
    }
    return 0;
  }

  if (enumerate->parsed()) {
    OwnedString text;
    difun_status status =
        difun_enumerate_json(enum_n, enum_r, ideal ? 1 : 0, &text.ptr);
    if (status != DIFUN_OK) return report_failure("enumerate", status);
    return emit(text.str(), out_path);
  }

  if (rank->parsed()) {
    OwnedString text;
    difun_status status = difun_rank_report_json(rank_n, rank_r, &text.ptr);
    if (status != DIFUN_OK) return report_failure("rank", status);
    return emit(text.str() + "\n", "");
  }

  if (closure->parsed()) {
    std::ifstream in(gens_path);
    if (!in) {
      std::cerr << "cannot read generator file: " << gens_path << '\n';
      return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    OwnedString text;
    difun_status status =
        difun_closure_json(buffer.str().c_str(), closure_budget, &text.ptr);
    if (status != DIFUN_OK) return report_failure("closure", status);
    return emit(text.str(), closure_out);
  }

  return 2;
}
