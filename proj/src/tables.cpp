#include "tables.hpp"

#include <json.hpp>
#include <sstream>

#include "errors.hpp"
#include "generators.hpp"

namespace difun {

namespace {

void check_max_n(int max_n) {
  if (max_n < 2 || max_n > 30)
    throw DomainError("tables cover 2 <= max_n <= 30");
}

// Ground sets of size 0 and 1 fall outside the closed formulas (the n = 1
// value they would give is off by one); these are the true ranks, fixed by
// exhaustive search over the handful of elements involved.
const BigCount kTinyFullRanks[2] = {BigCount(1), BigCount(2)};

std::vector<BigCount> tiny_ideal_row(int n) {
  if (n == 0) return {BigCount(1)};
  return {BigCount(1), BigCount(2)};
}

}  // namespace

std::optional<TableFormat> parse_table_format(const std::string& name) {
  if (name == "text") return TableFormat::Text;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  return std::nullopt;
}

std::vector<std::vector<BigCount>> ideal_rank_table(int max_n) {
  check_max_n(max_n);
  std::vector<std::vector<BigCount>> rows;
  for (int n = 0; n <= max_n; ++n) {
    if (n <= 1) {
      rows.push_back(tiny_ideal_row(n));
      continue;
    }
    std::vector<BigCount> row;
    for (int r = 0; r <= n; ++r) row.push_back(rank_report(n, r).rank);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BigCount> full_rank_row(int max_n) {
  check_max_n(max_n);
  std::vector<BigCount> out = {kTinyFullRanks[0], kTinyFullRanks[1]};
  for (int n = 2; n <= max_n; ++n) out.push_back(rank_report(n, n).rank);
  return out;
}

std::string render_tables(int max_n, TableFormat format) {
  auto ideal = ideal_rank_table(max_n);
  auto full = full_rank_row(max_n);

  if (format == TableFormat::Json) {
    nlohmann::json ideal_json = nlohmann::json::array();
    for (const auto& row : ideal) {
      nlohmann::json entries = nlohmann::json::array();
      for (const auto& v : row) entries.push_back(v.str());
      ideal_json.push_back(std::move(entries));
    }
    nlohmann::json full_json = nlohmann::json::array();
    for (const auto& v : full) full_json.push_back(v.str());
    nlohmann::json doc = {{"max_n", max_n},
                          {"ideal_ranks", std::move(ideal_json)},
                          {"full_ranks", std::move(full_json)}};
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << "# rank(I_r) in D_n; one row per n, entries r = 0..n\n";
    for (int n = 0; n <= max_n; ++n) {
      out << n;
      for (const auto& v : ideal[static_cast<std::size_t>(n)])
        out << ',' << v.str();
      out << '\n';
    }
    out << "\n# rank(D_n); rows are n,value\n";
    for (int n = 0; n <= max_n; ++n)
      out << n << ',' << full[static_cast<std::size_t>(n)].str() << '\n';
    return out.str();
  }

  // Aligned text: column width fits the largest entry in either table.
  std::size_t width = 1;
  for (const auto& row : ideal)
    for (const auto& v : row) width = std::max(width, v.str().size());
  for (const auto& v : full) width = std::max(width, v.str().size());

  out << "rank of the ideal of rank <= r (rows n = 0.." << max_n
      << ", columns r)\n";
  out << "  n\\r";
  for (int r = 0; r <= max_n; ++r) {
    out << ' ';
    std::string head = std::to_string(r);
    out << std::string(width > head.size() ? width - head.size() : 0, ' ')
        << head;
  }
  out << '\n';
  for (int n = 0; n <= max_n; ++n) {
    std::string label = std::to_string(n);
    out << std::string(label.size() >= 5 ? 0 : 5 - label.size(), ' ') << label;
    for (const auto& v : ideal[static_cast<std::size_t>(n)]) {
      std::string s = v.str();
      out << ' ' << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }

  out << "\nrank of the whole semigroup\n";
  for (int n = 0; n <= max_n; ++n) {
    std::string label = std::to_string(n);
    out << std::string(label.size() >= 5 ? 0 : 5 - label.size(), ' ') << label
        << ' ' << full[static_cast<std::size_t>(n)].str() << '\n';
  }
  return out.str();
}

}  // namespace difun
