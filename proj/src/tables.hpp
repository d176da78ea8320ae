#ifndef DIFUN_TABLES_HPP_
#define DIFUN_TABLES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "combinatorics.hpp"

namespace difun {

enum class TableFormat { Text, Csv, Json };

std::optional<TableFormat> parse_table_format(const std::string& name);

// Row n holds rank(I_r) for r = 0..n. Rows 0 and 1 sit outside the closed
// formulas and carry directly verified constants; everything above comes
// from the rank reports.
std::vector<std::vector<BigCount>> ideal_rank_table(int max_n);

// rank(D_n) for n = 0..max_n, same small-case convention.
std::vector<BigCount> full_rank_row(int max_n);

// Both tables rendered together. Output is deterministic; counts appear
// as plain decimals (JSON renders them as strings, since they outgrow the
// integer range JSON consumers can be trusted with). 2 <= max_n <= 30.
std::string render_tables(int max_n, TableFormat format);

}  // namespace difun

#endif  // DIFUN_TABLES_HPP_
