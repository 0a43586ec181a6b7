#pragma once

#include "eulersum/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eulersum {

// One emitted row: both Dedekind-type sums for (p, a, b) plus the two
// reciprocity sides when they apply (p >= 1, odd coprime pair).
struct TableRow {
    unsigned p = 0;
    std::int64_t a = 1;
    std::int64_t b = 1;
    Rational t_value;
    std::optional<Rational> s_value;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    std::optional<bool> holds;
};

std::vector<TableRow> make_table_rows(const std::vector<unsigned>& p_list,
                                      const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs);

// Columns p,a,b,T,S,lhs,rhs,holds in that order; rationals quoted as
// "num/den" strings, inapplicable fields left empty.
void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);

// Array of flat records with the same field names; inapplicable fields null.
void write_table_json(std::ostream& os, const std::vector<TableRow>& rows);

// "1,3..5" -> {1,3,4,5}
std::vector<unsigned> parse_p_list(const std::string& text);

// "5:3,3:5" -> {(5,3),(3,5)}
std::vector<std::pair<std::int64_t, std::int64_t>> parse_pair_list(const std::string& text);

}  // namespace eulersum
