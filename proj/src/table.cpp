#include "eulersum/table.hpp"

#include "eulersum/sums.hpp"

#include <json.hpp>

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace eulersum {

std::vector<TableRow> make_table_rows(
    const std::vector<unsigned>& p_list,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
    std::vector<TableRow> rows;
    rows.reserve(p_list.size() * pairs.size());
    for (const unsigned p : p_list) {
        for (const auto& [a, b] : pairs) {
            TableRow row;
            row.p = p;
            row.a = a;
            row.b = b;
            row.t_value = apostol_dedekind_sum(p, a, b);
            if (p >= 1) {
                row.s_value = generalized_dedekind_sum(p, a, b);
                if (a % 2 == 1 && b % 2 == 1 && std::gcd(a, b) == 1) {
                    const ReciprocityReport rep = reciprocity_sides(p, a, b);
                    row.lhs = rep.lhs;
                    row.rhs = rep.rhs;
                    row.holds = rep.holds;
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
    os << "p,a,b,T,S,lhs,rhs,holds\n";
    for (const auto& row : rows) {
        os << row.p << ',' << row.a << ',' << row.b << ',';
        os << '"' << row.t_value.str() << '"' << ',';
        if (row.s_value) {
            os << '"' << row.s_value->str() << '"';
        }
        os << ',';
        if (row.lhs) {
            os << '"' << row.lhs->str() << '"';
        }
        os << ',';
        if (row.rhs) {
            os << '"' << row.rhs->str() << '"';
        }
        os << ',';
        if (row.holds) {
            os << (*row.holds ? "true" : "false");
        }
        os << '\n';
    }
}

void write_table_json(std::ostream& os, const std::vector<TableRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json rec;
        rec["p"] = row.p;
        rec["a"] = row.a;
        rec["b"] = row.b;
        rec["T"] = row.t_value.str();
        rec["S"] = row.s_value ? nlohmann::ordered_json(row.s_value->str())
                               : nlohmann::ordered_json(nullptr);
        rec["lhs"] =
            row.lhs ? nlohmann::ordered_json(row.lhs->str()) : nlohmann::ordered_json(nullptr);
        rec["rhs"] =
            row.rhs ? nlohmann::ordered_json(row.rhs->str()) : nlohmann::ordered_json(nullptr);
        rec["holds"] = row.holds ? nlohmann::ordered_json(*row.holds)
                                 : nlohmann::ordered_json(nullptr);
        arr.push_back(std::move(rec));
    }
    os << arr.dump(2) << '\n';
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find(sep, start);
        if (end == std::string::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

long parse_long(const std::string& text) {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) {
        throw std::invalid_argument("trailing characters in integer \"" + text + "\"");
    }
    return v;
}

}  // namespace

std::vector<unsigned> parse_p_list(const std::string& text) {
    std::vector<unsigned> out;
    if (text.empty()) {
        return out;
    }
    for (const auto& item : split(text, ',')) {
        const std::size_t dots = item.find("..");
        if (dots == std::string::npos) {
            const long v = parse_long(item);
            if (v < 0) {
                throw std::invalid_argument("p values must be nonnegative");
            }
            out.push_back(static_cast<unsigned>(v));
            continue;
        }
        const long lo = parse_long(item.substr(0, dots));
        const long hi = parse_long(item.substr(dots + 2));
        if (lo < 0 || hi < lo) {
            throw std::invalid_argument("bad p range \"" + item + "\"");
        }
        for (long v = lo; v <= hi; ++v) {
            out.push_back(static_cast<unsigned>(v));
        }
    }
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_pair_list(const std::string& text) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (text.empty()) {
        return out;
    }
    for (const auto& item : split(text, ',')) {
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("pair \"" + item + "\" must look like a:b");
        }
        out.emplace_back(parse_long(item.substr(0, colon)), parse_long(item.substr(colon + 1)));
    }
    return out;
}

}  // namespace eulersum
