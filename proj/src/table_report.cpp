#include "sctd/table_report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace sctd {

namespace {

// "33-64,97,99" -> {33..64, 97, 99}
std::vector<int> expand_ranges(const std::string& spec)
{
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (const auto dash = part.find('-'); dash != std::string::npos) {
            const int lo = std::stoi(part.substr(0, dash));
            const int hi = std::stoi(part.substr(dash + 1));
            for (int i = lo; i <= hi; ++i) out.push_back(i);
        } else {
            out.push_back(std::stoi(part));
        }
    }
    return out;
}

}  // namespace

const std::vector<Table1Row>& table1_rows()
{
    static const std::vector<Table1Row> rows = [] {
        std::vector<Table1Row> r;
        r.push_back({"Always-survivors if U = 1", "A1 | A4", 192,
                     expand_ranges("33-64,97-256")});
        r.push_back({"Always-survivors among whom SACE_u=1 is null",
                     "(A1 | A4) & ((B1 | B4) | (!B2 & !B6))", 156,
                     expand_ranges("33,35,36,39-49,51,52,55-64,97,99,100,103-113,115,"
                                   "116,119-129,131,132,135-145,147,148,151-161,163,"
                                   "164,167-177,179,180,183-193,195,196,199-209,211,"
                                   "212,215-225,227,228,231-241,243,244,247-256")});
        r.push_back({"Always-survivors if U = 0", "A1", 128, expand_ranges("129-256")});
        r.push_back({"Always-survivors among whom SACE_u=0 is null",
                     "A1 & (B1 | !B2)", 96,
                     expand_ranges("129-132,137-148,153-164,169-180,185-196,201-212,"
                                   "217-228,233-244,249-256")});
        r.push_back({"Always-survivors if U = 1 but not if U = 0", "!A1 & A4", 64,
                     expand_ranges("33-64,97-128")});
        r.push_back({"Always-survivors if U = 1 but never-survivors if U = 0",
                     "!A1 & !A2 & A4", 32, expand_ranges("33-64")});
        r.push_back({"Always-survivors if U = 1 but protectable if U = 0",
                     "!A1 & A2 & A4", 32, expand_ranges("97-128")});
        return r;
    }();
    return rows;
}

std::vector<Table1Check> verify_table1()
{
    std::vector<Table1Check> checks;
    for (const auto& row : table1_rows()) {
        Table1Check check;
        check.row = row;
        check.actual_indices = count_types(Predicate::parse(row.predicate_text));
        check.actual_count = int(check.actual_indices.size());
        check.pass = check.actual_count == row.expected_count &&
                     check.actual_indices == row.expected_indices;
        checks.push_back(std::move(check));
    }
    return checks;
}

bool verify_table1_partitions()
{
    const auto set_of = [](const char* text) {
        return count_types(Predicate::parse(text));
    };
    const auto disjoint_union = [](std::vector<int> a, const std::vector<int>& b,
                                   const std::vector<int>& whole) {
        a.insert(a.end(), b.begin(), b.end());
        std::sort(a.begin(), a.end());
        return a == whole &&
               std::adjacent_find(a.begin(), a.end()) == a.end();
    };

    const auto as_u1 = set_of("A1 | A4");
    const auto as_u0 = set_of("A1");
    const auto never_if_u0 = set_of("!A1 & !A2 & A4");
    const auto protectable_if_u0 = set_of("!A1 & A2 & A4");
    std::vector<int> rest = as_u0;
    rest.insert(rest.end(), never_if_u0.begin(), never_if_u0.end());
    std::sort(rest.begin(), rest.end());
    if (!disjoint_union(rest, protectable_if_u0, as_u1)) return false;

    // Null/positive complements within each always-survivor family.
    const auto null_u1 = set_of("(A1 | A4) & ((B1 | B4) | (!B2 & !B6))");
    const auto pos_u1 = set_of("(A1 | A4) & (!B1 & !B4) & (B2 | B6)");
    if (!disjoint_union(null_u1, pos_u1, as_u1)) return false;
    const auto null_u0 = set_of("A1 & (B1 | !B2)");
    const auto pos_u0 = set_of("A1 & (!B1 & B2)");
    return disjoint_union(null_u0, pos_u0, as_u0);
}

std::vector<TableS1Row> generate_table_s1()
{
    std::vector<TableS1Row> rows;
    rows.reserve(kTypeCount);
    for (int t = 1; t <= kTypeCount; ++t) {
        TableS1Row row;
        row.index = t;
        row.bits = susceptibility_from_index(t);
        // Column order: (x=1,u=1), (x=0,u=1), (x=1,u=0), (x=0,u=0).
        const std::array<std::pair<bool, bool>, 4> xu = {
            {{true, true}, {false, true}, {true, false}, {false, false}}};
        for (int c = 0; c < 4; ++c) {
            const auto [x, u] = xu[c];
            row.s[c] = survival_monotone(row.bits, u, x);
            row.y[c] = outcome_monotone(row.bits, row.s[c], u, x);
            const bool always_survivor =
                principal_stratum(row.bits, u) == PrincipalStratum::always_survivor;
            row.y_as[c] = always_survivor ? row.y[c] : OutcomeValue{};
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string outcome_text(const OutcomeValue& y, const char* blank)
{
    if (!y) return blank;
    return *y ? "1" : "0";
}

}  // namespace

std::string render_table_s1_text(std::span<const TableS1Row> rows)
{
    std::ostringstream out;
    out << "type  a1 a2 a4 a6  b1 b2 b4 b6  "
        << "s(1,1) s(0,1) s(1,0) s(0,0)  "
        << "y(1,1) y(0,1) y(1,0) y(0,0)  "
        << "yAS(1,1) yAS(0,1) yAS(1,0) yAS(0,0)\n";
    for (const auto& r : rows) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "%4d", r.index);
        out << buf << "   " << r.bits.a1 << "  " << r.bits.a2 << "  " << r.bits.a4
            << "  " << r.bits.a6 << "   " << r.bits.b1 << "  " << r.bits.b2 << "  "
            << r.bits.b4 << "  " << r.bits.b6 << "   ";
        for (int c = 0; c < 4; ++c) out << "   " << r.s[c] << "   ";
        out << " ";
        for (int c = 0; c < 4; ++c) out << "   " << outcome_text(r.y[c], ".") << "   ";
        out << " ";
        for (int c = 0; c < 4; ++c)
            out << "    " << outcome_text(r.y_as[c], ".") << "    ";
        out << "\n";
    }
    return out.str();
}

std::string render_table_s1_csv(std::span<const TableS1Row> rows)
{
    std::string out =
        "index,a1,a2,a4,a6,b1,b2,b4,b6,"
        "s_x1_u1,s_x0_u1,s_x1_u0,s_x0_u0,"
        "y_x1_u1,y_x0_u1,y_x1_u0,y_x0_u0,"
        "yas_x1_u1,yas_x0_u1,yas_x1_u0,yas_x0_u0\n";
    for (const auto& r : rows) {
        out += std::to_string(r.index);
        for (bool bit : {r.bits.a1, r.bits.a2, r.bits.a4, r.bits.a6, r.bits.b1,
                         r.bits.b2, r.bits.b4, r.bits.b6}) {
            out += ',';
            out += bit ? '1' : '0';
        }
        for (int c = 0; c < 4; ++c) {
            out += ',';
            out += r.s[c] ? '1' : '0';
        }
        for (int c = 0; c < 4; ++c) {
            out += ',';
            out += outcome_text(r.y[c], "");
        }
        for (int c = 0; c < 4; ++c) {
            out += ',';
            out += outcome_text(r.y_as[c], "");
        }
        out += '\n';
    }
    return out;
}

}  // namespace sctd
