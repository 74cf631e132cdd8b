#pragma once

#include <span>
#include <string>
#include <vector>

#include "sctd/predicate.hpp"

namespace sctd {

// One published classification row: description, background-factor
// expression, and the published count and index list it must reproduce.
struct Table1Row {
    std::string description;
    std::string predicate_text;
    int expected_count = 0;
    std::vector<int> expected_indices;
};

const std::vector<Table1Row>& table1_rows();

struct Table1Check {
    Table1Row row;
    bool pass = false;
    int actual_count = 0;
    std::vector<int> actual_indices;
};

std::vector<Table1Check> verify_table1();

// Footnote partitions: the 192 u=1 always-survivor types split into the
// 128/32/32 subsets, and the null/positive pairs partition their parents.
bool verify_table1_partitions();

// Response columns in the order (X=1,U=1), (X=0,U=1), (X=1,U=0), (X=0,U=0).
struct TableS1Row {
    int index = 1;
    SusceptibilityMonotone bits;
    std::array<bool, 4> s{};
    std::array<OutcomeValue, 4> y{};
    std::array<OutcomeValue, 4> y_as{};  // blank unless always-survivor at that u
};

std::vector<TableS1Row> generate_table_s1();

std::string render_table_s1_text(std::span<const TableS1Row> rows);
std::string render_table_s1_csv(std::span<const TableS1Row> rows);

}  // namespace sctd
