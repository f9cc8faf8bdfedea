#pragma once
// Exact rational linear algebra over integer matrices (rank, greedy
// independent-row selection) and a small content digest helper.
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cuspcert {

// Rank over Q of a set of integer rows.
int rational_rank(const std::vector<std::vector<long long>>& rows);

// Scan rows in the given index order, greedily keeping rows that increase the
// exact rank, stopping once `want` rows are kept (want < 0: keep all
// independent rows). Returns the kept indices in scan order.
std::vector<int> independent_rows(const std::vector<std::vector<long long>>& rows,
                                  const std::vector<int>& order, int want);

// Per-tetrahedron column reduction (a,b,c) -> (a-c, b-c), quotienting out the
// log z + log z' + log z'' = pi*i identity. Input rows have 3n columns.
std::vector<std::vector<long long>> reduced_columns(
    const std::vector<std::vector<long long>>& rows);

// FNV-1a 64-bit digest rendered as 16 hex characters.
std::string fnv1a64_hex(std::string_view data);

}  // namespace cuspcert
