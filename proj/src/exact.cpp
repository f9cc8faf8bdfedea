#include "cuspcert/exact.hpp"

#include <gmpxx.h>

namespace cuspcert {

namespace {

using QRow = std::vector<mpq_class>;

// Reduce r against the basis (rows with recorded pivot columns); returns true
// if a nonzero vector remains, in which case it is appended to the basis.
bool absorb(std::vector<QRow>& basis, std::vector<size_t>& pivots, QRow r) {
  for (size_t k = 0; k < basis.size(); ++k) {
    size_t c = pivots[k];
    if (r[c] != 0) {
      mpq_class f = r[c] / basis[k][c];
      for (size_t j = 0; j < r.size(); ++j) r[j] -= f * basis[k][j];
    }
  }
  for (size_t c = 0; c < r.size(); ++c) {
    if (r[c] != 0) {
      basis.push_back(std::move(r));
      pivots.push_back(c);
      return true;
    }
  }
  return false;
}

QRow to_q(const std::vector<long long>& row) {
  QRow r;
  r.reserve(row.size());
  for (long long x : row) r.emplace_back(static_cast<long>(x));
  return r;
}

}  // namespace

int rational_rank(const std::vector<std::vector<long long>>& rows) {
  std::vector<QRow> basis;
  std::vector<size_t> pivots;
  for (const auto& row : rows) absorb(basis, pivots, to_q(row));
  return static_cast<int>(basis.size());
}

std::vector<int> independent_rows(const std::vector<std::vector<long long>>& rows,
                                  const std::vector<int>& order, int want) {
  std::vector<QRow> basis;
  std::vector<size_t> pivots;
  std::vector<int> kept;
  for (int idx : order) {
    if (want >= 0 && static_cast<int>(kept.size()) >= want) break;
    if (absorb(basis, pivots, to_q(rows[idx]))) kept.push_back(idx);
  }
  return kept;
}

std::vector<std::vector<long long>> reduced_columns(
    const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<long long>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<long long> r;
    r.reserve(row.size() / 3 * 2);
    for (size_t t = 0; t + 2 < row.size(); t += 3) {
      r.push_back(row[t] - row[t + 2]);
      r.push_back(row[t + 1] - row[t + 2]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string fnv1a64_hex(std::string_view data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace cuspcert
