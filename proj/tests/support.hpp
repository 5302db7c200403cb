#pragma once

// Small independent reference computations, deliberately naive.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fusscat/generate.hpp"
#include "fusscat/tree.hpp"

namespace support {

// Pascal's triangle, no division.
inline std::uint64_t pascal(int a, int b) {
  if (b < 0 || b > a || a < 0) return 0;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= a; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Coefficients of F = 1 + x F^(d+1): a vertex is either bare or carries a
// first tuplet (d subtrees) followed by the rest of itself.
inline std::vector<std::uint64_t> tree_counts(int d, int n) {
  std::vector<std::uint64_t> f{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> power{1};
    for (int r = 0; r < d + 1; ++r) {
      std::vector<std::uint64_t> next(static_cast<std::size_t>(m), 0);
      for (std::size_t a = 0; a < power.size() && a < next.size(); ++a) {
        for (std::size_t b = 0; b < f.size() && a + b < next.size(); ++b) next[a + b] += power[a] * f[b];
      }
      power = std::move(next);
    }
    f.push_back(power[static_cast<std::size_t>(m) - 1]);
  }
  return f;
}

inline std::vector<fusscat::TupletTree> trees(int d, int n) {
  std::vector<fusscat::TupletTree> out;
  for (const auto& t : fusscat::gen_trees(d, n)) out.push_back(t);
  return out;
}

inline fusscat::TupletTree T(const std::string& text) { return fusscat::parse_tree(text); }
inline fusscat::VertexAddr A(const std::string& text) { return fusscat::parse_addr(text); }

}  // namespace support
