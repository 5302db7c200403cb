#pragma once

#include <compare>
#include <map>
#include <string>

#include "fusscat/counting.hpp"
#include "fusscat/generate.hpp"

namespace fusscat {

struct HistKey {
  int level = 0;
  int outdegree = 0;
  int elders = 0;    ///< global elder siblings
  int youngers = 0;  ///< global younger siblings

  friend bool operator==(const HistKey&, const HistKey&) = default;
  friend auto operator<=>(const HistKey&, const HistKey&) = default;
};

/// Exact vertex counts over every tree of T_n^(d), keyed by vertex statistics.
struct VertexHistogram {
  int d = 1;
  int n = 0;
  std::map<HistKey, Count> cells;

  [[nodiscard]] Count total() const;
};

/// Brute force over all trees. Refuses when trees x vertices exceeds the cap.
VertexHistogram vertex_histogram(int d, int n, ResourceCap cap = {});

Count brute_count_atleast(const VertexHistogram& h, int k, int l);
/// elders >= i, youngers >= j, d*outdegree >= k, level >= l.
Count brute_count_refined(const VertexHistogram& h, int i, int j, int k, int l);
Count brute_count_exact(const VertexHistogram& h, int k, int l);

/// Columns: level,outdegree,elders,youngers,count.
std::string histogram_csv(const VertexHistogram& h);
std::string histogram_json(const VertexHistogram& h);

}  // namespace fusscat
