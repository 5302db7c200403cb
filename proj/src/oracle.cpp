#include "fusscat/oracle.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fusscat/errors.hpp"

namespace fusscat {

namespace {

struct Walker {
  int d;
  const std::vector<int>& word;
  std::map<HistKey, std::uint64_t>& acc;
  std::size_t pos = 0;

  void visit(int level, int elders, int youngers) {
    const int w = word[pos++];
    ++acc[HistKey{level, w, elders, youngers}];
    const int kids = d * w;
    for (int c = 0; c < kids; ++c) visit(level + 1, c, kids - 1 - c);
  }
};

template <class Pred>
Count sum_if(const VertexHistogram& h, Pred pred) {
  Count total = 0;
  for (const auto& [key, count] : h.cells) {
    if (pred(key)) total += count;
  }
  return total;
}

}  // namespace

Count VertexHistogram::total() const {
  return sum_if(*this, [](const HistKey&) { return true; });
}

VertexHistogram vertex_histogram(int d, int n, ResourceCap cap) {
  if (d < 1) throw DomainError("arity d must be at least 1");
  if (n < 0) throw DomainError("n must be nonnegative");
  const Count work = fuss_catalan(d, n) * (static_cast<long long>(d) * n + 1);
  if (work > cap.limit) {
    throw InstanceTooLarge("instance too large: " + work.str() + " tree-vertex pairs, cap is " +
                           std::to_string(cap.limit));
  }
  std::map<HistKey, std::uint64_t> acc;
  TreeStream stream(d, n, cap);
  while (auto word = stream.next_word()) {
    Walker walker{d, *word, acc};
    walker.visit(0, 0, 0);
  }
  VertexHistogram h;
  h.d = d;
  h.n = n;
  for (const auto& [key, count] : acc) h.cells.emplace(key, Count(count));
  return h;
}

Count brute_count_atleast(const VertexHistogram& h, int k, int l) {
  return sum_if(h, [&](const HistKey& c) { return c.outdegree >= k && c.level >= l; });
}

Count brute_count_refined(const VertexHistogram& h, int i, int j, int k, int l) {
  return sum_if(h, [&](const HistKey& c) {
    return c.elders >= i && c.youngers >= j && h.d * c.outdegree >= k && c.level >= l;
  });
}

Count brute_count_exact(const VertexHistogram& h, int k, int l) {
  return sum_if(h, [&](const HistKey& c) { return c.outdegree == k && c.level == l; });
}

std::string histogram_csv(const VertexHistogram& h) {
  std::ostringstream out;
  out << "level,outdegree,elders,youngers,count\n";
  for (const auto& [key, count] : h.cells) {
    out << key.level << ',' << key.outdegree << ',' << key.elders << ',' << key.youngers << ','
        << count << '\n';
  }
  return out.str();
}

std::string histogram_json(const VertexHistogram& h) {
  nlohmann::ordered_json j;
  j["d"] = h.d;
  j["n"] = h.n;
  j["total"] = h.total().str();
  auto cells = nlohmann::ordered_json::array();
  for (const auto& [key, count] : h.cells) {
    cells.push_back({{"level", key.level},
                     {"outdegree", key.outdegree},
                     {"elders", key.elders},
                     {"youngers", key.youngers},
                     {"count", count.str()}});
  }
  j["cells"] = std::move(cells);
  return j.dump(2);
}

}  // namespace fusscat
