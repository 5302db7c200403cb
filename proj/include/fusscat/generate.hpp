#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "fusscat/path.hpp"
#include "fusscat/tree.hpp"

namespace fusscat {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

/// Upper bound on how many objects a generator (or the oracle) may touch.
struct ResourceCap {
  std::uint64_t limit = kDefaultCap;
};

/// Range-for adaptor over any pull stream exposing `std::optional<T> next()`.
template <class Stream>
class StreamIterator {
 public:
  using value_type = typename decltype(std::declval<Stream&>().next())::value_type;
  using difference_type = std::ptrdiff_t;

  StreamIterator() = default;
  explicit StreamIterator(Stream* s) : stream_(s) { ++*this; }

  const value_type& operator*() const { return *current_; }
  const value_type* operator->() const { return &*current_; }
  StreamIterator& operator++() {
    current_ = stream_->next();
    return *this;
  }
  void operator++(int) { ++*this; }
  friend bool operator==(const StreamIterator& it, std::default_sentinel_t) { return !it.current_; }

 private:
  Stream* stream_ = nullptr;
  std::optional<value_type> current_;
};

/// Every tree of T_n^(d) exactly once, lexicographic on the preorder
/// outdegree word. Pull-based; single consumer.
class TreeStream {
 public:
  TreeStream(int d, int n, ResourceCap cap = {});

  std::optional<TupletTree> next();
  /// Raw outdegree word of the next tree; avoids building the nested tree.
  std::optional<std::vector<int>> next_word();

  StreamIterator<TreeStream> begin() { return StreamIterator<TreeStream>(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  void fill_minimal(std::size_t from, long long open, int remaining);
  bool advance();

  int d_;
  int n_;
  std::vector<int> word_;
  bool started_ = false;
  bool done_ = false;
};

enum class PathKind { FussCatalan, Reverse, Free };

/// Every path of a kind exactly once, lexicographic with D < U.
class PathStream {
 public:
  PathStream(PathKind kind, int d, int ups, int downs, int start_height);

  std::optional<LatticePath> next();

  StreamIterator<PathStream> begin() { return StreamIterator<PathStream>(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  bool allowed(int height) const;
  void fill_minimal(std::size_t from, int height, int ups, int downs);
  bool advance();

  PathKind kind_;
  int d_;
  int ups_;
  int downs_;
  int start_;
  std::vector<Step> steps_;
  bool started_ = false;
  bool done_ = false;
};

TreeStream gen_trees(int d, int n, ResourceCap cap = {});
PathStream gen_fc_paths(int d, int n, ResourceCap cap = {});
PathStream gen_reverse_paths(int d, int n, ResourceCap cap = {});
/// The set L: n-k-l up-steps and dn+l down-steps starting at height dk.
/// Empty when k + l > n.
PathStream gen_free_paths(int d, int n, int k, int l, ResourceCap cap = {});

}  // namespace fusscat
