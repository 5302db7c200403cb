#include "fusscat/generate.hpp"

#include <string>

#include "fusscat/counting.hpp"
#include "fusscat/errors.hpp"

namespace fusscat {

namespace {

void check_cap(const Count& size, ResourceCap cap, const char* what) {
  if (size > cap.limit) {
    throw InstanceTooLarge(std::string("instance too large: ") + what + " has " + size.str() +
                           " elements, cap is " + std::to_string(cap.limit));
  }
}

}  // namespace

// Trees are enumerated through their Lukasiewicz words: w[i] tuplets at the
// i-th preorder vertex, with `open` = 1 + sum(d*w - 1) slots still to fill.
// Any prefix that keeps open >= 1 extends to a valid word, so the successor
// is "bump the rightmost bumpable entry, then refill minimally".

TreeStream::TreeStream(int d, int n, ResourceCap cap) : d_(d), n_(n) {
  if (d < 1) throw DomainError("arity d must be at least 1");
  if (n < 0) throw DomainError("n must be nonnegative");
  check_cap(fuss_catalan(d, n), cap, "T_n^(d)");
  word_.assign(static_cast<std::size_t>(d) * n + 1, 0);
}

void TreeStream::fill_minimal(std::size_t from, long long open, int remaining) {
  const std::size_t last = word_.size() - 1;
  for (std::size_t i = from; i <= last; ++i) {
    int w = 0;
    if (i != last && open - 1 < 1) w = 1;
    word_[i] = w;
    open += static_cast<long long>(d_) * w - 1;
    remaining -= w;
  }
}

bool TreeStream::advance() {
  const std::size_t last = word_.size() - 1;
  // Prefix state before each position.
  std::vector<long long> open(word_.size());
  std::vector<int> remaining(word_.size());
  long long o = 1;
  int r = n_;
  for (std::size_t i = 0; i <= last; ++i) {
    open[i] = o;
    remaining[i] = r;
    o += static_cast<long long>(d_) * word_[i] - 1;
    r -= word_[i];
  }
  for (std::size_t i = last; i-- > 0;) {
    if (word_[i] + 1 <= remaining[i]) {
      ++word_[i];
      fill_minimal(i + 1, open[i] + static_cast<long long>(d_) * word_[i] - 1,
                   remaining[i] - word_[i]);
      return true;
    }
  }
  return false;
}

std::optional<std::vector<int>> TreeStream::next_word() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    fill_minimal(0, 1, n_);
    return word_;
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return word_;
}

std::optional<TupletTree> TreeStream::next() {
  auto w = next_word();
  if (!w) return std::nullopt;
  return TupletTree::from_outdegrees(d_, *w);
}

PathStream::PathStream(PathKind kind, int d, int ups, int downs, int start_height)
    : kind_(kind), d_(d), ups_(ups), downs_(downs), start_(start_height) {
  if (d < 1) throw DomainError("arity d must be at least 1");
  if (ups < 0 || downs < 0) done_ = true;
}

bool PathStream::allowed(int height) const {
  switch (kind_) {
    case PathKind::FussCatalan:
      return height >= 0;
    case PathKind::Reverse:
      return height <= 0;
    case PathKind::Free:
      return true;
  }
  return true;
}

void PathStream::fill_minimal(std::size_t from, int height, int ups, int downs) {
  for (std::size_t i = from; i < steps_.size(); ++i) {
    if (downs > 0 && allowed(height - 1)) {
      steps_[i] = Step::Down;
      height -= 1;
      --downs;
    } else {
      steps_[i] = Step::Up;
      height += d_;
      --ups;
    }
  }
}

bool PathStream::advance() {
  // Height before each step, and how many U's sit strictly after it.
  const std::size_t len = steps_.size();
  std::vector<int> before(len);
  int h = start_;
  for (std::size_t i = 0; i < len; ++i) {
    before[i] = h;
    h += steps_[i] == Step::Up ? d_ : -1;
  }
  int ups_after = 0;
  int downs_after = 0;
  for (std::size_t i = len; i-- > 0;) {
    if (steps_[i] == Step::Down && ups_after > 0 && allowed(before[i] + d_)) {
      steps_[i] = Step::Up;
      fill_minimal(i + 1, before[i] + d_, ups_after - 1, downs_after + 1);
      return true;
    }
    if (steps_[i] == Step::Up) {
      ++ups_after;
    } else {
      ++downs_after;
    }
  }
  return false;
}

std::optional<LatticePath> PathStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    steps_.assign(static_cast<std::size_t>(ups_ + downs_), Step::Down);
    fill_minimal(0, start_, ups_, downs_);
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return LatticePath(d_, steps_, start_);
}

TreeStream gen_trees(int d, int n, ResourceCap cap) { return TreeStream(d, n, cap); }

PathStream gen_fc_paths(int d, int n, ResourceCap cap) {
  if (n < 0) throw DomainError("n must be nonnegative");
  check_cap(fuss_catalan(d, n), cap, "FC_n^(d)");
  return PathStream(PathKind::FussCatalan, d, n, d * n, 0);
}

PathStream gen_reverse_paths(int d, int n, ResourceCap cap) {
  if (n < 0) throw DomainError("n must be nonnegative");
  check_cap(fuss_catalan(d, n), cap, "reverse FC_n^(d)");
  return PathStream(PathKind::Reverse, d, n, d * n, 0);
}

PathStream gen_free_paths(int d, int n, int k, int l, ResourceCap cap) {
  if (n < 0 || k < 0 || l < 0) throw DomainError("n, k, l must be nonnegative");
  const int ups = n - k - l;
  if (ups >= 0) {
    check_cap(binomial(static_cast<long long>(d + 1) * n - k, static_cast<long long>(d) * n + l),
              cap, "free path set");
  }
  return PathStream(PathKind::Free, d, ups, d * n + l, d * k);
}

}  // namespace fusscat
