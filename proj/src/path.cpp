#include "fusscat/path.hpp"

#include <algorithm>
#include <utility>

#include "fusscat/errors.hpp"
#include "text.hpp"

namespace fusscat {

LatticePath::LatticePath(int d, std::vector<Step> steps, int start_height)
    : d_(d), steps_(std::move(steps)), start_(start_height) {
  if (d_ < 1) throw DomainError("path arity must be at least 1");
}

LatticePath LatticePath::from_letters(int d, std::string_view letters, int start_height) {
  std::vector<Step> steps;
  steps.reserve(letters.size());
  for (char c : letters) {
    if (c == 'U') {
      steps.push_back(Step::Up);
    } else if (c == 'D') {
      steps.push_back(Step::Down);
    } else {
      throw ParseError(std::string("path letter '") + c + "' is neither U nor D");
    }
  }
  return LatticePath(d, std::move(steps), start_height);
}

int LatticePath::up_count() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Up));
}

int LatticePath::down_count() const { return static_cast<int>(steps_.size()) - up_count(); }

int LatticePath::final_height() const { return start_ + d_ * up_count() - down_count(); }

std::vector<int> LatticePath::heights() const {
  std::vector<int> h;
  h.reserve(steps_.size() + 1);
  int cur = start_;
  h.push_back(cur);
  for (Step s : steps_) {
    cur += s == Step::Up ? d_ : -1;
    h.push_back(cur);
  }
  return h;
}

bool LatticePath::is_fuss_catalan() const {
  if (start_ != 0) return false;
  int cur = 0;
  for (Step s : steps_) {
    cur += s == Step::Up ? d_ : -1;
    if (cur < 0) return false;
  }
  return cur == 0;
}

bool LatticePath::is_reverse_fuss_catalan() const {
  if (start_ != 0) return false;
  int cur = 0;
  for (Step s : steps_) {
    cur += s == Step::Up ? d_ : -1;
    if (cur > 0) return false;
  }
  return cur == 0;
}

std::string LatticePath::letters() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += s == Step::Up ? 'U' : 'D';
  return out;
}

void LatticePath::append(const LatticePath& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
}

std::string encode(const LatticePath& path) {
  return "d=" + std::to_string(path.arity()) + ";start=" + std::to_string(path.start_height()) +
         ";" + path.letters();
}

LatticePath parse_path(std::string_view text) {
  auto parts = detail::split(text, ';');
  if (parts.size() != 3 || !parts[0].starts_with("d=") || !parts[1].starts_with("start=")) {
    throw ParseError("path encoding must look like 'd=<d>;start=<h>;<UD letters>'");
  }
  const int d = detail::parse_int(parts[0].substr(2), "arity");
  if (d < 1) throw ParseError("arity must be at least 1");
  const int start = detail::parse_int(parts[1].substr(6), "start height");
  return LatticePath::from_letters(d, parts[2], start);
}

LatticePath rho(const LatticePath& path, long long m) {
  if (path.empty()) throw DomainError("cannot rotate an empty path");
  const auto len = static_cast<long long>(path.size());
  const auto shift = static_cast<std::size_t>(((m % len) + len) % len);
  std::vector<Step> steps = path.steps();
  std::rotate(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(shift), steps.end());
  return LatticePath(path.arity(), std::move(steps), path.start_height());
}

LatticePath reversed(const LatticePath& path) {
  std::vector<Step> steps(path.steps().rbegin(), path.steps().rend());
  return LatticePath(path.arity(), std::move(steps), path.start_height());
}

std::string format_seq(const SiblingSeq& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.entries[i]);
  }
  return out + ")";
}

SiblingSeq parse_seq(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("sibling sequence must look like '(p0,p1,...)' or '()'");
  }
  SiblingSeq p;
  auto inner = text.substr(1, text.size() - 2);
  if (inner.empty()) return p;
  for (auto part : detail::split(inner, ',')) p.entries.push_back(detail::parse_int(part, "entry"));
  return p;
}

}  // namespace fusscat
