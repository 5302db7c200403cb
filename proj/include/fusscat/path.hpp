#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fusscat {

/// U = (1, d), D = (1, -1).
enum class Step : std::uint8_t { Down, Up };

/// A lattice path over {U, D} for a fixed arity d.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(int d, std::vector<Step> steps = {}, int start_height = 0);

  /// Steps from a "UDDU..." string; throws ParseError on other characters.
  static LatticePath from_letters(int d, std::string_view letters, int start_height = 0);

  [[nodiscard]] int arity() const { return d_; }
  [[nodiscard]] int start_height() const { return start_; }
  [[nodiscard]] const std::vector<Step>& steps() const { return steps_; }
  [[nodiscard]] std::size_t size() const { return steps_.size(); }
  [[nodiscard]] bool empty() const { return steps_.empty(); }

  [[nodiscard]] int up_count() const;
  [[nodiscard]] int down_count() const;
  [[nodiscard]] int final_height() const;
  /// Heights at every lattice point, size()+1 entries, starting at start_height.
  [[nodiscard]] std::vector<int> heights() const;

  /// Starts and ends at 0, never dips below 0.
  [[nodiscard]] bool is_fuss_catalan() const;
  /// Starts and ends at 0, never rises above 0.
  [[nodiscard]] bool is_reverse_fuss_catalan() const;

  [[nodiscard]] std::string letters() const;

  void push(Step s) { steps_.push_back(s); }
  void append(const LatticePath& other);

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  int d_ = 1;
  std::vector<Step> steps_;
  int start_ = 0;
};

/// Canonical text: "d=<d>;start=<h>;" followed by the U/D letters.
std::string encode(const LatticePath& path);
LatticePath parse_path(std::string_view text);

/// Left rotation by m (mod length). Throws DomainError on an empty path.
LatticePath rho(const LatticePath& path, long long m);

/// Steps in reverse order, same letters.
LatticePath reversed(const LatticePath& path);

/// A sequence over {0..d-1}; the digits recorded by the main bijection.
struct SiblingSeq {
  std::vector<int> entries;

  [[nodiscard]] int length() const { return static_cast<int>(entries.size()); }

  friend bool operator==(const SiblingSeq&, const SiblingSeq&) = default;
};

/// "()" or "(p0,p1,...)".
std::string format_seq(const SiblingSeq& p);
SiblingSeq parse_seq(std::string_view text);

}  // namespace fusscat
