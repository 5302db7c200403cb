#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusscat/generate.hpp"

namespace fusscat {

enum class Suite { Formulas, Bijections, Sieve, Telescoping };

std::string suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
std::vector<Suite> all_suites();

/// Outcome of one suite on one (d, n) cell.
struct CellReport {
  int d = 1;
  int n = 1;
  Suite suite = Suite::Formulas;
  long long checks = 0;
  std::vector<std::string> failures;  ///< one witness per mismatch, capped

  [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// formulas:    oracle against the at-least, refined, exact and d = 1 counts
/// bijections:  phi / phibar / psi round trips and images, the main map,
///              gamma and the sibling exchange
/// sieve:       exact counts against the four-corner sieve and the vertex total
/// telescoping: the sibling telescoping identity against the oracle
CellReport run_suite(Suite suite, int d, int n, ResourceCap cap = {});

}  // namespace fusscat
