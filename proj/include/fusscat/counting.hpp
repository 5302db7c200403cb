#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fusscat {

/// Exact nonnegative count. No floating point anywhere in this module.
using Count = boost::multiprecision::cpp_int;

/// binom(a, b), 0 when b < 0 or b > a. Throws DomainError when a < 0.
Count binomial(long long a, long long b);

/// (1/(dn+1)) * binom((d+1)n, n).
Count fuss_catalan(int d, int n);

/// Vertices summed over all trees with n tuplets, (dn+1) * Cat = binom((d+1)n, n).
/// Both sides are computed and compared.
Count total_vertices(int d, int n);

/// Vertices of outdegree >= k at level >= l: d^l * binom((d+1)n - k, dn + l).
Count count_atleast(int d, int n, int k, int l);

/// The d = 1 specialisation, binom(2n - k, n + l), computed on its own.
Count count_atleast_d1(int n, int k, int l);

/// Pairs with >= i elder siblings, >= j younger siblings, >= k children and
/// level >= l when i, j, k are all multiples of d: d^l * binom((d+1)n - a, dn + l)
/// with i + j + k = a*d. Requires l >= 1.
Count count_aligned(int d, int n, int i, int j, int k, int l);

/// Same constraints for arbitrary i, j (k still a multiple of d, l >= 1).
/// Evaluated through the integer form
///   d^(l-1) * [(d - b) * binom(N - a, dn + l) + b * binom(N - a - 1, dn + l)]
/// with N = (d+1)n and i + j + k = a*d + b, 0 <= b < d; the rational closed
/// form is checked against it whenever its denominator is nonzero.
Count count_refined(int d, int n, int i, int j, int k, int l);

/// Vertices of outdegree exactly k at level exactly l:
///   d^l * (dk + (d+1)l) / ((d+1)n - k) * binom((d+1)n - k, dn + l),
/// asserted equal to the inclusion-exclusion of four count_atleast corners.
Count count_exact(int d, int n, int k, int l);

/// binom(2n - i - j - k, n + l); the d = 1 refinement on its own. Requires l >= 1.
Count count_refined_d1(int n, int i, int j, int k, int l);

/// d^e as a Count.
Count power(int d, int e);

}  // namespace fusscat
