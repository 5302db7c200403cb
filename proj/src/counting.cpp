#include "fusscat/counting.hpp"

#include <string>

#include "fusscat/errors.hpp"

namespace fusscat {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

void require_arity(int d) { require(d >= 1, "arity d must be at least 1"); }

}  // namespace

Count binomial(long long a, long long b) {
  require(a >= 0, "binomial: top argument must be nonnegative, got " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Count result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= (a - b + i);
    result /= i;  // exact: result is binom(a-b+i, i) after this step
  }
  return result;
}

Count power(int d, int e) {
  require(e >= 0, "negative exponent");
  Count r = 1;
  for (int i = 0; i < e; ++i) r *= d;
  return r;
}

Count fuss_catalan(int d, int n) {
  require_arity(d);
  require(n >= 0, "n must be nonnegative");
  const long long dn1 = static_cast<long long>(d) * n + 1;
  Count top = binomial(static_cast<long long>(d + 1) * n, n);
  if (top % dn1 != 0) {
    throw ArithmeticIdentityError("binom((d+1)n, n) not divisible by dn+1");
  }
  return top / dn1;
}

Count total_vertices(int d, int n) {
  require_arity(d);
  require(n >= 0, "n must be nonnegative");
  Count lhs = Count(static_cast<long long>(d) * n + 1) * fuss_catalan(d, n);
  Count rhs = binomial(static_cast<long long>(d + 1) * n, n);
  if (lhs != rhs) throw ArithmeticIdentityError("(dn+1) Cat != binom((d+1)n, n)");
  return lhs;
}

Count count_atleast(int d, int n, int k, int l) {
  require_arity(d);
  require(n >= 1, "count_atleast needs n >= 1");
  require(k >= 0 && l >= 0, "k and l must be nonnegative");
  const long long top = static_cast<long long>(d + 1) * n - k;
  if (top < 0) return 0;
  return power(d, l) * binomial(top, static_cast<long long>(d) * n + l);
}

Count count_atleast_d1(int n, int k, int l) {
  require(n >= 1, "count_atleast_d1 needs n >= 1");
  require(k >= 0 && l >= 0, "k and l must be nonnegative");
  const long long top = 2LL * n - k;
  if (top < 0) return 0;
  return binomial(top, static_cast<long long>(n) + l);
}

Count count_aligned(int d, int n, int i, int j, int k, int l) {
  require_arity(d);
  require(n >= 1, "count_aligned needs n >= 1");
  require(l >= 1, "count_aligned needs l >= 1");
  require(i >= 0 && j >= 0 && k >= 0, "i, j, k must be nonnegative");
  require(i % d == 0 && j % d == 0 && k % d == 0, "i, j, k must all be multiples of d");
  const int alpha = (i + j + k) / d;
  const long long top = static_cast<long long>(d + 1) * n - alpha;
  if (top < 0) return 0;
  return power(d, l) * binomial(top, static_cast<long long>(d) * n + l);
}

Count count_refined(int d, int n, int i, int j, int k, int l) {
  require_arity(d);
  require(n >= 1, "count_refined needs n >= 1");
  require(l >= 1, "count_refined needs l >= 1 (level bound must be positive)");
  require(i >= 0 && j >= 0 && k >= 0, "i, j, k must be nonnegative");
  require(k % d == 0, "k must be a multiple of d");
  const int alpha = (i + j + k) / d;
  const int beta = (i + j + k) % d;
  const long long big_n = static_cast<long long>(d + 1) * n;
  const long long bottom = static_cast<long long>(d) * n + l;
  const long long top = big_n - alpha;
  if (top < 0) return 0;
  const Count c0 = binomial(top, bottom);
  const Count c1 = top >= 1 ? binomial(top - 1, bottom) : Count(0);
  const Count value = power(d, l - 1) * (Count(d - beta) * c0 + Count(beta) * c1);

  if (top > 0) {
    // d^l * (1 - (b/d) (dn+l)/(N-a)) * C  ==  d^(l-1) * C * (d(N-a) - b(dn+l)) / (N-a)
    Count numer = power(d, l - 1) * c0 * (Count(d) * top - Count(beta) * bottom);
    if (numer % top != 0 || numer / top != value) {
      throw ArithmeticIdentityError("refined count: integer and rational forms disagree");
    }
  }
  return value;
}

Count count_exact(int d, int n, int k, int l) {
  require_arity(d);
  require(n >= 1, "count_exact needs n >= 1");
  require(k >= 0 && l >= 0, "k and l must be nonnegative");
  const long long denom = static_cast<long long>(d + 1) * n - k;
  require(denom > 0, "count_exact: (d+1)n - k must be positive");
  Count numer = power(d, l) * Count(static_cast<long long>(d) * k + static_cast<long long>(d + 1) * l) *
                binomial(denom, static_cast<long long>(d) * n + l);
  if (numer % denom != 0) throw ArithmeticIdentityError("count_exact: closed form is not integral");
  Count closed = numer / denom;

  Count sieve = count_atleast(d, n, k, l) - count_atleast(d, n, k + 1, l) -
                count_atleast(d, n, k, l + 1) + count_atleast(d, n, k + 1, l + 1);
  if (sieve != closed) {
    throw ArithmeticIdentityError("count_exact: closed form and sieve disagree");
  }
  return closed;
}

Count count_refined_d1(int n, int i, int j, int k, int l) {
  require(n >= 1, "count_refined_d1 needs n >= 1");
  require(l >= 1, "count_refined_d1 needs l >= 1");
  require(i >= 0 && j >= 0 && k >= 0, "i, j, k must be nonnegative");
  const long long top = 2LL * n - i - j - k;
  if (top < 0) return 0;
  return binomial(top, static_cast<long long>(n) + l);
}

}  // namespace fusscat
