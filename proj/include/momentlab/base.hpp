#pragma once
// Shared scalar types and exact modular arithmetic helpers used throughout.
//
// Conventions: e(x) = exp(2*pi*i*x).  Phases that arise from finite
// exponential sums are always rational, so they are passed around as
// (numerator, modulus) pairs and only converted to floating point at the
// last moment via e_frac, which reduces the fraction first.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace momentlab {

using cplx = std::complex<double>;
using std::int64_t;

inline constexpr double PI = 3.14159265358979323846264338327950288;

inline cplx e(double x) {
  return {std::cos(2.0 * PI * x), std::sin(2.0 * PI * x)};
}

// e(num/den) with the fraction reduced mod den first, so huge numerators do
// not lose precision.
inline cplx e_frac(int64_t num, int64_t den) {
  if (den == 0) throw std::invalid_argument("e_frac: zero denominator");
  if (den < 0) { den = -den; num = -num; }
  num %= den;
  if (num < 0) num += den;
  return e(static_cast<double>(num) / static_cast<double>(den));
}

inline int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
struct Egcd { int64_t g, x, y; };
inline Egcd egcd(int64_t a, int64_t b) {
  int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    int64_t q = a / b;
    int64_t t = a - q * b; a = b; b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
  return {a, x0, y0};
}

// Inverse of a mod m (m >= 1); throws if gcd(a,m) != 1.
inline int64_t inv_mod(int64_t a, int64_t m) {
  if (m <= 0) throw std::invalid_argument("inv_mod: modulus must be positive");
  if (m == 1) return 0;
  a %= m; if (a < 0) a += m;
  Egcd r = egcd(a, m);
  if (r.g != 1) throw std::domain_error("inv_mod: not invertible");
  int64_t x = r.x % m;
  if (x < 0) x += m;
  return x;
}

inline int64_t pow_mod(int64_t a, int64_t n, int64_t m) {
  a %= m; if (a < 0) a += m;
  int64_t r = 1;
  while (n > 0) {
    if (n & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    n >>= 1;
  }
  return r;
}

// Solve a*x = b (mod m).  Returns the number of solutions mod m (0 if none,
// g = gcd(a,m) otherwise); *x0 receives the smallest solution and solutions
// step by m/g.
inline int64_t solve_linear_mod(int64_t a, int64_t b, int64_t m, int64_t* x0,
                                int64_t* step) {
  a %= m; if (a < 0) a += m;
  b %= m; if (b < 0) b += m;
  int64_t g = std::gcd(a, m);  // = m when a == 0
  if (b % g != 0) return 0;
  int64_t m2 = m / g;
  int64_t x;
  if (m2 == 1) x = 0;
  else x = mul_mod((b / g) % m2, inv_mod((a / g) % m2, m2), m2);
  *x0 = x;
  *step = m2;
  return g;
}

inline int64_t mod_pos(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace momentlab
