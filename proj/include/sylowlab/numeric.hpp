#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace sylowlab::numeric {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Largest e with p^e | n (n > 0, p > 1).
inline int valuation(std::int64_t n, std::int64_t p) {
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

inline std::int64_t ipow(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

// Ascending distinct prime divisors of n.
inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Ascending divisors of n.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// If n = p^e with p prime and e >= 1, returns p; otherwise 0.
inline std::int64_t prime_power_base(std::int64_t n) {
  const auto primes = prime_divisors(n);
  return primes.size() == 1 ? primes.front() : 0;
}

struct Bezout {
  std::int64_t gcd;
  std::int64_t x;
  std::int64_t y;
};

// a*x + b*y = gcd(a, b), by the extended Euclidean algorithm.
inline Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_x = std::exchange(x, old_x - q * x);
    old_y = std::exchange(y, old_y - q * y);
  }
  return {old_r, old_x, old_y};
}

// Non-negative residue of a mod m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace sylowlab::numeric
