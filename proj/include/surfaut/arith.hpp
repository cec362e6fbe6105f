// surfaut - modular arithmetic helpers.

#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "surfaut/error.hpp"

namespace surfaut {

  inline std::int64_t mod(std::int64_t x, std::int64_t n) {
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
  }

  inline std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t n) {
    if (n == 1) {
      return 0;
    }
    std::int64_t result = 1;
    base                = mod(base, n);
    while (e > 0) {
      if (e & 1) {
        result = (result * base) % n;
      }
      base = (base * base) % n;
      e >>= 1;
    }
    return result;
  }

  inline bool is_prime(std::int64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  // Multiplicative order of u modulo n, or 0 if u is not a unit.
  inline std::int64_t multiplicative_order(std::int64_t u, std::int64_t n) {
    u = mod(u, n);
    if (n == 1) {
      return 1;
    }
    if (std::gcd(u, n) != 1) {
      return 0;
    }
    std::int64_t x = u;
    for (std::int64_t k = 1; k <= n; ++k) {
      if (x == 1) {
        return k;
      }
      x = (x * u) % n;
    }
    return 0;
  }

  /// Least u in [1, q) whose multiplicative order modulo the prime q is
  /// exactly m.  Requires m | q - 1.
  inline std::int64_t find_root_of_unity(std::int64_t q, std::int64_t m) {
    if (!is_prime(q)) {
      detail::fail_invalid("find_root_of_unity: " + std::to_string(q)
                           + " is not prime");
    }
    if (m < 1 || (q - 1) % m != 0) {
      detail::fail_invalid("find_root_of_unity: " + std::to_string(m)
                           + " does not divide " + std::to_string(q - 1));
    }
    for (std::int64_t u = 1; u < q; ++u) {
      if (multiplicative_order(u, q) == m) {
        return u;
      }
    }
    detail::fail_invariant("find_root_of_unity: no root found");  // unreachable for prime q
  }

  inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        while (n % p == 0) {
          n /= p;
        }
        result -= result / p;
      }
    }
    if (n > 1) {
      result -= result / n;
    }
    return result;
  }

}  // namespace surfaut
