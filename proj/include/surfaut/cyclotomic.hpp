// surfaut - exact arithmetic in the cyclotomic ring Z[omega_N].
//
// Values are integer polynomials in omega_N = exp(2 pi i / N) reduced modulo
// the N-th cyclotomic polynomial, so every value has exactly one coefficient
// vector (length phi(N), power basis 1, omega, ..., omega^(phi(N)-1)) and
// equality is coefficient equality.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "surfaut/arith.hpp"
#include "surfaut/error.hpp"

namespace surfaut {

  namespace detail {

    using IntPoly = std::vector<std::int64_t>;  // coefficient of x^k at [k]

    inline IntPoly poly_mul(IntPoly const& a, IntPoly const& b) {
      IntPoly out(a.size() + b.size() - 1, 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          out[i + j] += a[i] * b[j];
        }
      }
      return out;
    }

    // Exact division by a monic divisor.
    inline IntPoly poly_div_exact(IntPoly num, IntPoly const& den) {
      std::size_t dn = den.size() - 1;
      IntPoly     quo(num.size() - dn, 0);
      for (std::size_t k = num.size(); k-- > dn;) {
        std::int64_t c = num[k];
        quo[k - dn]    = c;
        for (std::size_t j = 0; j <= dn; ++j) {
          num[k - dn + j] -= c * den[j];
        }
      }
      for (auto c : num) {
        if (c != 0) {
          fail_invariant("cyclotomic polynomial division left a remainder");
        }
      }
      return quo;
    }

    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, cached.
    inline std::shared_ptr<IntPoly const> cyclotomic_polynomial(std::int64_t N) {
      static std::mutex                                            lock;
      static std::map<std::int64_t, std::shared_ptr<IntPoly const>> cache;
      {
        std::lock_guard guard(lock);
        auto            it = cache.find(N);
        if (it != cache.end()) {
          return it->second;
        }
      }
      IntPoly num(N + 1, 0);
      num[0] = -1;
      num[N] = 1;
      IntPoly den{1};
      for (std::int64_t d = 1; d < N; ++d) {
        if (N % d == 0) {
          den = poly_mul(den, *cyclotomic_polynomial(d));
        }
      }
      auto phi = std::make_shared<IntPoly const>(poly_div_exact(num, den));
      std::lock_guard guard(lock);
      cache.emplace(N, phi);
      return phi;
    }

  }  // namespace detail

  class CyclotomicValue {
   public:
    CyclotomicValue() : CyclotomicValue(1, 0) {}

    /// The rational integer n in Z[omega_N].
    CyclotomicValue(std::int64_t conductor, std::int64_t n) : _conductor(conductor) {
      if (conductor < 1) {
        detail::fail_invalid("cyclotomic conductor must be positive");
      }
      _phi = detail::cyclotomic_polynomial(conductor);
      _coeffs.assign(degree(), 0);
      _coeffs[0] = n;
    }

    /// omega_N^k.
    static CyclotomicValue root_power(std::int64_t conductor, std::int64_t k) {
      CyclotomicValue  v(conductor, 0);
      detail::IntPoly p(static_cast<std::size_t>(mod(k, conductor)) + 1, 0);
      p.back() = 1;
      v.assign_reduced(std::move(p));
      return v;
    }

    std::int64_t conductor() const noexcept {
      return _conductor;
    }
    std::vector<std::int64_t> const& coefficients() const noexcept {
      return _coeffs;
    }

    bool is_rational() const {
      for (std::size_t k = 1; k < _coeffs.size(); ++k) {
        if (_coeffs[k] != 0) {
          return false;
        }
      }
      return true;
    }
    std::int64_t rational_value() const {
      if (!is_rational()) {
        detail::fail_invalid("cyclotomic value " + to_string() + " is not rational");
      }
      return _coeffs[0];
    }

    CyclotomicValue& operator+=(CyclotomicValue const& o) {
      check_same(o);
      for (std::size_t k = 0; k < _coeffs.size(); ++k) {
        _coeffs[k] += o._coeffs[k];
      }
      return *this;
    }
    CyclotomicValue& operator-=(CyclotomicValue const& o) {
      check_same(o);
      for (std::size_t k = 0; k < _coeffs.size(); ++k) {
        _coeffs[k] -= o._coeffs[k];
      }
      return *this;
    }
    friend CyclotomicValue operator+(CyclotomicValue a, CyclotomicValue const& b) {
      return a += b;
    }
    friend CyclotomicValue operator-(CyclotomicValue a, CyclotomicValue const& b) {
      return a -= b;
    }
    friend CyclotomicValue operator*(CyclotomicValue const& a, CyclotomicValue const& b) {
      a.check_same(b);
      CyclotomicValue out(a._conductor, 0);
      out.assign_reduced(detail::poly_mul(a._coeffs, b._coeffs));
      return out;
    }
    friend CyclotomicValue operator*(std::int64_t s, CyclotomicValue v) {
      for (auto& c : v._coeffs) {
        c *= s;
      }
      return v;
    }
    bool operator==(CyclotomicValue const& o) const {
      return _conductor == o._conductor && _coeffs == o._coeffs;
    }

    /// Complex conjugate: omega^k -> omega^-k.
    CyclotomicValue conj() const {
      detail::IntPoly p(static_cast<std::size_t>(_conductor), 0);
      for (std::size_t k = 0; k < _coeffs.size(); ++k) {
        p[static_cast<std::size_t>(mod(-static_cast<std::int64_t>(k), _conductor))] += _coeffs[k];
      }
      CyclotomicValue out(_conductor, 0);
      out.assign_reduced(std::move(p));
      return out;
    }

    /// Same value viewed in Z[omega_M] for a multiple M of the conductor.
    CyclotomicValue lift(std::int64_t M) const {
      if (M % _conductor != 0) {
        detail::fail_invalid("lift: conductor does not divide target");
      }
      std::int64_t    step = M / _conductor;
      detail::IntPoly p(static_cast<std::size_t>(step) * _coeffs.size() + 1, 0);
      for (std::size_t k = 0; k < _coeffs.size(); ++k) {
        p[k * step] = _coeffs[k];
      }
      CyclotomicValue out(M, 0);
      out.assign_reduced(std::move(p));
      return out;
    }

    std::string to_string() const {
      std::string out;
      for (std::size_t k = 0; k < _coeffs.size(); ++k) {
        if (_coeffs[k] == 0) {
          continue;
        }
        std::int64_t c = _coeffs[k];
        if (!out.empty()) {
          out += c < 0 ? " - " : " + ";
          c = c < 0 ? -c : c;
        }
        if (k == 0) {
          out += std::to_string(c);
        } else {
          if (c == -1) {
            out += "-";
          } else if (c != 1) {
            out += std::to_string(c) + "*";
          }
          out += "w" + std::to_string(_conductor) + (k == 1 ? "" : "^" + std::to_string(k));
        }
      }
      return out.empty() ? "0" : out;
    }

   private:
    std::size_t degree() const {
      return _phi->size() - 1;
    }

    void check_same(CyclotomicValue const& o) const {
      if (_conductor != o._conductor) {
        detail::fail_invalid("cyclotomic values with different conductors");
      }
    }

    void assign_reduced(detail::IntPoly p) {
      auto const& phi = *_phi;
      std::size_t d   = degree();
      for (std::size_t k = p.size(); k-- > d;) {
        std::int64_t c = p[k];
        if (c == 0) {
          continue;
        }
        for (std::size_t j = 0; j <= d; ++j) {
          p[k - d + j] -= c * phi[j];
        }
      }
      p.resize(d, 0);
      _coeffs = std::move(p);
    }

    std::int64_t                           _conductor;
    std::shared_ptr<detail::IntPoly const> _phi;
    std::vector<std::int64_t>              _coeffs;
  };

}  // namespace surfaut
