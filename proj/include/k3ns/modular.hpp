#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace k3ns {

// Residue class modulo a fixed positive integer. Values are always stored
// reduced (0 <= value < modulus) and negative inputs are normalized on
// construction, so equality is structural.
class Residue {
 public:
  Residue(long long value, long long modulus) : modulus_(modulus) {
    if (modulus_ < 1) throw std::invalid_argument("Residue: modulus must be >= 1");
    value_ = value % modulus_;
    if (value_ < 0) value_ += modulus_;
  }

  long long value() const { return value_; }
  long long modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  friend Residue operator+(const Residue& a, const Residue& b) {
    check_same(a, b);
    return Residue(a.value_ + b.value_, a.modulus_);
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    check_same(a, b);
    return Residue(a.value_ - b.value_, a.modulus_);
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    check_same(a, b);
    return Residue(a.value_ * b.value_, a.modulus_);
  }
  Residue operator-() const { return Residue(-value_, modulus_); }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

  std::string str() const {
    return std::to_string(value_) + " (mod " + std::to_string(modulus_) + ")";
  }

 private:
  static void check_same(const Residue& a, const Residue& b) {
    if (a.modulus_ != b.modulus_)
      throw std::invalid_argument("Residue: modulus mismatch");
  }

  long long value_;
  long long modulus_;
};

// Euler totient by trial division; inputs here never exceed a few thousand.
inline long long euler_phi(long long m) {
  if (m < 1) throw std::invalid_argument("euler_phi: argument must be positive");
  long long result = m;
  long long n = m;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {
inline long long extended_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1 = 0, y1 = 0;
  long long g = extended_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}
}  // namespace detail

// Multiplicative inverse of k modulo n. Signals "no inverse" for non-coprime
// input.
inline Residue inverse_mod(long long k, long long n) {
  if (n < 1) throw std::invalid_argument("inverse_mod: modulus must be positive");
  long long r = k % n;
  if (r < 0) r += n;
  long long x = 0, y = 0;
  long long g = detail::extended_gcd(r, n, x, y);
  if (g != 1)
    throw std::domain_error("inverse_mod: no inverse, arguments are not coprime");
  return Residue(x, n);
}

struct OrderCandidate {
  long long m;
  long long phi;
  friend bool operator==(const OrderCandidate& a, const OrderCandidate& b) {
    return a.m == b.m && a.phi == b.phi;
  }
};

// All m with phi(m) <= phi_max, ascending. The scan bound 4*phi_max^2 is
// complete: phi(m) >= sqrt(m/2) for every m >= 1, so phi(m) <= P already
// forces m <= 2*P^2.
inline std::vector<OrderCandidate> admissible_orders(long long phi_max) {
  if (phi_max < 1)
    throw std::invalid_argument("admissible_orders: phi_max must be >= 1");
  std::vector<OrderCandidate> out;
  const long long bound = 4 * phi_max * phi_max;
  for (long long m = 1; m <= bound; ++m) {
    long long phi = euler_phi(m);
    if (phi <= phi_max) out.push_back({m, phi});
  }
  return out;
}

// Distinct prime divisors, ascending.
inline std::vector<long long> prime_factors(long long n) {
  if (n < 1) throw std::invalid_argument("prime_factors: argument must be positive");
  std::vector<long long> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace k3ns
