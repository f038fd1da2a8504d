#pragma once

#include <stdexcept>
#include <vector>

#include "k3ns/lattice.hpp"
#include "k3ns/rational.hpp"

namespace k3ns {

// One weighted component of a branch divisor: its class, the ramification
// index r of the cover along it, and the numerator a of its coefficient in
// the fractional branch divisor (1/t) * sum a_i Gamma_i.
struct BranchComponent {
  DivisorClass curve_class;
  long long ramification_index;
  long long coeff_numerator;
  long long denominator;

  BranchComponent(DivisorClass cls, long long r, long long a, long long t)
      : curve_class(cls), ramification_index(r), coeff_numerator(a), denominator(t) {
    if (t < 1) throw std::invalid_argument("BranchComponent: denominator must be positive");
    if (r < 2) throw std::invalid_argument("BranchComponent: ramification index must be >= 2");
    if (a <= 0 || a >= t)
      throw std::invalid_argument("BranchComponent: coefficient must satisfy 0 < a < t");
  }

  friend bool operator==(const BranchComponent& x, const BranchComponent& y) {
    return x.curve_class == y.curve_class &&
           x.ramification_index == y.ramification_index &&
           x.coeff_numerator == y.coeff_numerator && x.denominator == y.denominator;
  }
};

// Base surface plus weighted branch components of a cyclic quotient model.
struct BranchConfiguration {
  SurfaceModel base;
  std::vector<BranchComponent> components;
  long long total_order;

  friend bool operator==(const BranchConfiguration& x, const BranchConfiguration& y) {
    return x.base == y.base && x.components == y.components &&
           x.total_order == y.total_order;
  }
};

struct K3CoverCheck {
  bool branch_class_ok;    // sum of parts = -2K_X
  bool disjointness_ok;    // pairwise intersection numbers all zero
  long long chi_value;     // 2*chi(X) - chi(B); must be 24 for a K3 cover
  bool canonical_trivial;  // K_X + (1/2) sum of parts = 0

  bool k3() const {
    return branch_class_ok && disjointness_ok && chi_value == 24 && canonical_trivial;
  }
};

// Double-cover test: a smooth branch divisor linearly equivalent to -2K_X on
// a rational surface X gives a K3 double cover. chi(B) is computed as a
// disjoint union of the listed components via adjunction; intersecting
// decompositions are reported through disjointness_ok rather than resolved.
inline K3CoverCheck double_cover_k3_check(const SurfaceModel& X,
                                          const std::vector<DivisorClass>& parts) {
  if (parts.empty())
    throw std::invalid_argument("double_cover_k3_check: empty branch list");
  DivisorClass total = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) total = total + parts[i];

  const DivisorClass minus_2k = -2 * canonical_class(X);
  bool branch_ok = (total == minus_2k);

  bool disjoint = true;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (intersect(parts[i], parts[j], X) != 0) disjoint = false;

  long long chi_b = 0;
  for (const DivisorClass& part : parts)
    chi_b += 2 - 2 * genus_adjunction(part, X);
  long long chi = 2 * X.chi_top() - chi_b;

  bool canonical_trivial = (2 * canonical_class(X) + total).is_zero();
  return {branch_ok, disjoint, chi, canonical_trivial};
}

// Coefficient numerators a_i = t (1 - 1/r_i) of the fractional branch divisor
// for ramification indices r_i dividing the cover order t. All outputs lie
// strictly between 0 and t.
inline std::vector<long long> qdivisor_coefficients(const std::vector<long long>& indices,
                                                    long long t) {
  if (t < 1) throw std::invalid_argument("qdivisor_coefficients: order must be positive");
  std::vector<long long> out;
  out.reserve(indices.size());
  for (long long r : indices) {
    if (r < 2) throw std::invalid_argument("qdivisor_coefficients: index must be >= 2");
    if (t % r != 0)
      throw std::invalid_argument("qdivisor_coefficients: index does not divide the order");
    out.push_back(t - t / r);
  }
  return out;
}

struct HurwitzDelta {
  long long delta;
  bool within_bound;  // delta <= 24, equivalently K^2 <= 8
};

// Total ramification of the degree-4 projection of the double-cover branch
// B = -2K to the base of a ruling: delta = 2 g(B) - 2 + 8 = 2 K^2 + 8 via
// g(B) = K^2 + 1. The horizontal degree 4 is built in; no other branch degree
// occurs for anti-bicanonical double covers.
inline HurwitzDelta hurwitz_delta(long long k_sq) {
  long long delta = 2 * k_sq + 8;
  return {delta, delta <= 24};
}

struct HurwitzOrders {
  bool all_orders;  // every q >= 2 works (the rational totally-ramified family)
  std::vector<long long> orders;

  bool contains(long long q) const {
    if (q < 2) return false;
    if (all_orders) return true;
    for (long long o : orders)
      if (o == q) return true;
    return false;
  }
};

// Cyclic group orders q >= 2 admitting a quotient curve for a cover of curves
// totally ramified at exactly `total_points` points and unramified elsewhere:
// 2 g_B - 2 = q (2 g_C - 2) + total_points (q - 1) with integer g_C >= 0.
// Equivalently q divides N = 2 g_B - 2 + total_points with N/q = 2 g_C - 2 +
// total_points. N = 0 makes every q work.
inline HurwitzOrders hurwitz_branch_orders(long long g_B, long long total_points) {
  if (g_B < 0) throw std::invalid_argument("hurwitz_branch_orders: genus must be >= 0");
  if (total_points < 1)
    throw std::invalid_argument("hurwitz_branch_orders: need at least one branch point");
  const long long n = 2 * g_B - 2 + total_points;
  if (n == 0) return {true, {}};

  std::vector<long long> orders;
  const long long abs_n = n < 0 ? -n : n;
  for (long long q = 2; q <= abs_n; ++q) {
    if (abs_n % q != 0) continue;
    long long m = n / q;  // = 2 g_C - 2 + total_points
    if ((m - total_points) % 2 != 0) continue;
    long long g_c2 = m - total_points + 2;  // = 2 g_C
    if (g_c2 < 0) continue;
    orders.push_back(q);
  }
  return {false, orders};
}

// Hodge-index bound for n rulings with pairwise fibre intersection a on a
// rational surface with K^2 > 0: K^2 <= 4n / (a (n-1)).
inline Rational lemma7_bound(long long n, long long a) {
  if (n < 2) throw std::invalid_argument("lemma7_bound: need at least two rulings");
  if (a < 1) throw std::invalid_argument("lemma7_bound: fibre intersection must be positive");
  return Rational(4 * n, a * (n - 1));
}

}  // namespace k3ns
