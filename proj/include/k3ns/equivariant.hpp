#pragma once

#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "k3ns/lattice.hpp"
#include "k3ns/modular.hpp"

namespace k3ns {

// Diagonalized local weights of a cyclic action at a fixed point on a ruled
// surface: gamma(t) = xi^{w_t} t along the base direction, gamma(x) = xi^{w_x} x
// along the fibre direction, xi a primitive d-th root of unity. The fixed-point
// "type" of the definitions below is w_x normalized so that w_t = 1.
struct LocalWeights {
  Residue t;
  Residue x;

  LocalWeights(Residue t_, Residue x_) : t(t_), x(x_) {
    if (t.modulus() != x.modulus())
      throw std::invalid_argument("LocalWeights: weights must share a modulus");
  }
  long long order() const { return t.modulus(); }

  friend bool operator==(const LocalWeights& a, const LocalWeights& b) {
    return a.t == b.t && a.x == b.x;
  }
  friend bool operator!=(const LocalWeights& a, const LocalWeights& b) {
    return !(a == b);
  }
  std::string str() const {
    return "(" + std::to_string(t.value()) + "," + std::to_string(x.value()) +
           ") mod " + std::to_string(t.modulus());
  }
};

// A linearization is locally symplectic exactly when it has determinant 1,
// i.e. is of the form (zeta, zeta^{-1}).
inline bool symplectic_test(const LocalWeights& w) {
  if (w.order() < 2)
    throw std::invalid_argument("symplectic_test: order must be >= 2");
  return (w.t + w.x).is_zero();
}

// Weights of gamma^{n/d} at the same point, as an order-d element: both
// weights reduce mod d, since xi_n^{(n/d) w} = xi_d^{w}.
inline LocalWeights restrict_to_subgroup(const LocalWeights& w, long long d) {
  long long n = w.order();
  if (d < 2) throw std::invalid_argument("restrict_to_subgroup: d must be >= 2");
  if (n % d != 0)
    throw std::invalid_argument("restrict_to_subgroup: d does not divide the order");
  return LocalWeights(Residue(w.t.value(), d), Residue(w.x.value(), d));
}

// Weights upstairs of a covering that is locally (t, x) -> (t^{e_t}, x^{e_x}),
// for an element whose order d is prime to the local degrees: the weight in
// each direction is multiplied by the inverse of the corresponding degree.
// A non-coprime local degree changes the order of the lift; that situation is
// handled by subgroup analysis instead.
inline LocalWeights lift_weights(const LocalWeights& w, long long e_t, long long e_x) {
  if (e_t < 1 || e_x < 1)
    throw std::invalid_argument("lift_weights: local degrees must be positive");
  long long d = w.order();
  if (std::gcd(e_t * e_x, d) != 1)
    throw std::domain_error(
        "lift_weights: local degree not coprime to the order; the lift changes "
        "the order, use subgroup analysis instead");
  Residue it = inverse_mod(e_t, d);
  Residue ix = inverse_mod(e_x, d);
  return LocalWeights(it * w.t, ix * w.x);
}

// The two lifts of an order-n element through a double cover branched along
// the local curve {x = 0}: upstairs y^2 = x, the modulus doubles, the base
// weight doubles and the fibre weight is determined mod n only. The two
// entries differ by the covering involution.
inline std::array<LocalWeights, 2> double_cover_lifts(const LocalWeights& w) {
  long long n = w.order();
  Residue t_up(2 * w.t.value(), 2 * n);
  return {LocalWeights(t_up, Residue(w.x.value(), 2 * n)),
          LocalWeights(t_up, Residue(w.x.value() + n, 2 * n))};
}

// Weights of the k-th power of an element, expressed with respect to a
// primitive root of its own (smaller) order N/gcd(N,k).
inline LocalWeights subgroup_element_weights(const LocalWeights& w, long long k) {
  if (k < 1) throw std::invalid_argument("subgroup_element_weights: k must be >= 1");
  long long n = w.order();
  long long g = std::gcd(n, k);
  long long d = n / g;
  if (d < 1) throw std::invalid_argument("subgroup_element_weights: trivial power");
  long long f = k / g;  // xi_n^{k w} = xi_d^{(k/g) w}
  return LocalWeights(Residue(f * w.t.value(), d), Residue(f * w.x.value(), d));
}

// Two fixed points on one invariant fibre carry opposite types.
inline Residue same_fibre_opposite(const Residue& tau) { return -tau; }

// The conserved quantity of the type calculus: tau_1 + tau_2 + e = 0 (mod n)
// for the types along the two invariant fibres of an order-n action on F_e.
inline bool lemma6_check(const Residue& tau1, const Residue& tau2, long long e,
                         long long n) {
  if (tau1.modulus() != n || tau2.modulus() != n)
    throw std::invalid_argument("lemma6_check: residues must be mod n");
  return (tau1 + tau2 + Residue(e, n)).is_zero();
}

// Fibre weight forced by an invariant smooth branch with local form
// {t^{k_t} = c x^{k_x}} through a fixed point: k_t w_t = k_x w_x (mod n).
// With w_t = 1 and a branch tangent to the fibre to order k (k_t = 1,
// k_x = k) this is the inverse k^{-1} mod n.
inline Residue weight_from_invariant_branch(long long k_t, long long k_x,
                                            const Residue& w_t) {
  if (k_t < 1 || k_x < 1)
    throw std::invalid_argument("weight_from_invariant_branch: contact orders must be positive");
  long long n = w_t.modulus();
  if (std::gcd(k_x, n) != 1)
    throw std::domain_error(
        "weight_from_invariant_branch: no invariant branch of this contact order");
  return inverse_mod(k_x, n) * Residue(k_t, n) * w_t;
}

// The four marked fixed points of an order-n action on a ruled surface with
// two disjoint invariant sections: a1, a2 on section s1, b1, b2 on section s2,
// indexed by the invariant fibre containing them.
enum class TransformCentre { A1, B1, A2, B2 };

inline TransformCentre opposite_centre(TransformCentre c) {
  switch (c) {
    case TransformCentre::A1: return TransformCentre::B1;
    case TransformCentre::B1: return TransformCentre::A1;
    case TransformCentre::A2: return TransformCentre::B2;
    case TransformCentre::B2: return TransformCentre::A2;
  }
  throw std::logic_error("opposite_centre: bad centre");
}

inline std::string centre_name(TransformCentre c) {
  switch (c) {
    case TransformCentre::A1: return "a1";
    case TransformCentre::B1: return "b1";
    case TransformCentre::A2: return "a2";
    case TransformCentre::B2: return "b2";
  }
  throw std::logic_error("centre_name: bad centre");
}

// Hirzebruch surface with an order-n cyclic action, two disjoint invariant
// sections s1, s2 (squares -e and +e) and the four fixed-point types at the
// marked points. Three invariants hold at all times:
//   - s1^2 + s2^2 = 0,
//   - opposite points of one fibre carry opposite types,
//   - tau_a1 + tau_a2 + (-s1^2) = 0 (mod n), the conserved congruence.
// Both sections are tracked symmetrically because the transform chains of the
// case analysis alternate centres between them; the classical tau_i of the
// definitions is tau_a_i.
class EquivariantRuledModel {
 public:
  EquivariantRuledModel(long long n, long long s1_sq, long long s2_sq,
                        Residue tau_a1, Residue tau_a2, Residue tau_b1,
                        Residue tau_b2)
      : n_(n),
        s1_sq_(s1_sq),
        s2_sq_(s2_sq),
        tau_a1_(tau_a1),
        tau_a2_(tau_a2),
        tau_b1_(tau_b1),
        tau_b2_(tau_b2) {
    if (n_ < 1) throw std::invalid_argument("EquivariantRuledModel: order must be >= 1");
    for (const Residue* r : {&tau_a1_, &tau_a2_, &tau_b1_, &tau_b2_})
      if (r->modulus() != n_)
        throw std::invalid_argument("EquivariantRuledModel: type modulus mismatch");
    if (s1_sq_ + s2_sq_ != 0)
      throw std::invalid_argument(
          "EquivariantRuledModel: section squares must sum to zero");
    if (tau_a1_ + tau_b1_ != Residue(0, n_) || tau_a2_ + tau_b2_ != Residue(0, n_))
      throw std::invalid_argument(
          "EquivariantRuledModel: opposite points must carry opposite types");
    if (!lemma6_check(tau_a1_, tau_a2_, -s1_sq_, n_))
      throw std::invalid_argument(
          "EquivariantRuledModel: type congruence tau1 + tau2 + e = 0 violated");
  }

  // Model with section s1 of square -e and types tau_1, tau_2 at its marked
  // points; the opposite types are implied.
  static EquivariantRuledModel from_section_types(long long n, long long s1_sq,
                                                  long long tau1, long long tau2) {
    Residue a1(tau1, n), a2(tau2, n);
    return EquivariantRuledModel(n, s1_sq, -s1_sq, a1, a2, -a1, -a2);
  }

  long long n() const { return n_; }
  long long s1_sq() const { return s1_sq_; }
  long long s2_sq() const { return s2_sq_; }
  const Residue& tau_a1() const { return tau_a1_; }
  const Residue& tau_a2() const { return tau_a2_; }
  const Residue& tau_b1() const { return tau_b1_; }
  const Residue& tau_b2() const { return tau_b2_; }

  Residue tau(TransformCentre c) const {
    switch (c) {
      case TransformCentre::A1: return tau_a1_;
      case TransformCentre::B1: return tau_b1_;
      case TransformCentre::A2: return tau_a2_;
      case TransformCentre::B2: return tau_b2_;
    }
    throw std::logic_error("tau: bad centre");
  }

  bool all_types_zero() const {
    return tau_a1_.is_zero() && tau_a2_.is_zero() && tau_b1_.is_zero() &&
           tau_b2_.is_zero();
  }

  friend bool operator==(const EquivariantRuledModel& x,
                         const EquivariantRuledModel& y) {
    return x.n_ == y.n_ && x.s1_sq_ == y.s1_sq_ && x.s2_sq_ == y.s2_sq_ &&
           x.tau_a1_ == y.tau_a1_ && x.tau_a2_ == y.tau_a2_ &&
           x.tau_b1_ == y.tau_b1_ && x.tau_b2_ == y.tau_b2_;
  }
  friend bool operator!=(const EquivariantRuledModel& x,
                         const EquivariantRuledModel& y) {
    return !(x == y);
  }

  std::string str() const {
    return "n=" + std::to_string(n_) + " s1^2=" + std::to_string(s1_sq_) +
           " tau_a=(" + std::to_string(tau_a1_.value()) + "," +
           std::to_string(tau_a2_.value()) + ") tau_b=(" +
           std::to_string(tau_b1_.value()) + "," + std::to_string(tau_b2_.value()) +
           ")";
  }

 private:
  long long n_;
  long long s1_sq_;
  long long s2_sq_;
  Residue tau_a1_, tau_a2_, tau_b1_, tau_b2_;
};

// Elementary transform centred at a marked fixed point: blow the point up and
// blow down the strict transform of its fibre. The section through the centre
// loses 1 from its square, the other section gains 1; the type at the centre
// drops by 1 and the type at the opposite point of the same fibre rises by 1.
// All three model invariants are preserved; types wrap mod n and section
// squares may pass through 0.
inline EquivariantRuledModel elementary_transform(const EquivariantRuledModel& m,
                                                  TransformCentre c) {
  long long s1 = m.s1_sq();
  long long s2 = m.s2_sq();
  Residue a1 = m.tau_a1(), a2 = m.tau_a2(), b1 = m.tau_b1(), b2 = m.tau_b2();
  const Residue one(1, m.n());
  switch (c) {
    case TransformCentre::A1:
      s1 -= 1; s2 += 1; a1 = a1 - one; b1 = b1 + one;
      break;
    case TransformCentre::B1:
      s2 -= 1; s1 += 1; b1 = b1 - one; a1 = a1 + one;
      break;
    case TransformCentre::A2:
      s1 -= 1; s2 += 1; a2 = a2 - one; b2 = b2 + one;
      break;
    case TransformCentre::B2:
      s2 -= 1; s1 += 1; b2 = b2 - one; a2 = a2 + one;
      break;
  }
  return EquivariantRuledModel(m.n(), s1, s2, a1, a2, b1, b2);
}

// Quotient of a model with no isolated fixed points (all four types zero) by
// its cyclic group: a smooth Hirzebruch surface whose invariant is the section
// square divided by the order.
inline SurfaceModel free_quotient(const EquivariantRuledModel& m) {
  if (!m.all_types_zero())
    throw std::domain_error(
        "free_quotient: quotient not smooth Hirzebruch, isolated fixed points remain");
  long long e = std::abs(m.s1_sq());
  if (e % m.n() != 0)
    throw std::domain_error(
        "free_quotient: quotient not smooth Hirzebruch, order does not divide the "
        "section square");
  return SurfaceModel::hirzebruch(e / m.n());
}

}  // namespace k3ns
