#pragma once

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "k3ns/modular.hpp"
#include "k3ns/rational.hpp"

namespace k3ns {

// Diagonal action x_j -> zeta^{w_j} x_j on homogeneous coordinates, zeta a
// primitive root of unity of order n. Three weights for the plane, four for
// bidegree coordinates on P1 x P1.
class MonomialAction {
 public:
  MonomialAction(const std::vector<long long>& weights, long long order) {
    if (weights.empty())
      throw std::invalid_argument("MonomialAction: need at least one weight");
    weights_.reserve(weights.size());
    for (long long w : weights) weights_.emplace_back(w, order);
  }

  const std::vector<Residue>& weights() const { return weights_; }
  long long order() const { return weights_.front().modulus(); }
  std::size_t arity() const { return weights_.size(); }

 private:
  std::vector<Residue> weights_;
};

namespace detail {
inline Residue character_impl(const long long* exps, std::size_t count,
                              const MonomialAction& action) {
  if (count != action.arity())
    throw std::invalid_argument("monomial_character: exponent/weight length mismatch");
  Residue sum(0, action.order());
  for (std::size_t i = 0; i < count; ++i)
    sum = sum + Residue(exps[i], action.order()) * action.weights()[i];
  return sum;
}
}  // namespace detail

inline Residue monomial_character(const std::vector<long long>& exponents,
                                  const MonomialAction& action) {
  return detail::character_impl(exponents.data(), exponents.size(), action);
}
inline Residue monomial_character(const std::array<long long, 3>& exponents,
                                  const MonomialAction& action) {
  return detail::character_impl(exponents.data(), exponents.size(), action);
}
inline Residue monomial_character(const std::array<long long, 4>& exponents,
                                  const MonomialAction& action) {
  return detail::character_impl(exponents.data(), exponents.size(), action);
}

// Degree-d plane monomials with the given character, in descending
// lexicographic order of exponent triples.
inline std::vector<std::array<long long, 3>> invariant_monomials(
    long long degree, const MonomialAction& action, const Residue& target) {
  if (degree < 0) throw std::invalid_argument("invariant_monomials: negative degree");
  if (action.arity() != 3)
    throw std::invalid_argument("invariant_monomials: plane action must have 3 weights");
  if (target.modulus() != action.order())
    throw std::invalid_argument("invariant_monomials: target modulus mismatch");
  std::vector<std::array<long long, 3>> out;
  for (long long i = degree; i >= 0; --i)
    for (long long j = degree - i; j >= 0; --j) {
      std::array<long long, 3> e{i, j, degree - i - j};
      if (monomial_character(e, action) == target) out.push_back(e);
    }
  return out;
}

// Bidegree-(d1,d2) monomials x0^a x1^b y0^c y1^d (a+b = d1, c+d = d2) with the
// given character, same ordering convention.
inline std::vector<std::array<long long, 4>> invariant_monomials_bidegree(
    long long d1, long long d2, const MonomialAction& action, const Residue& target) {
  if (d1 < 0 || d2 < 0)
    throw std::invalid_argument("invariant_monomials_bidegree: negative degree");
  if (action.arity() != 4)
    throw std::invalid_argument("invariant_monomials_bidegree: action must have 4 weights");
  std::vector<std::array<long long, 4>> out;
  for (long long a = d1; a >= 0; --a)
    for (long long c = d2; c >= 0; --c) {
      std::array<long long, 4> e{a, d1 - a, c, d2 - c};
      if (monomial_character(e, action) == target) out.push_back(e);
    }
  return out;
}

// Plane curve of fixed degree with exact rational coefficients, keyed by
// exponent triples. Zero coefficients are dropped; the zero curve is rejected.
class PlaneCurve {
 public:
  using Exponents = std::array<long long, 3>;
  using TermMap = std::map<Exponents, Rational>;

  PlaneCurve(long long degree, TermMap terms) : degree_(degree) {
    if (degree_ < 1) throw std::invalid_argument("PlaneCurve: degree must be >= 1");
    for (auto& [e, c] : terms) {
      if (e[0] < 0 || e[1] < 0 || e[2] < 0)
        throw std::invalid_argument("PlaneCurve: negative exponent");
      if (e[0] + e[1] + e[2] != degree_)
        throw std::invalid_argument("PlaneCurve: exponents do not sum to the degree");
      if (!c.is_zero()) terms_.emplace(e, c);
    }
    if (terms_.empty()) throw std::invalid_argument("PlaneCurve: identically zero");
  }

  long long degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }

  friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  long long degree_;
  TermMap terms_;
};

// The curve is carried to a scalar multiple of itself exactly when all
// monomials present share one character; character 0 is not required, since
// projective invariance allows a global scalar.
inline bool curve_invariance(const PlaneCurve& curve, const MonomialAction& action) {
  std::optional<Residue> shared;
  for (const auto& [e, c] : curve.terms()) {
    Residue chi = monomial_character(e, action);
    if (!shared)
      shared = chi;
    else if (*shared != chi)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Order-50 case data.
//
// The order-25 quotient action on the plane has the shape
// diag(zeta, zeta^{5a+1}, 1). A branch curve meeting the coordinate line
// {x1 = 0} only at (0:0:1), with fibre-line contact of order k there, forces
// 5a + 1 = k (mod 25); this is solvable only for k = 1 (mod 5).
// ---------------------------------------------------------------------------

inline long long m50_alpha_from_tangency(long long contact_order) {
  if (contact_order < 1)
    throw std::invalid_argument("m50_alpha_from_tangency: contact order must be positive");
  long long rhs = contact_order - 1;
  if (rhs % 5 != 0)
    throw std::domain_error(
        "m50_alpha_from_tangency: no invariant branch of this contact order "
        "(5a+1 = k mod 25 has no solution)");
  return (rhs / 5) % 5;
}

// Contact order 6 at the third coordinate point pins a = 1.
inline long long solve_alpha_m50() { return m50_alpha_from_tangency(6); }

inline MonomialAction m50_action() {
  return MonomialAction({1, 5 * solve_alpha_m50() + 1, 0}, 25);
}

// X0^6 + X0 X1^5 + X1 X2^5, the unique invariant sextic of the order-50 case.
inline PlaneCurve m50_branch_sextic() {
  PlaneCurve::TermMap t;
  t[{6, 0, 0}] = Rational(1);
  t[{1, 5, 0}] = Rational(1);
  t[{0, 1, 5}] = Rational(1);
  return PlaneCurve(6, std::move(t));
}

// Diagonal rescaling certificate bringing coefficients (c1, c2, c3) on the
// monomials X0^6, X0 X1^5, X1 X2^5 to (1, 1, 1). With the x0 scaling fixed to
// 1 the remaining scalings are determined only through their 5th and 25th
// powers, which are rational; the induced third coefficient is a rational
// number whose 5th power is 1, hence exactly 1.
struct TorusScaling {
  Rational mu;             // overall rescaling of the equation
  Rational lambda1_pow5;   // fifth power of the x1 scaling
  Rational lambda2_pow25;  // twenty-fifth power of the x2 scaling

  bool is_identity() const {
    return mu == Rational(1) && lambda1_pow5 == Rational(1) &&
           lambda2_pow25 == Rational(1);
  }
};

inline TorusScaling torus_normalize(const Rational& c1, const Rational& c2,
                                    const Rational& c3) {
  if (c1.is_zero() || c2.is_zero() || c3.is_zero())
    throw std::domain_error("torus_normalize: degenerate member, zero coefficient");
  TorusScaling s;
  s.mu = Rational(1) / c1;
  s.lambda1_pow5 = c1 / c2;
  s.lambda2_pow25 = pow(c1 / c3, 5) * (c2 / c1);
  // (mu c3 lambda1 lambda2^5)^5 = 1 identically; guard the algebra.
  if (pow(s.mu * c3, 5) * s.lambda1_pow5 * s.lambda2_pow25 != Rational(1))
    throw std::logic_error("torus_normalize: scaling certificate inconsistent");
  return s;
}

// ---------------------------------------------------------------------------
// Finite-field smoothness certification: exhaustive scan of the p^2 + p + 1
// points of the projective plane over F_p for a common zero of the curve and
// its three partial derivatives. A clean scan at a good prime certifies
// characteristic-zero smoothness: a singular point of the curve over Q would
// specialize into every prime fiber of the arithmetic family.
// ---------------------------------------------------------------------------

namespace detail {

struct FpTerm {
  long long e0, e1, e2;
  long long c;  // coefficient mod p
};

inline long long mod_pow(long long base, long long exp, long long p) {
  long long out = 1;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) out = out * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return out;
}

struct FpCurve {
  long long p;
  long long degree;
  std::vector<FpTerm> value;
  std::array<std::vector<FpTerm>, 3> partials;
};

inline FpCurve reduce_curve(const PlaneCurve& curve, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("smooth_over_fp: modulus is not prime");
  if (curve.degree() % p == 0)
    throw std::invalid_argument("smooth_over_fp: prime divides the degree");
  FpCurve out;
  out.p = p;
  out.degree = curve.degree();
  for (const auto& [e, c] : curve.terms()) {
    if (c.den() % p == 0)
      throw std::invalid_argument("smooth_over_fp: prime divides a coefficient denominator");
    long long num = c.num() % p;
    if (num < 0) num += p;
    long long coeff = num * mod_pow(c.den(), p - 2, p) % p;
    if (coeff == 0) continue;
    out.value.push_back({e[0], e[1], e[2], coeff});
  }
  if (out.value.empty())
    throw std::invalid_argument("smooth_over_fp: curve vanishes identically mod p");
  for (int v = 0; v < 3; ++v) {
    for (const FpTerm& t : out.value) {
      std::array<long long, 3> e{t.e0, t.e1, t.e2};
      if (e[v] == 0) continue;
      long long coeff = t.c * (e[v] % p) % p;
      if (coeff == 0) continue;
      std::array<long long, 3> d = e;
      d[v] -= 1;
      out.partials[v].push_back({d[0], d[1], d[2], coeff});
    }
  }
  return out;
}

// pw[v][k] = v^k mod p for 0 <= k <= degree.
inline std::vector<std::vector<long long>> power_table(long long p, long long degree) {
  std::vector<std::vector<long long>> pw(static_cast<std::size_t>(p));
  for (long long v = 0; v < p; ++v) {
    auto& row = pw[static_cast<std::size_t>(v)];
    row.resize(static_cast<std::size_t>(degree) + 1);
    row[0] = 1;
    for (long long k = 1; k <= degree; ++k) row[k] = row[k - 1] * v % p;
  }
  return pw;
}

inline long long eval_terms(const std::vector<FpTerm>& terms,
                            const std::vector<std::vector<long long>>& pw,
                            long long x, long long y, long long z, long long p) {
  long long acc = 0;
  for (const FpTerm& t : terms) {
    long long m = t.c * pw[x][t.e0] % p;
    m = m * pw[y][t.e1] % p;
    m = m * pw[z][t.e2] % p;
    acc = (acc + m) % p;
  }
  return acc;
}

}  // namespace detail

// First singular F_p-point of the curve in scan order, if any: a common zero
// of the curve and its three partials among the representatives (1:y:z),
// (0:1:z), (0:0:1).
inline std::optional<std::array<long long, 3>> singular_point_fp(const PlaneCurve& curve,
                                                                 long long p) {
  detail::FpCurve f = detail::reduce_curve(curve, p);
  auto pw = detail::power_table(p, curve.degree());
  auto singular_at = [&](long long x, long long y, long long z) {
    if (detail::eval_terms(f.value, pw, x, y, z, p) != 0) return false;
    for (int v = 0; v < 3; ++v)
      if (detail::eval_terms(f.partials[v], pw, x, y, z, p) != 0) return false;
    return true;
  };
  for (long long y = 0; y < p; ++y)
    for (long long z = 0; z < p; ++z)
      if (singular_at(1, y, z)) return std::array<long long, 3>{1, y, z};
  for (long long z = 0; z < p; ++z)
    if (singular_at(0, 1, z)) return std::array<long long, 3>{0, 1, z};
  if (singular_at(0, 0, 1)) return std::array<long long, 3>{0, 0, 1};
  return std::nullopt;
}

inline bool smooth_over_fp(const PlaneCurve& curve, long long p) {
  return !singular_point_fp(curve, p).has_value();
}

// ---------------------------------------------------------------------------
// Curve file format: one term per line, "i j k : num/den" (or "i j k : num"),
// '#' starts a comment. The degree is inferred from the first term and all
// terms must agree with it. Parsing is exact; no floats.
// ---------------------------------------------------------------------------

inline PlaneCurve parse_curve(std::istream& in) {
  PlaneCurve::TermMap terms;
  long long degree = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    long long i, j, k;
    if (!(ls >> i))
      throw std::runtime_error("curve parse error at line " + std::to_string(lineno) +
                               ": expected 'i j k : num/den'");
    char colon = 0;
    std::string coeff;
    if (!(ls >> j >> k >> colon >> coeff) || colon != ':')
      throw std::runtime_error("curve parse error at line " + std::to_string(lineno) +
                               ": expected 'i j k : num/den'");
    std::string trailing;
    if (ls >> trailing)
      throw std::runtime_error("curve parse error at line " + std::to_string(lineno) +
                               ": trailing input");
    if (i < 0 || j < 0 || k < 0)
      throw std::runtime_error("curve parse error at line " + std::to_string(lineno) +
                               ": negative exponent");
    long long num = 0, den = 1;
    auto slash = coeff.find('/');
    try {
      if (slash == std::string::npos) {
        num = std::stoll(coeff);
      } else {
        num = std::stoll(coeff.substr(0, slash));
        den = std::stoll(coeff.substr(slash + 1));
      }
    } catch (const std::exception&) {
      throw std::runtime_error("curve parse error at line " + std::to_string(lineno) +
                               ": bad coefficient '" + coeff + "'");
    }
    if (den == 0)
      throw std::runtime_error("curve parse error at line " + std::to_string(lineno) +
                               ": zero denominator");
    long long sum = i + j + k;
    if (degree < 0)
      degree = sum;
    else if (sum != degree)
      throw std::runtime_error("curve parse error at line " + std::to_string(lineno) +
                               ": exponent sum " + std::to_string(sum) +
                               " does not match degree " + std::to_string(degree));
    std::array<long long, 3> e{i, j, k};
    auto [it, inserted] = terms.emplace(e, Rational(num, den));
    if (!inserted)
      throw std::runtime_error("curve parse error at line " + std::to_string(lineno) +
                               ": duplicate monomial");
  }
  if (degree < 0) throw std::runtime_error("curve parse error: no terms");
  return PlaneCurve(degree, std::move(terms));
}

}  // namespace k3ns
