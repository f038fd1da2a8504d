#pragma once

#include <stdexcept>
#include <string>

namespace k3ns {

enum class SurfaceKind { ProjectivePlane, Hirzebruch };

// Minimal rational surface carrying the Picard lattice used throughout: the
// projective plane (rank 1, generated by the line class H) or a Hirzebruch
// surface F_e (rank 2, generated by a section C0 with C0^2 = -e and a fibre
// F). Blow-ups are never modelled as lattice extensions; everything the case
// analysis needs lives on these minimal models plus the equivariant transform
// calculus.
class SurfaceModel {
 public:
  static SurfaceModel plane() { return SurfaceModel(SurfaceKind::ProjectivePlane, 0); }

  static SurfaceModel hirzebruch(long long e) {
    if (e < 0) throw std::invalid_argument("hirzebruch: invariant must be >= 0");
    // Guard against runaway transform chains.
    if (e > 64) throw std::invalid_argument("hirzebruch: invariant out of range");
    return SurfaceModel(SurfaceKind::Hirzebruch, e);
  }

  SurfaceKind kind() const { return kind_; }

  long long e() const {
    require_ruled();
    return e_;
  }

  long long k_squared() const {
    return kind_ == SurfaceKind::ProjectivePlane ? 9 : 8;
  }
  long long chi_top() const {
    return kind_ == SurfaceKind::ProjectivePlane ? 3 : 4;
  }
  // For these minimal models rho = 10 - K^2 exactly (1 for the plane, 2 for
  // any Hirzebruch surface).
  long long picard_rank() const { return 10 - k_squared(); }

  std::string name() const {
    if (kind_ == SurfaceKind::ProjectivePlane) return "P2";
    return "F" + std::to_string(e_);
  }

  friend bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
    return a.kind_ == b.kind_ && a.e_ == b.e_;
  }
  friend bool operator!=(const SurfaceModel& a, const SurfaceModel& b) {
    return !(a == b);
  }

 private:
  SurfaceModel(SurfaceKind kind, long long e) : kind_(kind), e_(e) {}
  void require_ruled() const {
    if (kind_ != SurfaceKind::Hirzebruch)
      throw std::invalid_argument("SurfaceModel: operation needs a ruled surface");
  }

  SurfaceKind kind_;
  long long e_;
};

// Element of the Picard lattice: d*H on the plane, a*C0 + b*F on F_e. The
// pairing rules are fixed: H.H = 1, C0.C0 = -e, C0.F = 1, F.F = 0.
class DivisorClass {
 public:
  static DivisorClass on_plane(long long d) {
    return DivisorClass(SurfaceKind::ProjectivePlane, d, 0);
  }
  static DivisorClass on_hirzebruch(long long a, long long b) {
    return DivisorClass(SurfaceKind::Hirzebruch, a, b);
  }

  SurfaceKind kind() const { return kind_; }
  long long h() const {
    if (kind_ != SurfaceKind::ProjectivePlane)
      throw std::invalid_argument("DivisorClass: not a plane class");
    return a_;
  }
  long long a() const {
    require_ruled();
    return a_;
  }
  long long b() const {
    require_ruled();
    return b_;
  }

  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    if (x.kind_ != y.kind_)
      throw std::invalid_argument("DivisorClass: mixed surface kinds");
    return DivisorClass(x.kind_, x.a_ + y.a_, x.b_ + y.b_);
  }
  friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    if (x.kind_ != y.kind_)
      throw std::invalid_argument("DivisorClass: mixed surface kinds");
    return DivisorClass(x.kind_, x.a_ - y.a_, x.b_ - y.b_);
  }
  friend DivisorClass operator*(long long c, const DivisorClass& x) {
    return DivisorClass(x.kind_, c * x.a_, c * x.b_);
  }

  friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
    return x.kind_ == y.kind_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const DivisorClass& x, const DivisorClass& y) {
    return !(x == y);
  }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // "6H" on the plane, "(a,b)" on F_0, "3C0+12F" on F_e with e > 0.
  std::string str(const SurfaceModel& X) const {
    check_on(X);
    if (kind_ == SurfaceKind::ProjectivePlane) {
      if (a_ == 0) return "0";
      if (a_ == 1) return "H";
      if (a_ == -1) return "-H";
      return std::to_string(a_) + "H";
    }
    if (X.e() == 0)
      return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
    if (a_ == 0 && b_ == 0) return "0";
    std::string out;
    if (a_ != 0) {
      if (a_ == 1)
        out += "C0";
      else if (a_ == -1)
        out += "-C0";
      else
        out += std::to_string(a_) + "C0";
    }
    if (b_ != 0) {
      if (!out.empty() && b_ > 0) out += "+";
      if (b_ == 1)
        out += "F";
      else if (b_ == -1)
        out += "-F";
      else
        out += std::to_string(b_) + "F";
    }
    return out;
  }

  void check_on(const SurfaceModel& X) const {
    if (kind_ != X.kind())
      throw std::invalid_argument("DivisorClass: class does not live on this surface");
  }

 private:
  DivisorClass(SurfaceKind kind, long long a, long long b)
      : kind_(kind), a_(a), b_(b) {}
  void require_ruled() const {
    if (kind_ != SurfaceKind::Hirzebruch)
      throw std::invalid_argument("DivisorClass: not a ruled-surface class");
  }

  SurfaceKind kind_;
  long long a_;  // H coefficient on the plane, C0 coefficient on F_e
  long long b_;  // F coefficient on F_e
};

inline long long intersect(const DivisorClass& d1, const DivisorClass& d2,
                           const SurfaceModel& X) {
  d1.check_on(X);
  d2.check_on(X);
  if (X.kind() == SurfaceKind::ProjectivePlane) return d1.h() * d2.h();
  return -X.e() * d1.a() * d2.a() + d1.a() * d2.b() + d2.a() * d1.b();
}

inline DivisorClass canonical_class(const SurfaceModel& X) {
  if (X.kind() == SurfaceKind::ProjectivePlane) return DivisorClass::on_plane(-3);
  return DivisorClass::on_hirzebruch(-2, -(X.e() + 2));
}

// Adjunction genus g = 1 + (D^2 + D.K)/2. A parity violation means the class
// is not a curve class on this lattice.
inline long long genus_adjunction(const DivisorClass& d, const SurfaceModel& X) {
  long long self = intersect(d, d, X);
  long long with_k = intersect(d, canonical_class(X), X);
  if ((self + with_k) % 2 != 0)
    throw std::domain_error("genus_adjunction: D^2 + D.K is odd");
  return 1 + (self + with_k) / 2;
}

// Horizontal degree of the anti-bicanonical double-cover branch on a ruled
// surface: (-2K).F = 4, independent of e. The plane has no chosen ruling.
inline long long fibre_degree_of_branch(const SurfaceModel& X) {
  if (X.kind() != SurfaceKind::Hirzebruch)
    throw std::invalid_argument("fibre_degree_of_branch: surface has no ruling");
  DivisorClass branch = -2 * canonical_class(X);
  return intersect(branch, DivisorClass::on_hirzebruch(0, 1), X);
}

}  // namespace k3ns
