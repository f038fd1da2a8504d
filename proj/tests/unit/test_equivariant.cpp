#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "k3ns/equivariant.hpp"

using namespace k3ns;

namespace {

EquivariantRuledModel random_model(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> order(2, 66);
  std::uniform_int_distribution<long long> square(-30, 30);
  long long n = order(rng);
  long long s1 = square(rng);
  std::uniform_int_distribution<long long> type(0, n - 1);
  long long tau1 = type(rng);
  // The conserved congruence pins the second type.
  long long tau2 = ((s1 - tau1) % n + n) % n;
  return EquivariantRuledModel::from_section_types(n, s1, tau1, tau2);
}

TransformCentre random_centre(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return TransformCentre::A1;
    case 1: return TransformCentre::B1;
    case 2: return TransformCentre::A2;
    default: return TransformCentre::B2;
  }
}

// The model constructor enforces all invariants; this re-checks them through
// the public surface for clarity in the property test.
void require_invariants(const EquivariantRuledModel& m) {
  REQUIRE(m.s1_sq() + m.s2_sq() == 0);
  REQUIRE(m.tau_a1() + m.tau_b1() == Residue(0, m.n()));
  REQUIRE(m.tau_a2() + m.tau_b2() == Residue(0, m.n()));
  REQUIRE(lemma6_check(m.tau_a1(), m.tau_a2(), -m.s1_sq(), m.n()));
  REQUIRE(lemma6_check(m.tau_b1(), m.tau_b2(), -m.s2_sq(), m.n()));
}

}  // namespace

TEST_CASE("lemma6 congruence examples") {
  CHECK(lemma6_check(Residue(7, 22), Residue(11, 22), 4, 22));
  CHECK(lemma6_check(Residue(0, 9), Residue(0, 9), 0, 9));
  CHECK(lemma6_check(Residue(13, 19), Residue(5, 19), 1, 19));
  CHECK(!lemma6_check(Residue(7, 22), Residue(11, 22), 5, 22));
  CHECK_THROWS_AS(lemma6_check(Residue(1, 5), Residue(1, 7), 0, 7), std::invalid_argument);
}

TEST_CASE("opposite types on one fibre") {
  CHECK(same_fibre_opposite(Residue(15, 22)) == Residue(7, 22));
  CHECK(same_fibre_opposite(Residue(0, 9)) == Residue(0, 9));
  CHECK(same_fibre_opposite(Residue(10, 19)) == Residue(9, 19));
}

TEST_CASE("weights from invariant branches") {
  // Fibre tangency of order 3 at order 22, and of order 4 at order 19.
  CHECK(weight_from_invariant_branch(1, 3, Residue(1, 22)) == Residue(15, 22));
  CHECK(weight_from_invariant_branch(1, 4, Residue(1, 19)) == Residue(5, 19));
  CHECK(weight_from_invariant_branch(1, 1, Residue(1, 7)) == Residue(1, 7));
  CHECK_THROWS_AS(weight_from_invariant_branch(1, 2, Residue(1, 22)), std::domain_error);
}

TEST_CASE("branch weight times contact order is the base weight, all coprime pairs") {
  for (long long n = 2; n <= 66; ++n)
    for (long long k = 1; k <= n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      Residue w = weight_from_invariant_branch(1, k, Residue(1, n));
      REQUIRE((w * Residue(k, n)).value() == 1 % n);
    }
}

TEST_CASE("symplectic test") {
  CHECK(symplectic_test(LocalWeights(Residue(1, 7), Residue(6, 7))));
  CHECK(!symplectic_test(LocalWeights(Residue(1, 2), Residue(0, 2))));
  CHECK(symplectic_test(LocalWeights(Residue(2, 5), Residue(3, 5))));
  CHECK_THROWS_AS(symplectic_test(LocalWeights(Residue(0, 1), Residue(0, 1))),
                  std::invalid_argument);
}

TEST_CASE("restriction to subgroups") {
  LocalWeights w(Residue(1, 10), Residue(9, 10));
  LocalWeights r = restrict_to_subgroup(w, 5);
  CHECK(r.t == Residue(1, 5));
  CHECK(r.x == Residue(4, 5));

  LocalWeights same = restrict_to_subgroup(LocalWeights(Residue(3, 8), Residue(5, 8)), 8);
  CHECK(same == LocalWeights(Residue(3, 8), Residue(5, 8)));

  LocalWeights two = restrict_to_subgroup(LocalWeights(Residue(1, 8), Residue(6, 8)), 2);
  CHECK(two == LocalWeights(Residue(1, 2), Residue(0, 2)));

  CHECK_THROWS_AS(restrict_to_subgroup(w, 3), std::invalid_argument);
  CHECK_THROWS_AS(restrict_to_subgroup(w, 1), std::invalid_argument);
}

TEST_CASE("weight lifting through local coverings") {
  // Degree 6 on both directions, order 5: unchanged since 6 = 1 (mod 5).
  LocalWeights w(Residue(2, 5), Residue(3, 5));
  LocalWeights lifted = lift_weights(w, 6, 6);
  CHECK(lifted == w);
  CHECK(symplectic_test(lifted));

  CHECK(lift_weights(w, 1, 1) == w);

  LocalWeights l3 = lift_weights(LocalWeights(Residue(1, 3), Residue(1, 3)), 2, 1);
  CHECK(l3 == LocalWeights(Residue(2, 3), Residue(1, 3)));
  CHECK(symplectic_test(l3));

  CHECK_THROWS_AS(lift_weights(LocalWeights(Residue(1, 4), Residue(1, 4)), 2, 1),
                  std::domain_error);
}

TEST_CASE("symplectic restrictions are monotone under further restriction") {
  // If the weight sum vanishes mod d, it vanishes mod every divisor of d.
  for (long long n = 2; n <= 30; ++n)
    for (long long wt = 0; wt < n; ++wt)
      for (long long wx = 0; wx < n; ++wx) {
        LocalWeights w(Residue(wt, n), Residue(wx, n));
        for (long long d = 2; d <= n; ++d) {
          if (n % d != 0) continue;
          if (!symplectic_test(restrict_to_subgroup(w, d))) continue;
          for (long long d2 = 2; d2 <= d; ++d2)
            if (d % d2 == 0)
              REQUIRE(symplectic_test(restrict_to_subgroup(w, d2)));
        }
      }
}

TEST_CASE("double cover lifts and power weights") {
  // Order-22 weights (1, 11) at a branch-section point lift to order 44; the
  // 11th powers are order-4 elements with nonzero weight sum.
  LocalWeights down(Residue(1, 22), Residue(11, 22));
  for (const LocalWeights& lift : double_cover_lifts(down)) {
    CHECK(lift.order() == 44);
    CHECK(lift.t == Residue(2, 44));
    LocalWeights pow = subgroup_element_weights(lift, 11);
    CHECK(pow.order() == 4);
    CHECK(!symplectic_test(pow));
  }
}

TEST_CASE("model construction validates the invariants") {
  // Opposite-type violation: tau_b1 must be -tau_a1 = 15.
  CHECK_THROWS_AS(EquivariantRuledModel(22, -4, 4, Residue(7, 22), Residue(11, 22),
                                        Residue(14, 22), Residue(11, 22)),
                  std::invalid_argument);
  // Section squares must sum to zero.
  CHECK_THROWS_AS(EquivariantRuledModel(22, -4, 5, Residue(7, 22), Residue(11, 22),
                                        Residue(15, 22), Residue(11, 22)),
                  std::invalid_argument);
  CHECK_THROWS_AS(EquivariantRuledModel(22, -4, 4, Residue(7, 22), Residue(12, 22),
                                        Residue(15, 22), Residue(10, 22)),
                  std::invalid_argument);
  CHECK_THROWS_AS(EquivariantRuledModel::from_section_types(22, -4, 7, 12),
                  std::invalid_argument);
  // The order-44 model itself is fine.
  EquivariantRuledModel m = EquivariantRuledModel::from_section_types(22, -4, 7, 11);
  CHECK(m.tau_b1() == Residue(15, 22));
  CHECK(m.tau_b2() == Residue(11, 22));
}

TEST_CASE("named transform chains") {
  SECTION("order 44: 7 at a1 then 11 at b2 lands on F0 with zero types") {
    EquivariantRuledModel m = EquivariantRuledModel::from_section_types(22, -4, 7, 11);
    for (int i = 0; i < 7; ++i) m = elementary_transform(m, TransformCentre::A1);
    CHECK(m.tau_a1().is_zero());
    CHECK(m.tau_b1().is_zero());
    CHECK(m.s1_sq() == -11);
    for (int i = 0; i < 11; ++i) m = elementary_transform(m, TransformCentre::B2);
    CHECK(m.all_types_zero());
    CHECK(m.s1_sq() == 0);
    CHECK(free_quotient(m) == SurfaceModel::hirzebruch(0));
  }

  SECTION("F12 chains for the 3|m orders end on F_{m/6} and descend to F1") {
    for (long long mm : {48LL, 54LL, 66LL}) {
      long long n = mm / 6;
      long long a1 = (mm == 48) ? 1 : (mm == 54) ? 1 : 0;
      long long a2 = (12 - n) - a1;
      EquivariantRuledModel m =
          EquivariantRuledModel::from_section_types(n, -12, n - a1, n - a2);
      for (long long i = 0; i < a1; ++i) m = elementary_transform(m, TransformCentre::B1);
      for (long long i = 0; i < a2; ++i) m = elementary_transform(m, TransformCentre::B2);
      REQUIRE(m.all_types_zero());
      REQUIRE(m.s1_sq() == -n);
      REQUIRE(free_quotient(m) == SurfaceModel::hirzebruch(1));
    }
  }

  SECTION("a transform at a zero type wraps around") {
    EquivariantRuledModel m = EquivariantRuledModel::from_section_types(9, 0, 0, 0);
    EquivariantRuledModel t = elementary_transform(m, TransformCentre::A1);
    CHECK(t.tau_a1() == Residue(8, 9));
    CHECK(t.tau_b1() == Residue(1, 9));
  }
}

TEST_CASE("free quotient examples and failure modes") {
  EquivariantRuledModel f0 = EquivariantRuledModel::from_section_types(7, 0, 0, 0);
  CHECK(free_quotient(f0) == SurfaceModel::hirzebruch(0));

  EquivariantRuledModel f19 = EquivariantRuledModel::from_section_types(19, -19, 0, 0);
  CHECK(free_quotient(f19) == SurfaceModel::hirzebruch(1));

  EquivariantRuledModel types_left = EquivariantRuledModel::from_section_types(5, -3, 1, 1);
  CHECK_THROWS_AS(free_quotient(types_left), std::domain_error);

  // Zero types already force n | s1^2 through the conserved congruence, so a
  // model that would trip the divisibility error cannot even be built.
  CHECK_THROWS_AS(EquivariantRuledModel::from_section_types(5, -9, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("conservation: random models, random 20-step transform sequences") {
  std::mt19937_64 rng(0x5eed0001);
  const int kModels = 10000;
  for (int t = 0; t < kModels; ++t) {
    EquivariantRuledModel m = random_model(rng);
    require_invariants(m);
    for (int step = 0; step < 20; ++step) {
      m = elementary_transform(m, random_centre(rng));
      require_invariants(m);
    }
  }
}

TEST_CASE("reversibility: opposite-point transform restores the model") {
  std::mt19937_64 rng(0x5eed0002);
  for (int t = 0; t < 2000; ++t) {
    EquivariantRuledModel m = random_model(rng);
    TransformCentre c = random_centre(rng);
    EquivariantRuledModel restored =
        elementary_transform(elementary_transform(m, c), opposite_centre(c));
    REQUIRE(restored == m);
  }
}
