#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "k3ns/modular.hpp"

using namespace k3ns;

namespace {
// Independent totient oracle: direct coprime count.
long long phi_brute(long long m) {
  long long count = 0;
  for (long long k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) ++count;
  return count;
}
}  // namespace

TEST_CASE("residues are stored reduced") {
  CHECK(Residue(25, 22).value() == 3);
  CHECK(Residue(-1, 19).value() == 18);
  CHECK(Residue(0, 1).value() == 0);
  CHECK(Residue(7, 22) == Residue(29, 22));
  CHECK(Residue(7, 22) != Residue(7, 23));
  CHECK_THROWS_AS(Residue(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(Residue(1, 5) + Residue(1, 7), std::invalid_argument);
}

TEST_CASE("euler_phi examples") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(66) == 20);
  CHECK(phi_brute(66) == 20);
  CHECK(euler_phi(50) == 20);
  CHECK(phi_brute(50) == 20);
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("euler_phi agrees with the brute-force count up to 10^4") {
  for (long long m = 1; m <= 10000; ++m)
    REQUIRE(euler_phi(m) == phi_brute(m));
}

TEST_CASE("inverse_mod examples") {
  CHECK(inverse_mod(3, 22).value() == 15);
  CHECK(inverse_mod(1, 7).value() == 1);
  CHECK(inverse_mod(4, 19).value() == 5);
  CHECK(inverse_mod(3, 19).value() == 13);
  CHECK_THROWS_AS(inverse_mod(4, 22), std::domain_error);
}

TEST_CASE("inverse_mod composes to the identity for all coprime pairs, n <= 200") {
  for (long long n = 1; n <= 200; ++n)
    for (long long k = 1; k <= n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      Residue inv = inverse_mod(k, n);
      REQUIRE((inv * Residue(k, n)).value() == 1 % n);
    }
}

TEST_CASE("admissible_orders reproduces the order bound") {
  auto orders = admissible_orders(21);
  REQUIRE(!orders.empty());
  CHECK(orders.back().m == 66);
  std::set<long long> ms;
  for (const auto& c : orders) ms.insert(c.m);
  for (long long m : {38, 44, 48, 50, 54, 60, 66}) CHECK(ms.count(m) == 1);
}

TEST_CASE("admissible_orders small bounds") {
  auto one = admissible_orders(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].m == 1);
  CHECK(one[1].m == 2);

  // Independent scan for phi_max = 2.
  std::set<long long> expected;
  for (long long m = 1; m <= 100; ++m)
    if (phi_brute(m) <= 2) expected.insert(m);
  auto two = admissible_orders(2);
  std::set<long long> got;
  for (const auto& c : two) got.insert(c.m);
  CHECK(got == expected);
  CHECK(got == std::set<long long>{1, 2, 3, 4, 6});

  CHECK_THROWS_AS(admissible_orders(0), std::invalid_argument);
}

TEST_CASE("admissible_orders is downward-closed in phi") {
  for (long long a = 1; a <= 12; ++a) {
    std::set<long long> small, big;
    for (const auto& c : admissible_orders(a)) small.insert(c.m);
    for (const auto& c : admissible_orders(a + 1)) big.insert(c.m);
    for (long long m : small) REQUIRE(big.count(m) == 1);
  }
}

TEST_CASE("order candidates are sorted with correct totients") {
  auto orders = admissible_orders(21);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    REQUIRE(orders[i].phi == euler_phi(orders[i].m));
    if (i > 0) REQUIRE(orders[i - 1].m < orders[i].m);
  }
}
