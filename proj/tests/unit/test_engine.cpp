#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "k3ns/engine.hpp"

using namespace k3ns;

TEST_CASE("alpha pair enumeration") {
  CHECK(enumerate_alpha_pairs(66) == std::vector<AlphaPair>{{0, 1}});
  CHECK(enumerate_alpha_pairs(60) == std::vector<AlphaPair>{{0, 2}, {1, 1}});
  CHECK(enumerate_alpha_pairs(54) == std::vector<AlphaPair>{{0, 3}, {1, 2}});
  CHECK(enumerate_alpha_pairs(48) == std::vector<AlphaPair>{{0, 4}, {1, 3}, {2, 2}});
  CHECK_THROWS_AS(enumerate_alpha_pairs(50), std::invalid_argument);
}

TEST_CASE("order-p^2 fixed-point filter") {
  FilterVerdict v60 = filter_lemma3(60, {0, 2});
  CHECK(!v60.accepted);
  CHECK(v60.reason == FilterReason::Lemma3Violation);

  FilterVerdict v54 = filter_lemma3(54, {0, 3});
  CHECK(!v54.accepted);
  CHECK(v54.reason == FilterReason::Lemma3Violation);

  FilterVerdict v48 = filter_lemma3(48, {0, 4});
  CHECK(!v48.accepted);

  // 11^2 does not divide 66, so (0,1) survives this filter.
  FilterVerdict v66 = filter_lemma3(66, {0, 1});
  CHECK(v66.accepted);

  FilterVerdict v60b = filter_lemma3(60, {1, 1});
  CHECK(v60b.accepted);
}

TEST_CASE("symplectic lift filter") {
  SECTION("order 60, pair (1,1): the order-5 element lifts symplectically") {
    FilterVerdict v = filter_symplectic_lift(60, {1, 1});
    REQUIRE(!v.accepted);
    CHECK(v.reason == FilterReason::SymplecticLift);
    REQUIRE(v.trace.has_value());
    CHECK(v.trace->prime == 5);
    CHECK(v.trace->full == LocalWeights(Residue(1, 10), Residue(9, 10)));
    CHECK(v.trace->restricted == LocalWeights(Residue(1, 5), Residue(4, 5)));
    CHECK(v.trace->lifted == v.trace->restricted);  // 6 = 1 (mod 5)
    CHECK(symplectic_test(v.trace->lifted));
  }

  SECTION("order 48, pair (2,2): the order-2 element fixes both fibres") {
    FilterVerdict v = filter_symplectic_lift(48, {2, 2});
    REQUIRE(!v.accepted);
    CHECK(v.reason == FilterReason::FixedCurveOffBranch);
  }

  SECTION("survivors") {
    CHECK(filter_symplectic_lift(54, {1, 2}).accepted);
    CHECK(filter_symplectic_lift(48, {1, 3}).accepted);
    CHECK(filter_symplectic_lift(66, {0, 1}).accepted);
  }
}

TEST_CASE("filter calibration over every enumerated pair") {
  std::map<long long, std::vector<AlphaPair>> expected{
      {66, {{0, 1}}}, {60, {}}, {54, {{1, 2}}}, {48, {{1, 3}}}};
  for (long long m : {48LL, 54LL, 60LL, 66LL}) {
    std::vector<AlphaPair> survivors;
    for (const FilterVerdict& v : filter_verdicts(m))
      if (v.accepted) survivors.push_back(v.pair);
    REQUIRE(survivors == expected[m]);
  }
}

TEST_CASE("plane-case order bound") {
  std::set<long long> allowed = lemma4_allowed_orders();
  CHECK(allowed.count(50) == 1);
  CHECK(allowed.count(42) == 1);
  for (long long m : {38, 44, 48, 54, 60, 66}) CHECK(allowed.count(m) == 0);
  for (long long m : allowed) CHECK((m / 2) % 2 == 1);
  CHECK(*allowed.rbegin() == 50);
}

TEST_CASE("noether bookkeeping for the order-3 quotient") {
  Lemma8Report a = lemma8_identity_check(3, 0);
  CHECK(a.thirds_integral);
  CHECK(a.noether_ok);
  CHECK(a.k_squared == Rational(-1));
  CHECK(a.c2 == Rational(13));
  CHECK(a.rho_lower_bound == 8);

  Lemma8Report b = lemma8_identity_check(4, 1);
  CHECK(b.noether_ok);
  CHECK(b.rho_lower_bound == 10);
  CHECK(b.k_squared == Rational(-4));
  CHECK(b.c2 == Rational(16));

  Lemma8Report c = lemma8_identity_check(2, 0);
  CHECK(!c.noether_ok);
  CHECK(!c.thirds_integral);
}

TEST_CASE("3|m case reports") {
  CaseReport r60 = classify_div3(60);
  CHECK(r60.m == 60);
  CHECK(!r60.exists);
  CHECK(r60.num_surfaces == 0);
  CHECK(r60.num_actions == 0);
  CHECK(!r60.quotient_model.has_value());
  CHECK(r60.all_checks_pass());

  for (long long m : {48LL, 54LL, 66LL}) {
    CaseReport r = classify_div3(m);
    CHECK(r.exists);
    CHECK(r.num_surfaces == 1);
    CHECK(r.num_actions == 1);
    REQUIRE(r.quotient_model.has_value());
    CHECK(r.quotient_model->base == SurfaceModel::plane());
    CHECK(r.quotient_model->components.size() == 4);
    CHECK(r.all_checks_pass());
  }

  CHECK_THROWS_AS(classify_div3(42), std::invalid_argument);
}

TEST_CASE("order 50 verification") {
  CaseReport r = verify_m50({101});
  CHECK(r.m == 50);
  CHECK(r.exists);
  CHECK(r.num_surfaces == 1);
  CHECK(r.num_actions == 1);
  CHECK(r.all_checks_pass());
  REQUIRE(r.quotient_model.has_value());
  const BranchConfiguration& q = *r.quotient_model;
  CHECK(q.base == SurfaceModel::plane());
  REQUIRE(q.components.size() == 4);
  std::vector<long long> indices, coeffs;
  for (const BranchComponent& c : q.components) {
    indices.push_back(c.ramification_index);
    coeffs.push_back(c.coeff_numerator);
    CHECK(c.curve_class == DivisorClass::on_plane(1));
  }
  CHECK(indices == std::vector<long long>{2, 5, 25, 50});
  CHECK(coeffs == std::vector<long long>{25, 40, 48, 49});
}

TEST_CASE("order 44 verification") {
  CaseReport r = verify_m44();
  CHECK(r.m == 44);
  CHECK(r.exists);
  CHECK(r.num_actions == 1);
  CHECK(r.all_checks_pass());

  // The type solve is pinned to (7, 11, 4).
  bool found = false;
  for (const CheckResult& c : r.checks)
    if (c.name == "type_solve") {
      found = true;
      CHECK(c.pass);
      CHECK(c.detail.find("(7,11,4)") != std::string::npos);
    }
  CHECK(found);

  REQUIRE(r.quotient_model.has_value());
  const BranchConfiguration& q = *r.quotient_model;
  CHECK(q.base == SurfaceModel::hirzebruch(0));
  REQUIRE(q.components.size() == 4);
  CHECK(q.components[0].curve_class == DivisorClass::on_hirzebruch(3, 1));
  CHECK(q.components[0].ramification_index == 2);
  CHECK(q.components[1].curve_class == DivisorClass::on_hirzebruch(1, 0));
  CHECK(q.components[2].ramification_index == 44);
  CHECK(q.components[3].ramification_index == 44);
}

TEST_CASE("order 38 verification") {
  CaseReport r = verify_m38();
  CHECK(r.m == 38);
  CHECK(r.exists);
  CHECK(r.num_surfaces == 1);
  CHECK(r.num_actions == 2);
  CHECK(r.all_checks_pass());
  CHECK(!r.annotation.empty());

  std::map<std::string, const CheckResult*> by_name;
  for (const CheckResult& c : r.checks) by_name[c.name] = &c;

  REQUIRE(by_name.count("A_type_solve") == 1);
  CHECK(by_name["A_type_solve"]->detail.find("(13,5,1)") != std::string::npos);
  REQUIRE(by_name.count("B_type_solve") == 1);
  CHECK(by_name["B_type_solve"]->detail.find("(6,9,4)") != std::string::npos);
  REQUIRE(by_name.count("B_node_weights") == 1);
  CHECK(by_name["B_node_weights"]->detail.find("10") != std::string::npos);

  // Possibility A quotient: (4,1) curve plus the two fibre images.
  REQUIRE(r.quotient_model.has_value());
  const BranchConfiguration& q = *r.quotient_model;
  CHECK(q.base == SurfaceModel::hirzebruch(0));
  REQUIRE(q.components.size() == 3);
  CHECK(q.components[0].curve_class == DivisorClass::on_hirzebruch(4, 1));
  std::vector<long long> indices;
  for (const BranchComponent& c : q.components) indices.push_back(c.ramification_index);
  CHECK(indices == std::vector<long long>{2, 19, 38});
}

TEST_CASE("classification of all seven orders") {
  std::vector<CaseReport> all = classify_all({101});
  REQUIRE(all.size() == 7);
  std::vector<long long> ms;
  for (const CaseReport& r : all) ms.push_back(r.m);
  CHECK(ms == std::vector<long long>{38, 44, 48, 50, 54, 60, 66});
  for (const CaseReport& r : all) {
    CHECK(r.all_checks_pass());
    if (r.m == 60) {
      CHECK(!r.exists);
      CHECK(r.num_actions == 0);
    } else {
      CHECK(r.exists);
      CHECK(r.num_surfaces == 1);
      CHECK(r.num_actions == (r.m == 38 ? 2 : 1));
    }
  }
}

TEST_CASE("case reports are deterministic") {
  CaseReport a = verify_m44();
  CaseReport b = verify_m44();
  CHECK(a == b);
  CaseReport c = classify_div3(60);
  CaseReport d = classify_div3(60);
  CHECK(c == d);
}
