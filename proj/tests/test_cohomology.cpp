#include <doctest.h>

#include <set>

#include "cohomology.hpp"
#include "fixtures.hpp"

using namespace fseries;

namespace {
template <class F>
std::string error_kind(F&& f) {
  try {
    f();
  } catch (const engine_error& e) {
    return e.kind();
  }
  return "";
}
}  // namespace

TEST_CASE("support of the principal pair at delta = 0") {
  auto pair = fixtures::principal_a1_in_a2();
  auto sup = kostant_support(pair, {Rat(0)});
  REQUIRE(sup.by_degree.size() == 2);
  WeightMultiset d0, d1;
  d0[{Rat(0)}] = 1;
  d1[{Rat(-2)}] = 1;
  CHECK(sup.by_degree.at(0) == d0);
  CHECK(sup.by_degree.at(1) == d1);
}

TEST_CASE("torus k collapses to degree zero") {
  auto pair = fixtures::cartan_in_a1();
  auto sup = kostant_support(pair, {Rat(7)});
  REQUIRE(sup.by_degree.size() == 1);
  WeightMultiset d0;
  d0[{Rat(7)}] = 1;
  CHECK(sup.by_degree.at(0) == d0);
}

TEST_CASE("diagonal pair at delta = 4") {
  auto pair = fixtures::diagonal_a1_in_a1xa1();
  auto sup = kostant_support(pair, {Rat(4)});
  WeightMultiset d0, d1;
  d0[{Rat(4)}] = 1;
  d1[{Rat(-6)}] = 1;
  CHECK(sup.by_degree.at(0) == d0);
  CHECK(sup.by_degree.at(1) == d1);
}

TEST_CASE("support bookkeeping across degrees") {
  auto pair = fixtures::principal_a1_in_a2();
  for (int m = 0; m <= 6; m += 2) {
    const Weight delta{Rat(m)};
    auto sup = kostant_support(pair, delta);
    Int count = 0;
    std::set<Weight> all;
    Int euler = 0;
    for (const auto& [deg, ws] : sup.by_degree) {
      count += multiset_total(ws);
      for (const auto& [w, mult] : ws) {
        CHECK(mult == 1);
        all.insert(w);
      }
      euler += (deg % 2 == 0) ? multiset_total(ws) : -multiset_total(ws);
    }
    CHECK(count == Int(k_weyl_group(pair).size()));
    CHECK(all.size() == k_weyl_group(pair).size());  // regular orbit: all distinct
    CHECK(sup.by_degree.at(0).count(delta) == 1);
    CHECK(euler == 0);  // two elements, opposite signs
  }
}

TEST_CASE("non-dominant delta is rejected") {
  auto pair = fixtures::principal_a1_in_a2();
  CHECK(error_kind([&] { kostant_support(pair, {Rat(-2)}); }) == "NotDominant");
  CHECK(error_kind([&] { kostant_support(pair, {Rat(1, 2)}); }) == "NotIntegral");
}

TEST_CASE("character identity oracle on small ranks") {
  auto a1 = build_root_system({{Int(2)}});
  CHECK(character_identity_check(a1, {Rat(0)}));
  CHECK(character_identity_check(a1, {Rat(1)}));
  CHECK(character_identity_check(a1, {Rat(3)}));

  auto a1a1 = root_system_of_type("A1xA1");
  CHECK(character_identity_check(a1a1, {Rat(1), Rat(2)}));

  auto a2 = root_system_of_type("A2");
  CHECK(character_identity_check(a2, {Rat(1), Rat(1)}));
  CHECK(character_identity_check(a2, {Rat(2), Rat(1)}));

  auto b2 = root_system_of_type("B2");
  CHECK(character_identity_check(b2, {Rat(1), Rat(1)}));

  auto g2 = root_system_of_type("G2");
  CHECK(character_identity_check(g2, {Rat(1), Rat(2)}));

  CHECK(error_kind([] {
          character_identity_check(root_system_of_type("A3"), {Rat(0), Rat(0), Rat(0)});
        }) == "RankGuard");
}

TEST_CASE("alternating sum is reflection-antisymmetric") {
  // applying a simple reflection to delta+rho and flipping the sign leaves the
  // left-hand side unchanged; realized here by checking the sum cancels the
  // identity term against its mirrored partner
  auto a2 = root_system_of_type("A2");
  const Weight delta{Rat(1), Rat(1)};
  const Weight rho = a2.rho();
  std::map<Weight, Int> lhs;
  for (const auto& w : weyl_group(a2)) {
    const Weight img = weight_sub(rat_apply(w.matrix, weight_add(delta, rho)), rho);
    lhs[img] += (w.length() % 2 == 0) ? 1 : -1;
  }
  for (std::size_t i = 0; i < a2.rank; ++i) {
    std::map<Weight, Int> mirrored;
    for (const auto& [w, c] : lhs) {
      const Weight img =
          weight_sub(a2.reflect(i, weight_add(w, rho)), rho);
      mirrored[img] -= c;
    }
    CHECK(mirrored == lhs);
  }
}
