#include <doctest.h>

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

WeightMultiset ms1(std::initializer_list<std::pair<Rat, int>> entries) {
  WeightMultiset m;
  for (const auto& [w, c] : entries) m[Weight{w}] = c;
  return m;
}
}  // namespace

TEST_CASE("Cartan torus inside sl(2)") {
  auto pair = fixtures::cartan_in_a1();
  CHECK(pair.t_dim == 1);
  CHECK(pair.k_simple.empty());
  CHECK(pair.k_positive.empty());
  CHECK(pair.chi_t_perp == ms1({{Rat(2), 1}, {Rat(-2), 1}}));
  CHECK(pair.rho_k == Weight{Rat(0)});
  CHECK(t_norm_sq(pair, {Rat(2)}) == 2);  // the root keeps its length
  CHECK(pair.restrict_h({Rat(1)}) == Weight{Rat(2)});
}

TEST_CASE("principal sl(2) inside sl(3)") {
  auto pair = fixtures::principal_a1_in_a2();
  CHECK(pair.t_dim == 1);
  CHECK(pair.chi_t_g ==
        ms1({{Rat(2), 2}, {Rat(-2), 2}, {Rat(4), 1}, {Rat(-4), 1}, {Rat(0), 2}}));
  CHECK(pair.chi_t_k == ms1({{Rat(2), 1}, {Rat(-2), 1}, {Rat(0), 1}}));
  CHECK(pair.chi_t_perp ==
        ms1({{Rat(4), 1}, {Rat(2), 1}, {Rat(0), 1}, {Rat(-2), 1}, {Rat(-4), 1}}));
  CHECK(pair.rho_k == Weight{Rat(1)});
  CHECK(pair.restrict_h({Rat(1), Rat(0)}) == Weight{Rat(2)});
  CHECK(pair.restrict_h({Rat(1), Rat(1)}) == Weight{Rat(4)});
  CHECK(pair.restrict_h({Rat(0), Rat(0)}) == Weight{Rat(0)});
  CHECK(t_norm_sq(pair, {Rat(4)}) == 2);
  CHECK(t_norm_sq(pair, {Rat(2)}) == Rat(1, 2));
  CHECK(pair.k_abstract.has_value());
  CHECK(pair.k_abstract->positive_roots.size() == 1);
}

TEST_CASE("diagonal sl(2) inside sl(2) x sl(2)") {
  auto pair = fixtures::diagonal_a1_in_a1xa1();
  CHECK(pair.chi_t_perp == ms1({{Rat(2), 1}, {Rat(0), 1}, {Rat(-2), 1}}));
  CHECK(t_norm_sq(pair, {Rat(2)}) == 1);
  CHECK(pair.rho_k == Weight{Rat(1)});
}

TEST_CASE("torus with a Levi direction inside sl(3)") {
  auto pair = fixtures::torus_in_a2();
  CHECK(pair.restrict_h({Rat(1), Rat(0)}) == Weight{Rat(1)});
  CHECK(pair.restrict_h({Rat(0), Rat(1)}) == Weight{Rat(0)});
  CHECK(pair.chi_t_perp == ms1({{Rat(1), 2}, {Rat(-1), 2}, {Rat(0), 3}}));
  CHECK(t_norm_sq(pair, {Rat(1)}) == Rat(3, 2));
}

TEST_CASE("skew torus sees all of sl(3)") {
  auto pair = fixtures::skew_torus_in_a2();
  CHECK(pair.t_dim == 2);
  CHECK(pair.restrict_h({Rat(1), Rat(0)}) == (Weight{Rat(2), Rat(1)}));
  CHECK(pair.restrict_h({Rat(0), Rat(1)}) == (Weight{Rat(-1), Rat(1)}));
  CHECK(pair.restrict_h({Rat(1), Rat(1)}) == (Weight{Rat(1), Rat(2)}));
  // induced form keeps root lengths: these are genuine sl(3) roots
  CHECK(pair.t_norm({Rat(2), Rat(1)}) == 2);
  CHECK(pair.t_norm({Rat(1), Rat(2)}) == 2);
}

TEST_CASE("pair with g equal to k has empty perp support") {
  auto pair = fixtures::self_pair_a1();
  CHECK(pair.chi_t_perp.empty());
  CHECK(pair.k_positive.size() == 1);
}

TEST_CASE("restriction covers the nonzero part of the g character") {
  for (const auto& pair : {fixtures::principal_a1_in_a2(), fixtures::torus_in_a2(),
                           fixtures::skew_torus_in_a2()}) {
    WeightMultiset covered;
    covered[Weight(pair.t_dim, Rat(0))] = Int(pair.g.rank);
    for (const auto& a : pair.g.positive_roots) {
      const Weight ra = pair.restrict_h(a);
      Weight na(ra.size());
      for (std::size_t i = 0; i < ra.size(); ++i) na[i] = -ra[i];
      covered[ra] += 1;
      covered[na] += 1;
    }
    CHECK(covered == pair.chi_t_g);
  }
}

TEST_CASE("polarization identity for the induced form") {
  auto pair = fixtures::skew_torus_in_a2();
  const Weight v{Rat(3), Rat(-1)};
  const Weight w{Rat(1, 2), Rat(5)};
  CHECK(pair.t_norm(weight_add(v, w)) ==
        pair.t_norm(v) + pair.t_norm(w) + 2 * pair.t_pairing(v, w));
  CHECK(pair.t_norm(v) > 0);
}

TEST_CASE("k reflections preserve the perp character") {
  for (const auto& pair : {fixtures::principal_a1_in_a2(), fixtures::diagonal_a1_in_a1xa1(),
                           fixtures::self_pair_a1()}) {
    for (std::size_t i = 0; i < pair.k_simple.size(); ++i) {
      WeightMultiset reflected;
      for (const auto& [w, m] : pair.chi_t_perp) reflected[pair.k_reflect(i, w)] += m;
      CHECK(reflected == pair.chi_t_perp);
    }
  }
}

TEST_CASE("lift is a right inverse of restriction") {
  for (const auto& pair : {fixtures::principal_a1_in_a2(), fixtures::torus_in_a2(),
                           fixtures::skew_torus_in_a2()}) {
    for (std::size_t i = 0; i < pair.t_dim; ++i) {
      Weight e(pair.t_dim, Rat(0));
      e[i] = 1;
      CHECK(pair.restrict_h(pair.lift_t(e)) == e);
    }
  }
}

TEST_CASE("k Weyl group realized on t*") {
  CHECK(k_weyl_group(fixtures::cartan_in_a1()).size() == 1);
  auto ws = k_weyl_group(fixtures::principal_a1_in_a2());
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].length() == 0);
  CHECK(ws[1].length() == 1);
  CHECK(rat_apply(ws[1].matrix, Weight{Rat(2)}) == Weight{Rat(-2)});
  CHECK(k_weyl_group(fixtures::skew_torus_in_a2()).size() == 1);
  CHECK(k_weyl_group(fixtures::self_pair_a1()).size() == 2);
}

TEST_CASE("build_pair rejections") {
  auto a2 = root_system_of_type("A2");
  // embedding without full column rank
  CHECK(error_kind([&] {
          build_pair(a2, {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}, {});
        }) == "DegenerateForm");
  // k-root outside the restricted root lattice
  CHECK(error_kind([&] {
          build_pair(a2, {{Rat(2)}, {Rat(2)}}, {{Rat(1)}});
        }) == "LatticeMismatch");
  // k-root character not inside the g character
  CHECK(error_kind([&] {
          build_pair(a2, {{Rat(2)}, {Rat(2)}}, {{Rat(6)}});
        }) == "NonContainment");
  // k-root pairings fail to be a Cartan matrix under the induced form
  auto b2 = root_system_of_type("B2");
  CHECK(error_kind([&] {
          build_pair(b2, rat_identity(2),
                     {{Rat(1), Rat(1)}, {Rat(1), Rat(0)}});
        }) == "CartanMismatch");
  // shape problems
  CHECK(error_kind([&] { build_pair(a2, {{Rat(1)}}, {}); }) == "ConfigError");
  CHECK(error_kind([&] { build_pair(a2, {{}, {}}, {}); }) == "ConfigError");
}

TEST_CASE("restricting the full Cartan reproduces the root pairings") {
  auto a2 = root_system_of_type("A2");
  auto pair = build_pair(a2, rat_identity(2), {});
  for (const auto& a : a2.positive_roots)
    for (const auto& b : a2.positive_roots)
      CHECK(pair.t_pairing(pair.restrict_h(a), pair.restrict_h(b)) == a2.pairing(a, b));
}
