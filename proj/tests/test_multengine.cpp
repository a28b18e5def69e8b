#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "multengine.hpp"
#include "parabolic.hpp"

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

template <class F>
std::string error_what(F&& f) {
  try {
    f();
  } catch (const engine_error& e) {
    return e.what();
  }
  return "";
}

CompatibleParabolic parab_of(const ReductivePair& pair, const Weight& mu) {
  return build_parabolic(pair, lex_functional(pair, mu));
}

Weight w1(const Rat& x) { return {x}; }

}  // namespace

TEST_CASE("inducing module validation on the principal pair") {
  auto pair = fixtures::principal_a1_in_a2();
  const Weight mu = w1(Rat(0));
  auto parab = parab_of(pair, mu);

  const Weight kappa = auto_kappa(pair, parab, mu);
  CHECK(kappa == Weight{Rat(-3, 2), Rat(-3, 2)});
  auto e = validate_E(pair, parab, mu, kappa);
  CHECK(e.omega == w1(Rat(-6)));
  CHECK(e.dim_e == 1);

  CHECK(error_kind([&] { validate_E(pair, parab, mu, {Rat(3, 2), Rat(3, 2)}); }) ==
        "OmegaMismatch");
  CHECK(error_what([&] { validate_E(pair, parab, mu, {Rat(3, 2), Rat(3, 2)}); })
            .find("must carry") != std::string::npos);
  CHECK(error_kind([&] { validate_E(pair, parab, mu, {Rat(0)}); }) == "ConfigError");
}

TEST_CASE("inducing module on a nontrivial Levi") {
  auto pair = fixtures::torus_in_a2();
  const Weight mu = w1(Rat(0));
  auto parab = parab_of(pair, mu);
  REQUIRE(parab.levi_positive.size() == 1);

  auto e3 = validate_E(pair, parab, mu, {Rat(-2), Rat(0)});
  CHECK(e3.omega == w1(Rat(-2)));
  CHECK(e3.dim_e == 3);

  CHECK(error_kind([&] { validate_E(pair, parab, mu, {Rat(-2), Rat(1, 3)}); }) ==
        "NotDominantOnLevi");
  CHECK(error_what([&] { validate_E(pair, parab, mu, {Rat(-2), Rat(1, 3)}); })
            .find("8/3") != std::string::npos);
  CHECK(error_kind([&] { validate_E(pair, parab, mu, {Rat(-2), Rat(-2)}); }) ==
        "NotDominantOnLevi");

  const Weight kappa = auto_kappa(pair, parab, mu);
  CHECK(kappa == Weight{Rat(-2), Rat(-1)});
  CHECK(validate_E(pair, parab, mu, kappa).dim_e == 1);
}

TEST_CASE("canonical lift always gives a one-dimensional module") {
  auto run = [](ReductivePair pair, Weight mu) {
    auto parab = parab_of(pair, mu);
    auto e = validate_E(pair, parab, mu, auto_kappa(pair, parab, mu));
    CHECK(e.dim_e == 1);
    CHECK(e.omega == weight_sub(mu, weight_scale(2, parab.rho_n_perp)));
  };
  run(fixtures::cartan_in_a1(), w1(Rat(0)));
  run(fixtures::principal_a1_in_a2(), w1(Rat(2)));
  run(fixtures::diagonal_a1_in_a1xa1(), w1(Rat(4)));
  run(fixtures::torus_in_a2(), w1(Rat(1)));
  run(fixtures::self_pair_a1(), w1(Rat(2)));
  run(fixtures::skew_torus_in_a2(), {Rat(0), Rat(0)});
}

TEST_CASE("symmetric power weight counts, generators 2 and 4") {
  auto pair = fixtures::principal_a1_in_a2();
  auto parab = parab_of(pair, w1(Rat(0)));
  CHECK(sym_mult(parab, w1(Rat(0)), 0) == 1);
  CHECK(sym_mult(parab, w1(Rat(4)), 1) == 1);
  CHECK(sym_mult(parab, w1(Rat(4)), 2) == 1);
  CHECK(sym_mult(parab, w1(Rat(6)), 2) == 1);
  CHECK(sym_mult(parab, w1(Rat(6)), 3) == 1);
  CHECK(sym_mult(parab, w1(Rat(8)), 1) == 0);
  CHECK(sym_mult(parab, w1(Rat(8)), 2) == 1);
  CHECK(sym_mult(parab, w1(Rat(8)), 3) == 1);
  CHECK(sym_mult(parab, w1(Rat(8)), 4) == 1);
  CHECK(sym_mult(parab, w1(Rat(3)), 1) == 0);

  CHECK(sym_mult_total(pair, parab, w1(Rat(0))) == 1);
  CHECK(sym_mult_total(pair, parab, w1(Rat(3))) == 0);
  CHECK(sym_mult_total(pair, parab, w1(Rat(4))) == 2);
  CHECK(sym_mult_total(pair, parab, w1(Rat(8))) == 3);
  CHECK(sym_mult_total(pair, parab, w1(Rat(-2))) == 0);
}

TEST_CASE("symmetric power totals, single generator and doubled generator") {
  auto cartan = fixtures::cartan_in_a1();
  auto cp = parab_of(cartan, w1(Rat(0)));
  for (int a = 0; a <= 5; ++a) {
    CHECK(sym_mult_total(cartan, cp, w1(Rat(2 * a))) == 1);
    CHECK(sym_mult_total(cartan, cp, w1(Rat(2 * a + 1))) == 0);
  }

  auto torus = fixtures::torus_in_a2();
  auto tp = parab_of(torus, w1(Rat(0)));
  for (int d = 0; d <= 6; ++d)
    CHECK(sym_mult_total(torus, tp, w1(Rat(d))) == d + 1);
  CHECK(sym_mult(tp, w1(Rat(3)), 3) == 4);

  auto self = fixtures::self_pair_a1();
  auto sp = parab_of(self, w1(Rat(0)));
  CHECK(sp.n_cap_perp.empty());
  CHECK(sym_mult_total(self, sp, w1(Rat(0))) == 1);
  CHECK(sym_mult_total(self, sp, w1(Rat(2))) == 0);
}

TEST_CASE("euler multiplicities on the principal pair") {
  auto pair = fixtures::principal_a1_in_a2();
  const Weight mu = w1(Rat(0));
  auto parab = parab_of(pair, mu);
  auto e = validate_E(pair, parab, mu, auto_kappa(pair, parab, mu));

  const Int expected[] = {1, 1, 2, 2, 3};
  for (int j = 0; j < 5; ++j)
    CHECK(euler_multiplicity(pair, parab, e, w1(Rat(2 * j))) == expected[j]);
  CHECK(euler_multiplicity(pair, parab, e, w1(Rat(1))) == 0);

  CHECK(error_kind([&] { euler_multiplicity(pair, parab, e, w1(Rat(-2))); }) ==
        "NotDominant");
  CHECK(error_kind([&] { euler_multiplicity(pair, parab, e, w1(Rat(1, 2))); }) ==
        "NotIntegral");
}

TEST_CASE("euler multiplicities shift with mu") {
  auto pair = fixtures::principal_a1_in_a2();
  const Weight mu = w1(Rat(2));
  auto parab = parab_of(pair, mu);
  auto e = validate_E(pair, parab, mu, auto_kappa(pair, parab, mu));
  CHECK(euler_multiplicity(pair, parab, e, w1(Rat(2))) == 1);
  CHECK(euler_multiplicity(pair, parab, e, w1(Rat(4))) == 1);
  CHECK(euler_multiplicity(pair, parab, e, w1(Rat(6))) == 2);
  CHECK(euler_multiplicity(pair, parab, e, w1(Rat(0))) == 0);
}

TEST_CASE("euler multiplicities on the remaining fixtures") {
  auto diag = fixtures::diagonal_a1_in_a1xa1();
  auto dp = parab_of(diag, w1(Rat(0)));
  auto de = validate_E(diag, dp, w1(Rat(0)), auto_kappa(diag, dp, w1(Rat(0))));
  for (int d = 0; d <= 8; d += 2)
    CHECK(euler_multiplicity(diag, dp, de, w1(Rat(d))) == 1);

  auto cartan = fixtures::cartan_in_a1();
  auto cp = parab_of(cartan, w1(Rat(0)));
  auto ce = validate_E(cartan, cp, w1(Rat(0)), auto_kappa(cartan, cp, w1(Rat(0))));
  for (int d = 0; d <= 8; d += 2)
    CHECK(euler_multiplicity(cartan, cp, ce, w1(Rat(d))) == 1);

  auto torus = fixtures::torus_in_a2();
  auto tp = parab_of(torus, w1(Rat(0)));
  auto te = validate_E(torus, tp, w1(Rat(0)), {Rat(-2), Rat(0)});
  for (int d = 0; d <= 5; ++d)
    CHECK(euler_multiplicity(torus, tp, te, w1(Rat(d))) == 3 * (d + 1));

  auto self = fixtures::self_pair_a1();
  auto sp = parab_of(self, w1(Rat(4)));
  auto se = validate_E(self, sp, w1(Rat(4)), auto_kappa(self, sp, w1(Rat(4))));
  CHECK(euler_multiplicity(self, sp, se, w1(Rat(4))) == 1);
  CHECK(euler_multiplicity(self, sp, se, w1(Rat(6))) == 0);

  auto skew = fixtures::skew_torus_in_a2();
  const Weight zero2{Rat(0), Rat(0)};
  auto kp = parab_of(skew, zero2);
  auto ke = validate_E(skew, kp, zero2, auto_kappa(skew, kp, zero2));
  CHECK(euler_multiplicity(skew, kp, ke, zero2) == 1);
}

TEST_CASE("occurrence witnesses and bounds") {
  auto pair = fixtures::principal_a1_in_a2();
  const Weight mu = w1(Rat(0));
  auto parab = parab_of(pair, mu);
  auto e = validate_E(pair, parab, mu, auto_kappa(pair, parab, mu));

  auto top0 = occurrence_witnesses(pair, parab, e, mu, 0);
  REQUIRE(top0.size() == 1);
  CHECK(top0[0].w.length() == 0);
  CHECK(top0[0].counts.empty());
  CHECK(occurrence_witnesses(pair, parab, e, mu, 1).empty());

  auto top4 = occurrence_witnesses(pair, parab, e, w1(Rat(4)), 0);
  REQUIRE(top4.size() == 1);
  WeightMultiset counts4;
  counts4[w1(Rat(4))] = 1;
  CHECK(top4[0].counts == counts4);

  CHECK(occurrence_bound(pair, parab, e, w1(Rat(4)), 0) == 2);
  CHECK(occurrence_bound(pair, parab, e, mu, 1) == 0);
  CHECK(occurrence_bound(pair, parab, e, mu, 0) == 1);

  // every witness partition really sums to a displacement reaching delta
  for (int d = 0; d <= 8; d += 2)
    for (int i = 0; i <= 1; ++i)
      for (const auto& wit : occurrence_witnesses(pair, parab, e, w1(Rat(d)), i)) {
        Weight sum(pair.t_dim, Rat(0));
        for (const auto& [beta, c] : wit.counts)
          sum = weight_add(sum, weight_scale(Rat(c), beta));
        const Weight img =
            rat_apply(wit.w.matrix, weight_add(w1(Rat(d)), pair.rho_k));
        Weight target = weight_sub(img, pair.rho_k);
        target = weight_sub(target, e.omega);
        target = weight_sub(target, weight_scale(2, parab.rho_n_perp));
        CHECK(sum == target);
      }
}

TEST_CASE("euler value never exceeds the degree-wise bounds") {
  auto pair = fixtures::principal_a1_in_a2();
  const Weight mu = w1(Rat(0));
  auto parab = parab_of(pair, mu);
  auto e = validate_E(pair, parab, mu, auto_kappa(pair, parab, mu));
  for (int d = 0; d <= 10; d += 2) {
    Int sum = 0;
    for (int i = 0; i <= 1; ++i) sum += occurrence_bound(pair, parab, e, w1(Rat(d)), i);
    const Int chi = euler_multiplicity(pair, parab, e, w1(Rat(d)));
    CHECK(abs(chi) <= sum);
  }
}

TEST_CASE("minimal type occurs only in the top degree") {
  auto run = [](ReductivePair pair, Weight mu) {
    auto parab = parab_of(pair, mu);
    auto e = validate_E(pair, parab, mu, auto_kappa(pair, parab, mu));
    CHECK(min_type_degree_check(pair, parab, e, mu));
  };
  run(fixtures::cartan_in_a1(), w1(Rat(0)));
  run(fixtures::principal_a1_in_a2(), w1(Rat(0)));
  run(fixtures::principal_a1_in_a2(), w1(Rat(2)));
  run(fixtures::diagonal_a1_in_a1xa1(), w1(Rat(0)));
  run(fixtures::torus_in_a2(), w1(Rat(0)));
  run(fixtures::self_pair_a1(), w1(Rat(0)));

  auto torus = fixtures::torus_in_a2();
  auto tp = parab_of(torus, w1(Rat(0)));
  auto te = validate_E(torus, tp, w1(Rat(0)), {Rat(-2), Rat(0)});
  CHECK(min_type_degree_check(torus, tp, te, w1(Rat(0))));
}

TEST_CASE("norm values under the induced form") {
  auto pair = fixtures::principal_a1_in_a2();
  const Rat expected[] = {Rat(1, 2), Rat(2), Rat(9, 2), Rat(8), Rat(25, 2)};
  for (int j = 0; j < 5; ++j) CHECK(vogan_norm_sq(pair, w1(Rat(2 * j))) == expected[j]);

  auto cartan = fixtures::cartan_in_a1();
  CHECK(vogan_norm_sq(cartan, w1(Rat(0))) == 0);
  CHECK(vogan_norm_sq(cartan, w1(Rat(2))) == 2);
  CHECK(vogan_norm_sq(cartan, w1(Rat(4))) == 8);

  auto diag = fixtures::diagonal_a1_in_a1xa1();
  CHECK(vogan_norm_sq(diag, w1(Rat(0))) == 1);
  CHECK(vogan_norm_sq(diag, w1(Rat(2))) == 4);
  CHECK(vogan_norm_sq(diag, w1(Rat(4))) == 9);
}

TEST_CASE("norm growth splits into base, square and cross terms") {
  auto pair = fixtures::principal_a1_in_a2();
  auto ex = norm_growth_expansion(pair, w1(Rat(0)), w1(Rat(4)));
  CHECK(ex.total == Rat(9, 2));
  CHECK(ex.base == Rat(1, 2));
  CHECK(ex.square == Rat(2));
  CHECK(ex.cross == Rat(2));
  CHECK(ex.balances);

  for (int m = 0; m <= 4; m += 2)
    for (int d = m; d <= 8; d += 2) {
      auto e2 = norm_growth_expansion(pair, w1(Rat(m)), w1(Rat(d)));
      CHECK(e2.balances);
      CHECK(e2.square >= 0);
      CHECK(e2.cross >= 0);  // displacement lies in the cone over the generators
    }
}

TEST_CASE("k-type table on the principal pair") {
  auto pair = fixtures::principal_a1_in_a2();
  const Weight mu = w1(Rat(0));
  auto parab = parab_of(pair, mu);
  auto e = validate_E(pair, parab, mu, auto_kappa(pair, parab, mu));

  auto table = enumerate_ktypes(pair, parab, e, mu, Rat(25, 2));
  CHECK(table.warnings.empty());
  REQUIRE(table.rows.size() == 5);
  const Int chis[] = {1, 1, 2, 2, 3};
  for (int j = 0; j < 5; ++j) {
    CHECK(table.rows[j].delta == w1(Rat(2 * j)));
    CHECK(table.rows[j].chi == chis[j]);
    CHECK(table.rows[j].bound_top == chis[j]);
    CHECK(table.rows[j].norm_growth_ok);
  }
  CHECK(table.rows[0].vogan_norm == Rat(1, 2));
  CHECK(table.rows[4].vogan_norm == Rat(25, 2));

  auto empty = enumerate_ktypes(pair, parab, e, mu, Rat(1, 4));
  CHECK(empty.rows.empty());
  REQUIRE(empty.warnings.size() == 1);
  CHECK(empty.warnings[0].find("below the minimal row norm") != std::string::npos);
}

TEST_CASE("k-type tables on torus-like pairs") {
  auto cartan = fixtures::cartan_in_a1();
  auto cp = parab_of(cartan, w1(Rat(0)));
  auto ce = validate_E(cartan, cp, w1(Rat(0)), auto_kappa(cartan, cp, w1(Rat(0))));
  auto ct = enumerate_ktypes(cartan, cp, ce, w1(Rat(0)), Rat(8));
  REQUIRE(ct.rows.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(ct.rows[j].delta == w1(Rat(2 * j)));
    CHECK(ct.rows[j].chi == 1);
  }

  auto diag = fixtures::diagonal_a1_in_a1xa1();
  auto dp = parab_of(diag, w1(Rat(0)));
  auto de = validate_E(diag, dp, w1(Rat(0)), auto_kappa(diag, dp, w1(Rat(0))));
  auto dt = enumerate_ktypes(diag, dp, de, w1(Rat(0)), Rat(9));
  REQUIRE(dt.rows.size() == 3);
  for (int j = 0; j < 3; ++j) CHECK(dt.rows[j].chi == 1);

  auto torus = fixtures::torus_in_a2();
  auto tp = parab_of(torus, w1(Rat(0)));
  auto te = validate_E(torus, tp, w1(Rat(0)), {Rat(-2), Rat(0)});
  auto tt = enumerate_ktypes(torus, tp, te, w1(Rat(0)), Rat(6));
  REQUIRE(tt.rows.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(tt.rows[j].delta == w1(Rat(j)));
    CHECK(tt.rows[j].chi == 3 * (j + 1));
  }
}

TEST_CASE("rescaling the embedding changes nothing observable") {
  auto base = fixtures::principal_a1_in_a2();
  auto scaled = build_pair(root_system_of_type("A2"), {{Rat(6)}, {Rat(6)}}, {{Rat(6)}});

  const Weight mu0 = w1(Rat(0));
  auto pb = parab_of(base, mu0);
  auto ps = parab_of(scaled, mu0);
  auto eb = validate_E(base, pb, mu0, auto_kappa(base, pb, mu0));
  auto es = validate_E(scaled, ps, mu0, auto_kappa(scaled, ps, mu0));
  CHECK(eb.kappa == es.kappa);  // the lift compensates the rescaling exactly

  for (int d = 0; d <= 8; d += 2) {
    CHECK(euler_multiplicity(base, pb, eb, w1(Rat(d))) ==
          euler_multiplicity(scaled, ps, es, w1(Rat(3 * d))));
    CHECK(vogan_norm_sq(base, w1(Rat(d))) == vogan_norm_sq(scaled, w1(Rat(3 * d))));
  }

  auto tb = enumerate_ktypes(base, pb, eb, mu0, Rat(25, 2));
  auto ts = enumerate_ktypes(scaled, ps, es, mu0, Rat(25, 2));
  REQUIRE(tb.rows.size() == ts.rows.size());
  for (std::size_t j = 0; j < tb.rows.size(); ++j) {
    CHECK(ts.rows[j].delta == weight_scale(3, tb.rows[j].delta));
    CHECK(ts.rows[j].chi == tb.rows[j].chi);
    CHECK(ts.rows[j].bound_top == tb.rows[j].bound_top);
    CHECK(ts.rows[j].vogan_norm == tb.rows[j].vogan_norm);
    CHECK(ts.rows[j].norm_growth_ok == tb.rows[j].norm_growth_ok);
  }
}
