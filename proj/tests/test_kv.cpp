#include <doctest.h>

#include <memory>
#include <random>

#include "kv/conjugacy.hpp"
#include "kv/errors.hpp"
#include "kv/kv.hpp"
#include "kv/multiplicity.hpp"
#include "oracles.hpp"

using namespace kv;

namespace {

Coweight cw(std::initializer_list<Int> v) { return Coweight::from_ints(v); }

std::shared_ptr<const RootDatum> datum(const char* t, IsogenySpec iso = IsogenySpec::sc()) {
  return std::make_shared<const RootDatum>(build_root_datum(t, iso));
}

bool has_code(const ClassDatum& cd, const std::string& code) {
  for (const auto& i : validate(cd))
    if (i.code == code) return true;
  return false;
}

// SL2 with w = s1, e = 2, nu_bar = 0 and r_alpha = r.
ClassDatum sl2_ramified(Rational r) {
  return make_class_datum(datum("A1"), std::vector<int>{0}, Int{2}, Coweight(1), {{0, r}}, std::vector<Int>{});
}

}  // namespace

TEST_SUITE("conjugacy") {
  TEST_CASE("validation") {
    auto sl2 = datum("A1");
    CHECK(validate(split_class(sl2, cw({1}))).empty());

    auto twisted = make_class_datum(sl2, std::vector<int>{0}, Int{2}, Coweight::parse("1/2"), {}, std::vector<Int>{});
    CHECK(has_code(twisted, "w_fixes_nu"));
    CHECK_THROWS_WITH_AS(require_valid(twisted), doctest::Contains("w_fixes_nu"), ValidationError);

    CHECK(has_code(sl2_ramified(Rational(1, 3)), "residual_denominator"));
    CHECK(validate(sl2_ramified(Rational(1, 2))).empty());
    CHECK(has_code(sl2_ramified(Rational(-1, 2)), "residual_negative"));

    auto wrong_order = make_class_datum(sl2, std::vector<int>{0}, Int{3}, Coweight(1), {}, std::vector<Int>{});
    CHECK(has_code(wrong_order, "order"));

    // Residual on a root that pairs nontrivially with nu_bar.
    auto off_domain = split_class(sl2, cw({1}), {{0, Rational(1)}});
    CHECK(has_code(off_domain, "residual_domain"));

    // nu_bar outside the lattice (PGL2 coweight on SL2).
    auto outside = make_class_datum(sl2, {}, Int{1}, Coweight::parse("1/2"), {}, std::vector<Int>{});
    CHECK(has_code(outside, "nu_lattice"));

    // kappa inconsistent with the split Newton point.
    auto pgl2 = datum("A1", IsogenySpec::adjoint());
    auto bad_kappa = make_class_datum(pgl2, {}, Int{1}, Coweight::parse("1/2"), {}, std::vector<Int>{0});
    CHECK(has_code(bad_kappa, "kappa"));
    CHECK(validate(split_class(pgl2, Coweight::parse("1/2"))).empty());

    // Residuals must be constant on w-orbits: A2 Coxeter element permutes the three roots.
    auto a2 = datum("A2");
    auto uneven = make_class_datum(a2, std::vector<int>{0, 1}, std::nullopt, Coweight(2),
                                   {{0, Rational(1, 3)}, {1, Rational(2, 3)}, {2, Rational(1, 3)}},
                                   std::vector<Int>{});
    CHECK(uneven.e == 3);
    CHECK(has_code(uneven, "residual_w_invariance"));

    CHECK_THROWS_AS(make_class_datum(sl2, {}, Int{1}, cw({1, 1}), {}, std::vector<Int>{}), InputError);
    CHECK_THROWS_AS(make_class_datum(sl2, {}, Int{1}, cw({1}), {{5, Rational(1)}}, std::vector<Int>{}), InputError);
  }

  TEST_CASE("newton point") {
    auto a2 = datum("A2");
    CHECK(newton_point(split_class(a2, cw({1, 2}))) == cw({1, 2}));
    CHECK(newton_point(split_class(a2, cw({-1, -2}))) == cw({2, 1}));
    CHECK(newton_point(sl2_ramified(Rational(1, 2))) == cw({0}));
  }

  TEST_CASE("discriminant valuation") {
    auto sl2 = datum("A1");
    CHECK(disc_valuation(split_class(sl2, cw({0}), {{0, Rational(3)}})) == Rational(6));
    // Only the root -alpha contributes: val = <-alpha, alpha^vee> = -2.
    CHECK(disc_valuation(split_class(sl2, cw({1}))) == Rational(-2));
    CHECK(disc_valuation(sl2_ramified(Rational(1, 2))) == Rational(1));

    auto a2 = datum("A2");
    auto cox = make_class_datum(a2, std::vector<int>{0, 1}, std::nullopt, Coweight(2),
                                {{0, Rational(1, 3)}, {1, Rational(1, 3)}, {2, Rational(1, 3)}}, std::vector<Int>{});
    CHECK(validate(cox).empty());
    CHECK(disc_valuation(cox) == Rational(2));
    CHECK(disc_valuation(cox) == oracle::disc_direct(cox));
  }

  TEST_CASE("discriminant valuation against the direct sum over all roots") {
    std::mt19937_64 rng(7);
    for (const char* t : {"A1", "A2", "B2", "G2", "A3", "B3"}) {
      auto rd = datum(t);
      const auto& sys = rd->system();
      for (int trial = 0; trial < 60; ++trial) {
        Coweight nu(rd->rank());
        for (std::size_t i = 0; i < rd->rank(); ++i)
          nu[i] = Rational(static_cast<Int>(rng() % 5) - 2);
        std::map<std::size_t, Rational> residual;
        for (std::size_t k = 0; k < sys.num_positive(); ++k)
          if (sys.pair(nu, sys.positive_roots()[k]) == 0) residual[k] = Rational(static_cast<Int>(rng() % 4));
        auto cd = split_class(rd, nu, residual);
        CAPTURE(t);
        CAPTURE(nu.to_string());
        CHECK(disc_valuation(cd) == oracle::disc_direct(cd));
      }
    }
  }

  TEST_CASE("c invariant") {
    CHECK(c_invariant(split_class(datum("A2"), cw({0, 0}))) == 0);
    CHECK(c_invariant(sl2_ramified(Rational(1, 2))) == 1);
    auto a2 = datum("A2");
    auto cox = make_class_datum(a2, std::vector<int>{1, 0}, std::nullopt, Coweight(2), {}, std::vector<Int>{});
    CHECK(c_invariant(cox) == 2);
  }

  TEST_CASE("levi relation") {
    auto a2 = datum("A2");
    auto cd = split_class(a2, cw({0, 0}), {{0, Rational(1)}, {1, Rational(2)}, {2, Rational(3)}});
    auto rel = levi_relation(cd, 0b01);
    CHECK(rel.r_N == Rational(5));
    CHECK(rel.d_G == Rational(12));
    CHECK(rel.d_M == Rational(2));
    CHECK(rel.holds);
    auto full = levi_relation(cd, 0b11);
    CHECK(full.r_N == Rational(0));
    CHECK(full.d_G == full.d_M);
    auto borel = levi_relation(cd, 0);
    CHECK(borel.d_M == Rational(0));
    CHECK(Rational(2) * borel.r_N == borel.d_G);
    CHECK_THROWS_AS(levi_relation(sl2_ramified(Rational(1, 2)), 0), InputError);
    CHECK_THROWS_AS(levi_relation(split_class(a2, cw({1, 0})), 0b01), InputError);
  }
}

TEST_SUITE("kv") {
  TEST_CASE("nonemptiness") {
    auto sl2 = datum("A1");
    CHECK(nonempty(split_class(sl2, cw({1})), cw({1})));
    CHECK_FALSE(nonempty(split_class(sl2, cw({1})), cw({0})));
    CHECK(nonempty(sl2_ramified(Rational(1, 2)), cw({1})));
    // Class mismatch on PGL2.
    auto pgl2 = datum("A1", IsogenySpec::adjoint());
    auto cd = split_class(pgl2, Coweight::parse("1/2"));
    CHECK(nonempty(cd, Coweight::parse("3/2")));
    CHECK_FALSE(nonempty(cd, cw({1})));
  }

  TEST_CASE("dimension") {
    auto sl2 = datum("A1");
    CHECK(dimension(split_class(sl2, cw({0}), {{0, Rational(1)}}), cw({1})) == 2);
    CHECK(dimension(sl2_ramified(Rational(1, 2)), cw({1})) == 1);
    CHECK(dimension(split_class(sl2, cw({1})), cw({1})) == 0);
    CHECK_THROWS_AS(dimension(split_class(sl2, cw({1})), cw({0})), EmptyVarietyError);
    CHECK_THROWS_AS(dimension(split_class(sl2, cw({0})), cw({-1})), InputError);
  }

  TEST_CASE("unramified dimension and orbit count") {
    auto a1 = datum("A1");
    auto top = unramified_dimension(split_class(a1, cw({1})), cw({1}));
    CHECK(top.dimension == 0);
    CHECK(top.component_orbits == 1);
    auto zero = unramified_dimension(split_class(a1, cw({0})), cw({1}));
    CHECK(zero.dimension == 1);
    CHECK(zero.component_orbits == 1);
    auto a2 = unramified_dimension(split_class(datum("A2"), cw({0, 0})), cw({1, 1}));
    CHECK(a2.dimension == 2);
    CHECK(a2.component_orbits == 2);
    CHECK_THROWS_AS(unramified_dimension(sl2_ramified(Rational(1, 2)), cw({1})), InputError);
  }

  TEST_CASE("best integral approximation") {
    auto sl2 = datum("A1");
    CHECK(best_integral_approx(*sl2, cw({1}), cw({3})) == cw({1}));
    CHECK(best_integral_approx(*sl2, Coweight::parse("1/2"), cw({1})) == cw({1}));
    auto a2 = datum("A2");
    CHECK(best_integral_approx(*a2, Coweight::parse("1/2,1/2"), cw({1, 1})) == cw({1, 1}));
    CHECK_THROWS_AS(best_integral_approx(*a2, cw({2, 2}), cw({1, 1})), InputError);

    // Against the brute-force minimum over the box.
    for (const char* t : {"A2", "B2", "G2"}) {
      auto rd = datum(t, IsogenySpec::adjoint());
      const auto& sys = rd->system();
      for (Int a = 0; a <= 6; ++a)
        for (Int b = 0; b <= 6; ++b) {
          Coweight nu = Coweight::from_fraction(std::vector<Int>{a, b}, 3);
          if (!sys.is_dominant(nu)) continue;
          // 4 rho^vee is dominant, lies in the coroot lattice and dominates the grid.
          Coweight up = Rational(4) * sys.rho_check();
          std::vector<Coweight> cands;
          for (const auto& mu : oracle::dominant_below_box(rd->cartan(), up)) {
            bool above = true;
            for (std::size_t i = 0; i < 2; ++i)
              if (mu[i] < nu[i]) above = false;
            if (above) cands.push_back(mu);
          }
          std::vector<Coweight> mins;
          for (const auto& c : cands) {
            bool minimal = true;
            for (const auto& d : cands)
              if (!(d == c) && RootSystem::leq(d, c)) minimal = false;
            if (minimal) mins.push_back(c);
          }
          CAPTURE(t);
          CAPTURE(nu.to_string());
          REQUIRE(mins.size() == 1);
          CHECK(best_integral_approx(*rd, nu, up) == mins.front());
        }
    }
  }

  TEST_CASE("maximal integral points below") {
    auto sl2 = datum("A1");
    CHECK(chen_zhu_approx(*sl2, cw({2}), std::vector<Int>{}) == std::vector<Coweight>{cw({2})});
    CHECK(chen_zhu_approx(*sl2, Coweight::parse("1/2"), std::vector<Int>{}) == std::vector<Coweight>{cw({0})});
    CHECK(chen_zhu_approx(*sl2, cw({0}), std::vector<Int>{}) == std::vector<Coweight>{cw({0})});
    // PGL2: the nontrivial class has no dominant point below 1/4.
    auto pgl2 = datum("A1", IsogenySpec::adjoint());
    CHECK(chen_zhu_approx(*pgl2, Coweight::parse("1/4"), std::vector<Int>{1}).empty());
  }

  TEST_CASE("predicted components and the regular bound") {
    auto sl2 = datum("A1");
    CHECK(predicted_components(sl2_ramified(Rational(1, 2)), cw({2})) ==
          multiplicity_freudenthal(sl2->system(), cw({2}), cw({0})));
    CHECK(predicted_components(split_class(sl2, cw({1})), cw({1})) == 1);
    CHECK(regular_orbit_bound(*sl2) == 1);
    CHECK(regular_orbit_bound(*datum("A3")) == 4);
    auto a2 = datum("A2");
    CHECK(regular_bound_exact(*a2, cw({2, 2}), cw({0, 0})));
    CHECK_FALSE(regular_bound_exact(*a2, cw({2, 1}), cw({0, 0})));
    CHECK_FALSE(regular_bound_exact(*a2, cw({2, 2}), cw({2, 2})));
  }

  TEST_CASE("extended discriminant and degenerate cases") {
    auto sl2 = datum("A1");
    CHECK(extended_disc_valuation(split_class(sl2, cw({1})), cw({1})) == Rational(0));
    CHECK(extended_disc_valuation(sl2_ramified(Rational(1, 2)), cw({1})) == Rational(3));
    auto a2 = datum("A2");
    CHECK(extended_disc_valuation(split_class(a2, cw({2, 1})), cw({2, 1})) == Rational(0));
    CHECK(mv_dimension(*sl2, cw({1}), cw({0})) == Rational(1));
    CHECK(mv_dimension(*a2, cw({1, 1}), cw({0, 0})) == Rational(2));
    CHECK(mv_dimension(*a2, cw({1, 1}), cw({1, 1})) == Rational(4));
  }

  TEST_CASE("report") {
    auto a2 = datum("A2");
    auto cd = split_class(a2, cw({0, 0}));
    auto r = kv_report(cd, cw({2, 2}));
    CHECK(r.nonempty);
    CHECK(r.d == 0);
    CHECK(r.c == 0);
    CHECK(r.dimension.value() == 4);
    CHECK(r.mu_star.value() == cw({0, 0}));
    CHECK(r.predicted_orbits.value() == 3);
    CHECK(r.regular_orbit_bound == 2);
    CHECK(r.regular_bound_exact);
    CHECK(r.d_plus == Rational(8));
    auto empty = kv_report(split_class(a2, cw({1, 1})), cw({0, 0}));
    CHECK_FALSE(empty.nonempty);
    CHECK_FALSE(empty.dimension.has_value());
  }
}
