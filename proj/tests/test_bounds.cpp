#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "jzb/bounds.hpp"
#include "jzb/zero_oracle.hpp"

using namespace jzb;

namespace {

const std::vector<double> kParamGrid{-0.99, -0.5, 0, 0.5, 1, 2.5, 10, 100};
const std::vector<double> kLambdaGrid{-0.49, -0.25, 0, 0.5, 1, 2.5, 10, 100};

BoundConstraint<double> first(BoundId id, int n, const PolyParams<double>& p) {
  const auto v = evaluate_bound(id, Degree(n), p);
  REQUIRE(!v.empty());
  return v.front();
}

const JacobiParams<double> kLegendre(0, 0);

GegenbauerParams<double> lam(double l) { return GegenbauerParams<double>(l); }

}  // namespace

TEST_CASE("catalogue vocabulary") {
  std::set<std::string_view> names;
  for (const auto& info : kBoundCatalog) {
    names.insert(info.name);
    CHECK(parse_bound_id(info.name) == info.id);
    CHECK(to_string(info.id) == info.name);
  }
  CHECK(names.size() == 12);
  for (const char* n : {"newton_outer", "thm1_outer", "nem_outer", "nem_outer_refined",
                        "laguerre_inner", "dj_inner", "gn14_inner", "gn15_outer", "dimnik_outer",
                        "thm2_inner", "thm3_inner", "krasikov"}) {
    CHECK(names.count(n) == 1);
  }
  CHECK_FALSE(parse_bound_id("frobnicate").has_value());
  CHECK_FALSE(parse_bound_id("THM1_OUTER").has_value());
}

TEST_CASE("evaluate_bound examples") {
  auto b = evaluate_bound(BoundId::thm1_outer, Degree(2), kLegendre);
  REQUIRE(b.size() == 2);
  CHECK(b[0].quantity == Quantity::largest_gap);
  CHECK(b[0].direction == Direction::lower);
  CHECK(b[0].applicable);
  CHECK(b[0].value == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(b[1].quantity == Quantity::smallest_gap);
  CHECK(b[1].value == doctest::Approx(0.4).epsilon(1e-15));

  CHECK(first(BoundId::thm1_outer, 1, kLegendre).value == 1.0);

  auto c = first(BoundId::thm2_inner, 4, lam(0));
  CHECK(c.quantity == Quantity::largest_squared_gap);
  CHECK(c.direction == Direction::upper);
  CHECK(c.applicable);
  CHECK(c.value == doctest::Approx(5.0 / 34.0).epsilon(1e-15));

  c = first(BoundId::gn15_outer, 5, lam(0));
  CHECK(c.direction == Direction::lower);
  CHECK(c.value == doctest::Approx(9.0 / 105.0).epsilon(1e-15));

  c = first(BoundId::laguerre_inner, 2, kLegendre);
  CHECK(c.direction == Direction::upper);
  CHECK(c.value == doctest::Approx(0.5).epsilon(1e-15));

  c = first(BoundId::dj_inner, 2, kLegendre);
  CHECK(c.value == doctest::Approx(6.0 / 14.0).epsilon(1e-15));

  c = first(BoundId::gn14_inner, 5, lam(0));
  CHECK(c.quantity == Quantity::largest_gap);
  CHECK(c.value == doctest::Approx(21.0 / (17.0 * 25.125)).epsilon(1e-15));

  const auto dimnik = first(BoundId::dimnik_outer, 5, lam(0));
  CHECK(dimnik.value == doctest::Approx(33.0 / 384.0).epsilon(1e-15));
  CHECK(dimnik.value > first(BoundId::gn15_outer, 5, lam(0)).value);

  c = first(BoundId::thm3_inner, 5, lam(0));
  CHECK(c.value == doctest::Approx(0.13079531777104668).epsilon(1e-14));
  c = first(BoundId::thm3_inner, 5, lam(1));
  CHECK(c.value == doctest::Approx(0.32190523077593519).epsilon(1e-14));
  c = first(BoundId::thm2_inner, 5, lam(1));
  CHECK(c.value == doctest::Approx(21.0 / 82.0).epsilon(1e-15));

  c = first(BoundId::newton_outer, 3, JacobiParams<double>(1, 2));
  CHECK(c.value == doctest::Approx(4.0 / 21.0).epsilon(1e-15));
}

TEST_CASE("applicability predicates") {
  auto c = first(BoundId::thm2_inner, 3, lam(0));
  CHECK_FALSE(c.applicable);
  CHECK(std::isfinite(c.value));
  CHECK(c.value > 0);

  c = first(BoundId::thm3_inner, 4, lam(0.5));
  CHECK_FALSE(c.applicable);
  CHECK(std::isfinite(c.value));

  c = first(BoundId::nem_outer, 4, JacobiParams<double>(-0.75, 0.5));
  CHECK_FALSE(c.applicable);
  CHECK(c.value > 0);

  // alpha = beta = 0 gives the trivial statement 1 - x >= 0
  for (const auto& k : evaluate_bound(BoundId::nem_outer, Degree(2), kLegendre)) {
    CHECK_FALSE(k.applicable);
    CHECK(k.value == 0.0);
  }
  for (const auto& k : evaluate_bound(BoundId::nem_outer_refined, Degree(2), kLegendre)) {
    CHECK_FALSE(k.applicable);
  }
  CHECK(first(BoundId::nem_outer_refined, 3, JacobiParams<double>(1, 1)).applicable);

  // Dimnik's denominator vanishes at n = 1, lambda = 0
  c = first(BoundId::dimnik_outer, 1, lam(0));
  CHECK_FALSE(c.applicable);
  CHECK(c.note == "nonpositive denominator");

  auto k = evaluate_bound(BoundId::krasikov, Degree(4), lam(1));
  REQUIRE(k.size() == 2);
  CHECK_FALSE(k[0].applicable);
  CHECK_FALSE(k[1].applicable);
  k = evaluate_bound(BoundId::krasikov, Degree(5), lam(1));
  CHECK(k[0].applicable);
  CHECK(k[0].direction == Direction::lower);
  CHECK(k[1].direction == Direction::upper);
  CHECK(k[0].value < k[1].value);
}

TEST_CASE("eight applicable rows for degree-2 Legendre") {
  int applicable = 0;
  for (const auto& info : kBoundCatalog) {
    if (info.family != Family::jacobi) continue;
    for (const auto& c : evaluate_bound(info.id, Degree(2), kLegendre)) applicable += c.applicable;
  }
  CHECK(applicable == 8);
}

TEST_CASE("family mismatch is an argument error") {
  CHECK_THROWS_AS(evaluate_bound(BoundId::thm3_inner, Degree(5), kLegendre), ArgumentError);
  CHECK_THROWS_AS(evaluate_bound(BoundId::thm1_outer, Degree(5), lam(0)), ArgumentError);
  CHECK_THROWS_AS(evaluate_bound(BoundId::krasikov, Degree(5), PolyParams<double>(kLegendre)),
                  ArgumentError);
}

TEST_CASE("applicable values are positive and finite") {
  for (const auto& info : kBoundCatalog) {
    for (int n : {1, 2, 3, 4, 5, 10, 50, 200}) {
      std::vector<PolyParams<double>> params;
      if (info.family == Family::jacobi) {
        for (double a : kParamGrid)
          for (double b : kParamGrid) params.emplace_back(JacobiParams<double>(a, b));
      } else {
        for (double l : kLambdaGrid) params.emplace_back(lam(l));
      }
      for (const auto& p : params) {
        for (const auto& c : evaluate_bound(info.id, Degree(n), p)) {
          if (!c.applicable) continue;
          CHECK(std::isfinite(c.value));
          CHECK(c.value > 0);
        }
      }
    }
  }
}

TEST_CASE("c_lambda") {
  CHECK(c_lambda(lam(0)) == doctest::Approx(5.6708300832013506).epsilon(1e-14));
  CHECK(c_lambda(lam(1)) == doctest::Approx(5.4319304501333327).epsilon(1e-14));
  CHECK(std::abs(c_lambda(lam(1e4)) - (3 + std::sqrt(5.0))) <= 1e-7);

  const double lo = 3 + std::sqrt(5.0);
  double prev = 6.0;
  for (double l = -0.499; l < 1e4; l = l < 1 ? l + 0.01 : l * 1.3) {
    const double c = c_lambda(lam(l));
    CHECK(c > lo);
    CHECK(c < 6.0);
    CHECK(c < prev);
    prev = c;
  }
}

TEST_CASE("krasikov_interval") {
  auto e = krasikov_interval(Degree(5), lam(0));
  CHECK(e.S == doctest::Approx(0.99503719020998913).epsilon(1e-14));
  CHECK(e.R == doctest::Approx(100.49875621120890).epsilon(1e-14));
  CHECK(e.x_low == doctest::Approx(0.92419401262105529).epsilon(1e-13));
  CHECK(e.x_high == doctest::Approx(0.97142279768034452).epsilon(1e-13));
  CHECK(e.x_low < std::cos(std::numbers::pi / 10));
  CHECK(std::cos(std::numbers::pi / 10) < e.x_high);

  e = krasikov_interval(Degree(5), lam(1));
  CHECK(e.x_low < std::cos(std::numbers::pi / 6));
  CHECK(std::cos(std::numbers::pi / 6) < e.x_high);

  double width = 1;
  for (int n : {5, 50, 500, 5000}) {
    e = krasikov_interval(Degree(n), lam(1));
    CHECK(e.S > 0);
    CHECK(e.S < 1);
    CHECK(e.R > 0);
    CHECK(e.x_low < e.x_high);
    CHECK(e.x_high < 1);
    CHECK(e.x_high - e.x_low < width);
    width = e.x_high - e.x_low;
  }
  CHECK(width < 1e-4);
}

TEST_CASE("constraint_to_zero_interval") {
  auto b = evaluate_bound(BoundId::thm1_outer, Degree(2), kLegendre);
  auto z = constraint_to_zero_interval(b[0]);
  CHECK(z.target == ZeroTarget::largest);
  CHECK(z.upper == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(z.lower == -1.0);
  z = constraint_to_zero_interval(b[1]);
  CHECK(z.target == ZeroTarget::smallest);
  CHECK(z.lower == doctest::Approx(-0.6).epsilon(1e-15));
  CHECK(z.upper == 1.0);

  z = constraint_to_zero_interval(first(BoundId::thm2_inner, 4, lam(0)));
  CHECK(z.lower == doctest::Approx(std::sqrt(29.0 / 34.0)).epsilon(1e-15));
  CHECK(z.lower == doctest::Approx(0.92354814518279892).epsilon(1e-14));
  CHECK(z.upper == 1.0);

  z = constraint_to_zero_interval(first(BoundId::thm1_outer, 1, kLegendre));
  CHECK(z.upper == 0.0);

  z = constraint_to_zero_interval(first(BoundId::laguerre_inner, 2, kLegendre));
  CHECK(z.lower == doctest::Approx(0.5).epsilon(1e-15));

  // squared-gap values of at least 1 only give the trivial statement
  auto wide = first(BoundId::gn15_outer, 5, lam(0));
  wide.value = 1.5;
  z = constraint_to_zero_interval(wide);
  CHECK(z.degenerate);
  CHECK(z.lower == -1.0);
  CHECK(z.upper == 1.0);

  CHECK_THROWS_AS(constraint_to_zero_interval(first(BoundId::thm2_inner, 3, lam(0))), ArgumentError);
}

TEST_CASE("thm1_outer dominates newton_outer, with equality only at n = 1") {
  for (int n = 1; n <= 200; n += (n < 20 ? 1 : 30)) {
    for (double a : kParamGrid) {
      for (double b : kParamGrid) {
        const JacobiParams<double> p(a, b);
        const auto t = evaluate_bound(BoundId::thm1_outer, Degree(n), p);
        const auto w = evaluate_bound(BoundId::newton_outer, Degree(n), p);
        for (int i = 0; i < 2; ++i) {
          INFO("n=" << n << " a=" << a << " b=" << b << " i=" << i);
          if (n == 1) {
            CHECK(std::abs(t[i].value - w[i].value) <= 1e-13 * t[i].value);
          } else {
            CHECK(t[i].value > w[i].value);
          }
        }
      }
    }
  }
}

TEST_CASE("true_gap") {
  CHECK(true_gap(Quantity::largest_gap, -0.5, 0.75) == 0.25);
  CHECK(true_gap(Quantity::smallest_gap, -0.5, 0.75) == 0.5);
  CHECK(true_gap(Quantity::largest_squared_gap, -0.5, 0.5) == 0.75);
}
