#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <vector>

#include "jzb/zero_oracle.hpp"
#include "oracles.hpp"

using namespace jzb;

namespace {

const std::vector<double> kParamGrid{-0.99, -0.5, 0, 0.5, 1, 2.5, 10, 100};

}  // namespace

TEST_CASE("jacobi_matrix shape") {
  auto t = jacobi_matrix(Degree(1), JacobiParams<double>(0, 0));
  REQUIRE(t.size() == 1);
  CHECK(t.diag(0) == 0.0);
  CHECK(t.offdiag.size() == 0);

  t = jacobi_matrix(Degree(2), JacobiParams<double>(1.5, 1.5));
  CHECK(t.diag(0) == 0.0);
  CHECK(t.diag(1) == 0.0);

  t = jacobi_matrix(Degree(2), JacobiParams<double>(0, 0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t.dense());
  CHECK(std::abs(es.eigenvalues()(0) + 1 / std::sqrt(3.0)) <= 1e-14);
  CHECK(std::abs(es.eigenvalues()(1) - 1 / std::sqrt(3.0)) <= 1e-14);

  // removable singularity at alpha + beta = -1
  t = jacobi_matrix(Degree(3), JacobiParams<double>(-0.5, -0.5));
  CHECK(std::isfinite(t.offdiag(0)));
  CHECK(t.offdiag(0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));

  for (double a : kParamGrid) {
    for (double b : kParamGrid) {
      t = jacobi_matrix(Degree(30), JacobiParams<double>(a, b));
      CHECK(t.diag.cwiseAbs().maxCoeff() <= 1.0);
      CHECK(t.offdiag.minCoeff() >= 0.0);
      CHECK(t.offdiag.maxCoeff() <= 1.0);
    }
  }
}

TEST_CASE("all_zeros examples") {
  SUBCASE("Legendre n=5") {
    const auto z = all_zeros(Degree(5), JacobiParams<double>(0, 0));
    const double expected[] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                               0.9061798459386640};
    for (int k = 0; k < 5; ++k) CHECK(std::abs(z.zeros(k) - expected[k]) <= 1e-12);
    CHECK(z.max_residual <= 1e-12);
    CHECK_FALSE(z.near_boundary);
  }
  SUBCASE("Chebyshev T n=4") {
    const auto z = all_zeros(Degree(4), JacobiParams<double>(-0.5, -0.5));
    const double pi = std::numbers::pi;
    const double expected[] = {std::cos(7 * pi / 8), std::cos(5 * pi / 8), std::cos(3 * pi / 8),
                               std::cos(pi / 8)};
    for (int k = 0; k < 4; ++k) CHECK(std::abs(z.zeros(k) - expected[k]) <= 1e-13);
  }
  SUBCASE("linear case") {
    const auto z = all_zeros(Degree(1), JacobiParams<double>(2, 5));
    CHECK(z.zeros(0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
}

TEST_CASE("extreme_zeros examples") {
  auto e = extreme_zeros(Degree(5), gegenbauer_to_jacobi(GegenbauerParams<double>(0.0)));
  CHECK(std::abs(e.smallest + 0.9510565162951535) <= 1e-14);
  CHECK(std::abs(e.largest - 0.9510565162951535) <= 1e-14);
  e = extreme_zeros(Degree(1), JacobiParams<double>(0, 0));
  CHECK(e.smallest == 0.0);
  CHECK(e.largest == 0.0);
  e = extreme_zeros(Degree(2), JacobiParams<double>(0, 0));
  CHECK(std::abs(e.smallest + 0.5773502691896258) <= 1e-15);
  CHECK(std::abs(e.largest - 0.5773502691896258) <= 1e-15);
}

TEST_CASE("chebyshev_closed_form examples") {
  auto z = chebyshev_closed_form(Degree(1), ChebyshevKind::first);
  CHECK(z.zeros(0) == 0.0);
  z = chebyshev_closed_form(Degree(5), ChebyshevKind::first);
  CHECK(std::abs(z.largest() - 0.9510565162951535) <= 1e-15);
  CHECK(std::abs((1 - z.largest()) * (1 + z.largest()) - 0.09549150281252629) <= 1e-15);
  z = chebyshev_closed_form(Degree(5), ChebyshevKind::second);
  CHECK(std::abs(z.largest() - 0.8660254037844387) <= 1e-15);
  CHECK(std::abs((1 - z.largest()) * (1 + z.largest()) - 0.25) <= 1e-15);
  CHECK(z.zeros(2) == 0.0);
  CHECK(z.params.alpha() == 0.5);
}

TEST_CASE("eigensolver agrees with the Chebyshev closed forms for n <= 200") {
  for (int n = 1; n <= 200; ++n) {
    for (auto [lambda, kind] : {std::pair{0.0, ChebyshevKind::first}, std::pair{1.0, ChebyshevKind::second}}) {
      const auto z = all_zeros(Degree(n), gegenbauer_to_jacobi(GegenbauerParams<double>(lambda)));
      const auto c = chebyshev_closed_form(Degree(n), kind);
      INFO("n=" << n << " lambda=" << lambda);
      CHECK((z.zeros - c.zeros).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("eigensolver agrees with a dense symmetric eigensolver and with sign changes") {
  for (int n : {3, 7, 12, 25}) {
    for (double a : kParamGrid) {
      for (double b : kParamGrid) {
        const JacobiParams<double> p(a, b);
        const auto z = all_zeros(Degree(n), p);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi_matrix(Degree(n), p).dense(),
                                                          Eigen::EigenvaluesOnly);
        INFO("n=" << n << " a=" << a << " b=" << b);
        CHECK((z.zeros - es.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }
  for (int n : {4, 9}) {
    for (double a : {-0.5, 0.0, 2.5}) {
      for (double b : {-0.5, 1.0}) {
        const JacobiParams<double> p(a, b);
        const auto roots = oracle::sign_change_roots(
            [&](double x) { return eval_jacobi(Degree(n), p, x); }, -1.0, 1.0);
        const auto z = all_zeros(Degree(n), p);
        REQUIRE(roots.size() == std::size_t(n));
        for (int k = 0; k < n; ++k) CHECK(std::abs(z.zeros(k) - roots[k]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("zeros are ordered, inside (-1, 1) and interlace") {
  for (double a : kParamGrid) {
    for (double b : kParamGrid) {
      const JacobiParams<double> p(a, b);
      auto prev = all_zeros(Degree(1), p);
      for (int n = 2; n <= 50; ++n) {
        const auto cur = all_zeros(Degree(n), p);
        INFO("n=" << n << " a=" << a << " b=" << b);
        CHECK(cur.smallest() > -1.0);
        CHECK(cur.largest() < 1.0);
        bool ok = true;
        for (int k = 0; k + 1 < n; ++k) {
          ok = ok && cur.zeros(k) < cur.zeros(k + 1);
          ok = ok && cur.zeros(k) < prev.zeros(k) && prev.zeros(k) < cur.zeros(k + 1);
        }
        CHECK(ok);
        prev = cur;
      }
    }
  }
}

TEST_CASE("reflection symmetry of the extreme zeros") {
  for (int n : {1, 2, 5, 13, 50, 200}) {
    for (double a : kParamGrid) {
      for (double b : kParamGrid) {
        const auto e = extreme_zeros(Degree(n), JacobiParams<double>(a, b));
        const auto f = extreme_zeros(Degree(n), JacobiParams<double>(b, a));
        CHECK(std::abs(e.smallest + f.largest) <= 1e-12);
      }
    }
  }
}

TEST_CASE("parameters near the boundary are flagged") {
  const auto z = all_zeros(Degree(6), JacobiParams<double>(-1 + 5e-7, 0.0));
  CHECK(z.near_boundary);
  CHECK(z.largest() < 1.0);
}

TEST_CASE("large degree stays accurate") {
  const auto z = all_zeros(Degree(2000), gegenbauer_to_jacobi(GegenbauerParams<double>(1.0)));
  const auto c = chebyshev_closed_form(Degree(2000), ChebyshevKind::second);
  CHECK((z.zeros - c.zeros).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("long double zeros") {
  const auto z = all_zeros(Degree(5), JacobiParams<long double>(0, 0));
  CHECK(std::abs(z.largest() - 0.906179845938663992797626878299392965L) <= 1e-18L);
}
