#ifndef JZB_EK_ENGINE_HPP
#define JZB_EK_ENGINE_HPP

// Enestrom-Kakeya machinery for Jacobi polynomials.
//
// With z = (x-1)/(x+1),
//
//   P_n^{(a,b)}(x) = ((x+1)/2)^n C(n+a, n) sum_k a_k z^k,
//   a_k = C(n,k) (n+b-k+1)_k / (a+1)_k,
//
// and a_{k-1}/a_k = k(a+k) / ((n+1-k)(n+b+1-k)) increases with k. Every root of
// a positive-coefficient polynomial has modulus between the smallest and the
// largest of these ratios, so every zero x in (-1, 1) satisfies
//
//   rho_min <= (1-x)/(1+x) <= rho_max.
//
// z is negative on (-1, 1); the engine works with |z| = (1-x)/(1+x).

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "jzb/params.hpp"
#include "jzb/zero_oracle.hpp"

namespace jzb {

inline constexpr int kMaxEkDegree = 500;

template <typename Scalar = double>
struct EkCoefficients {
  Degree n;
  JacobiParams<Scalar> params;
  VectorX<Scalar> a;

  /// sum_k a_k z^k by Horner.
  Scalar evaluate(Scalar z) const {
    Scalar acc = Scalar(0);
    for (Eigen::Index k = a.size() - 1; k >= 0; --k) acc = acc * z + a(k);
    return acc;
  }
};

template <typename Scalar = double>
struct EkAnnulus {
  Scalar rho_min;
  Scalar rho_max;

  /// (1-x)/(1+x) for a point of (-1, 1).
  static Scalar modulus(Scalar x) { return (1 - x) / (1 + x); }

  bool contains(Scalar x, Scalar rel_slack = Scalar(0)) const {
    const Scalar m = modulus(x);
    return m >= rho_min * (1 - rel_slack) && m <= rho_max * (1 + rel_slack);
  }

  /// 1 - x_{n,n} >= 2 rho_min / (1 + rho_min).
  Scalar largest_gap_lower() const { return 2 * rho_min / (1 + rho_min); }
  /// 1 + x_{1,n} >= 2 / (1 + rho_max).
  Scalar smallest_gap_lower() const { return 2 / (1 + rho_max); }
};

/// a_{k-1}/a_k for 1 <= k <= n.
template <typename Scalar>
Scalar ek_ratio(int n, const JacobiParams<Scalar>& p, int k) {
  return Scalar(k) * (p.alpha() + k) / (Scalar(n + 1 - k) * (n + p.beta() + 1 - k));
}

/// Coefficients a_0..a_n, built as running products of the ratio sequence.
template <typename Scalar>
EkCoefficients<Scalar> ek_coefficients(Degree n, const JacobiParams<Scalar>& p) {
  const int deg = n.value();
  if (deg > kMaxEkDegree) {
    throw ArgumentError("ek_coefficients: n must not exceed 500 (got " + std::to_string(deg) + ")");
  }
  EkCoefficients<Scalar> out{n, p, VectorX<Scalar>(deg + 1)};
  out.a(0) = Scalar(1);
  for (int k = 1; k <= deg; ++k) {
    out.a(k) = out.a(k - 1) / ek_ratio(deg, p, k);
    if (!std::isfinite(static_cast<double>(out.a(k))) || !(out.a(k) > 0)) {
      throw ArgumentError("ek_coefficients: coefficient a_" + std::to_string(k) +
                          " leaves double range");
    }
  }
  return out;
}

/// (a_0/a_1, a_{n-1}/a_n) = ((alpha+1)/(n(n+beta)), n(n+alpha)/(beta+1)).
template <typename Scalar>
std::pair<Scalar, Scalar> ratio_extremes(Degree n, const JacobiParams<Scalar>& p) {
  const int deg = n.value();
  for (int k = 2; k <= deg; ++k) {
    if (!(ek_ratio(deg, p, k) > ek_ratio(deg, p, k - 1))) {
      throw std::logic_error("Enestrom-Kakeya ratio sequence not increasing at k=" +
                             std::to_string(k));
    }
  }
  const Scalar N = Scalar(deg);
  return {(p.alpha() + 1) / (N * (N + p.beta())), N * (N + p.alpha()) / (p.beta() + 1)};
}

template <typename Scalar>
EkAnnulus<Scalar> ek_zero_annulus(Degree n, const JacobiParams<Scalar>& p) {
  const auto [lo, hi] = ratio_extremes(n, p);
  return {lo, hi};
}

}  // namespace jzb

#endif  // JZB_EK_ENGINE_HPP
