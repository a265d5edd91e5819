#ifndef JZB_POLYEVAL_HPP
#define JZB_POLYEVAL_HPP

// Jacobi polynomial evaluation in the Szego normalization
//
//   P_n^{(a,b)}(x) = 2^{-n} sum_k C(n+a, n-k) C(n+b, k) (x-1)^{n-k} (x+1)^k,
//
// so that P_n^{(a,b)}(1) = C(n+a, n). Values come from the standard three-term
// recurrence. For large n and large parameters the values overflow double
// range well before the degree guard; callers that only need P/P' should use
// newton_ratio(), which rescales as it goes.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jzb/params.hpp"

namespace jzb {

namespace detail {

/// P_n^{(a,b)}(x) for n >= 0, without parameter validation.
template <typename Scalar>
Scalar jacobi_value(int n, Scalar a, Scalar b, Scalar x) {
  if (n == 0) return Scalar(1);
  Scalar prev = Scalar(1);
  Scalar curr = ((a + b + 2) * x + (a - b)) / 2;
  for (int k = 2; k <= n; ++k) {
    const Scalar s = 2 * k + a + b;
    const Scalar lead = 2 * k * (k + a + b) * (s - 2);
    const Scalar mid = (s - 1) * (s * (s - 2) * x + (a - b) * (a + b));
    const Scalar back = 2 * (k + a - 1) * (k + b - 1) * s;
    const Scalar next = (mid * curr - back * prev) / lead;
    prev = curr;
    curr = next;
  }
  return curr;
}

/// Ratio P_n(x) / P_n'(x) from a jointly rescaled value/derivative recurrence.
/// Returns NaN when the derivative vanishes.
template <typename Scalar>
Scalar newton_ratio(int n, Scalar a, Scalar b, Scalar x) {
  Scalar p0 = Scalar(1), d0 = Scalar(0);
  Scalar p1 = ((a + b + 2) * x + (a - b)) / 2, d1 = (a + b + 2) / 2;
  const Scalar big = Scalar(1e100);
  for (int k = 2; k <= n; ++k) {
    const Scalar s = 2 * k + a + b;
    const Scalar lead = 2 * k * (k + a + b) * (s - 2);
    const Scalar slope = (s - 1) * s * (s - 2);
    const Scalar mid = slope * x + (s - 1) * (a - b) * (a + b);
    const Scalar back = 2 * (k + a - 1) * (k + b - 1) * s;
    const Scalar p2 = (mid * p1 - back * p0) / lead;
    const Scalar d2 = (slope * p1 + mid * d1 - back * d0) / lead;
    p0 = p1;
    d0 = d1;
    p1 = p2;
    d1 = d2;
    const Scalar mag = std::max(std::abs(p1), std::abs(d1));
    if (mag > big) {
      const Scalar inv = Scalar(1) / mag;
      p0 *= inv;
      d0 *= inv;
      p1 *= inv;
      d1 *= inv;
    }
  }
  if (d1 == Scalar(0)) return std::numeric_limits<Scalar>::quiet_NaN();
  return p1 / d1;
}

}  // namespace detail

/// P_n^{(alpha,beta)}(x).
template <typename Scalar>
Scalar eval_jacobi(Degree n, const JacobiParams<Scalar>& p, Scalar x) {
  if (!std::isfinite(static_cast<double>(x))) throw ArgumentError("x must be finite");
  return detail::jacobi_value(n.value(), p.alpha(), p.beta(), x);
}

/// q-th derivative of P_n^{(alpha,beta)} at x, 0 <= q <= n+2.
///
/// Uses d/dx P_n^{(a,b)} = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)} q times.
template <typename Scalar>
Scalar eval_jacobi_derivative(Degree n, const JacobiParams<Scalar>& p, Scalar x, int q) {
  const int deg = n.value();
  if (q < 0 || q > deg + 2) {
    throw ArgumentError("derivative order q must satisfy 0 <= q <= n+2 (got q=" +
                        std::to_string(q) + ", n=" + std::to_string(deg) + ")");
  }
  if (!std::isfinite(static_cast<double>(x))) throw ArgumentError("x must be finite");
  if (q > deg) return Scalar(0);
  const Scalar a = p.alpha(), b = p.beta();
  Scalar scale = Scalar(1);
  for (int j = 0; j < q; ++j) scale *= (deg + a + b + 1 + j) / 2;
  return scale * detail::jacobi_value(deg - q, a + q, b + q, x);
}

/// Zero sets of P_n^{(lambda)} and P_n^{(lambda-1/2, lambda-1/2)} coincide for
/// every lambda > -1/2. The proportionality constant between the two
/// normalizations degenerates at lambda = 0 (alpha = -1/2), the zeros do not.
template <typename Scalar>
JacobiParams<Scalar> gegenbauer_to_jacobi(const GegenbauerParams<Scalar>& g) {
  const Scalar alpha = g.lambda() - Scalar(0.5);
  return JacobiParams<Scalar>(alpha, alpha);
}

/// Scaled residual of the derivative chain of the Gegenbauer equation,
///
///   (1-x^2) y^{(q+2)} - (2 lambda + 2q + 1) x y^{(q+1)} + (n-q)(n+2 lambda+q) y^{(q)},
///
/// with y = P_n^{(lambda-1/2, lambda-1/2)}, divided by
/// max(1, |y^{(q)}|, |y^{(q+1)}|, |y^{(q+2)}|).
template <typename Scalar>
Scalar ode_residual(Degree n, const GegenbauerParams<Scalar>& g, Scalar x, int q) {
  const int deg = n.value();
  if (q < 0 || q > deg - 2) {
    throw ArgumentError("ODE derivative order q must satisfy 0 <= q <= n-2 (got q=" +
                        std::to_string(q) + ", n=" + std::to_string(deg) + ")");
  }
  if (!(std::abs(x) <= Scalar(1))) throw ArgumentError("ode_residual requires |x| <= 1");
  const auto p = gegenbauer_to_jacobi(g);
  const Scalar lambda = g.lambda();
  const Scalar y0 = eval_jacobi_derivative(n, p, x, q);
  const Scalar y1 = eval_jacobi_derivative(n, p, x, q + 1);
  const Scalar y2 = eval_jacobi_derivative(n, p, x, q + 2);
  const Scalar lhs = (1 - x * x) * y2 - (2 * lambda + 2 * q + 1) * x * y1 +
                     Scalar(deg - q) * (deg + 2 * lambda + q) * y0;
  const Scalar scale = std::max({Scalar(1), std::abs(y0), std::abs(y1), std::abs(y2)});
  return lhs / scale;
}

}  // namespace jzb

#endif  // JZB_POLYEVAL_HPP
