#ifndef JZB_ZERO_ORACLE_HPP
#define JZB_ZERO_ORACLE_HPP

// Ground-truth zeros of P_n^{(alpha,beta)}.
//
// The zeros are the eigenvalues of the symmetric tridiagonal matrix built from
// the monic three-term recurrence. Each eigenvalue is isolated by bisection on
// Sturm-sequence counts, which certifies an interval containing exactly one
// zero; at most two Newton steps then polish the midpoint, and a step that
// leaves the certified interval is discarded.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "jzb/params.hpp"
#include "jzb/polyeval.hpp"

namespace jzb {

template <typename Scalar = double>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Symmetric tridiagonal matrix: diag has n entries, offdiag n-1 nonnegative entries.
template <typename Scalar = double>
struct SymTridiag {
  VectorX<Scalar> diag;
  VectorX<Scalar> offdiag;

  Eigen::Index size() const { return diag.size(); }

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense() const {
    const Eigen::Index n = size();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
    m.diagonal() = diag;
    if (n > 1) {
      m.diagonal(1) = offdiag;
      m.diagonal(-1) = offdiag;
    }
    return m;
  }

  /// Number of eigenvalues strictly below x (Sturm count via the LDL^T pivots).
  int count_below(Scalar x) const {
    const Scalar tiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
    int count = 0;
    Scalar d = diag(0) - x;
    for (Eigen::Index i = 0;; ++i) {
      if (std::abs(d) < tiny) d = -tiny;
      if (d < 0) ++count;
      if (i + 1 == size()) break;
      const Scalar e = offdiag(i);
      d = (diag(i + 1) - x) - e * e / d;
    }
    return count;
  }
};

/// Ordered zeros of one Jacobi polynomial with accuracy diagnostics.
template <typename Scalar = double>
struct ZeroSet {
  Degree degree;
  JacobiParams<Scalar> params;
  VectorX<Scalar> zeros;
  /// max over zeros of |P(x)/P'(x)|, the size of the next Newton correction.
  Scalar max_residual;
  bool near_boundary = false;

  Scalar smallest() const { return zeros(0); }
  Scalar largest() const { return zeros(zeros.size() - 1); }
};

template <typename Scalar = double>
struct ExtremeZeros {
  Scalar smallest;
  Scalar largest;
};

enum class ChebyshevKind { first, second };

/// Jacobi matrix of P_n^{(alpha,beta)}; its eigenvalues are exactly the zeros.
template <typename Scalar>
SymTridiag<Scalar> jacobi_matrix(Degree n, const JacobiParams<Scalar>& p) {
  const int deg = n.value();
  const Scalar a = p.alpha(), b = p.beta();
  SymTridiag<Scalar> t;
  t.diag.resize(deg);
  t.offdiag.resize(deg - 1);
  t.diag(0) = (b - a) / (a + b + 2);
  for (int k = 1; k < deg; ++k) {
    const Scalar s = 2 * k + a + b;
    t.diag(k) = (b - a) * (b + a) / (s * (s + 2));
  }
  for (int k = 1; k < deg; ++k) {
    const Scalar s = 2 * k + a + b;
    Scalar sq;
    if (k == 1) {
      // general formula has a removable 0/0 at a+b = -1
      sq = 4 * (1 + a) * (1 + b) / ((s * s) * (s + 1));
    } else {
      sq = 4 * k * (k + a) * (k + b) * (k + a + b) / ((s * s) * (s + 1) * (s - 1));
    }
    t.offdiag(k - 1) = std::sqrt(sq);
  }
  return t;
}

namespace detail {

template <typename Scalar>
Scalar polish_zero(int n, Scalar a, Scalar b, Scalar lo, Scalar hi) {
  Scalar x = lo + (hi - lo) / 2;
  for (int step = 0; step < 2; ++step) {
    const Scalar r = newton_ratio(n, a, b, x);
    if (!std::isfinite(static_cast<double>(r))) break;
    const Scalar next = x - r;
    if (!(next >= lo && next <= hi)) break;
    x = next;
  }
  return x;
}

}  // namespace detail

/// All zeros of P_n^{(alpha,beta)}, ascending.
template <typename Scalar>
ZeroSet<Scalar> all_zeros(Degree n, const JacobiParams<Scalar>& p) {
  constexpr Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const int deg = n.value();
  const auto t = jacobi_matrix(n, p);
  const auto fault = [&](const std::string& what) {
    return OracleFault("zero oracle: " + what + " (n=" + std::to_string(deg) +
                       ", alpha=" + detail::fmt_real(static_cast<double>(p.alpha())) +
                       ", beta=" + detail::fmt_real(static_cast<double>(p.beta())) + ")");
  };
  if (t.count_below(Scalar(-1)) != 0 || t.count_below(Scalar(1)) != deg) {
    throw fault("eigenvalues not resolvable inside (-1, 1) in working precision");
  }

  // lower[k] / upper[k] bracket the k-th eigenvalue: count(lower) <= k < count(upper).
  std::vector<Scalar> lower(deg, Scalar(-1)), upper(deg, Scalar(1));
  ZeroSet<Scalar> out{n, p, VectorX<Scalar>(deg), Scalar(0), p.near_boundary()};
  for (int k = 0; k < deg; ++k) {
    Scalar lo = std::max(lower[k], k > 0 ? lower[k - 1] : Scalar(-1));
    Scalar hi = upper[k];
    int iter = 0;
    while (hi - lo > 8 * eps) {
      const Scalar mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      if (++iter > 4 * std::numeric_limits<Scalar>::digits) throw fault("bisection did not converge");
      const int c = t.count_below(mid);
      for (int j = k + 1; j < deg; ++j) {
        if (j < c) upper[j] = std::min(upper[j], mid);
        else lower[j] = std::max(lower[j], mid);
      }
      if (c > k) hi = mid;
      else lo = mid;
    }
    lower[k] = lo;
    upper[k] = hi;
    out.zeros(k) = detail::polish_zero(deg, p.alpha(), p.beta(), lo, hi);
  }

  for (int k = 0; k < deg; ++k) {
    const Scalar x = out.zeros(k);
    if (!(x > Scalar(-1) && x < Scalar(1))) throw fault("zero on or outside [-1, 1]");
    if (k > 0) {
      const Scalar gap = x - out.zeros(k - 1);
      if (!(gap > 4 * eps * std::max(Scalar(1), std::abs(x)))) {
        throw fault("eigenvalue cluster at x=" + detail::fmt_real(static_cast<double>(x)));
      }
    }
    const Scalar r = std::abs(detail::newton_ratio(deg, p.alpha(), p.beta(), x));
    if (!std::isfinite(static_cast<double>(r))) throw fault("nonfinite residual");
    out.max_residual = std::max(out.max_residual, r);
  }
  if (out.max_residual > Scalar(1e-12)) {
    throw fault("residual " + detail::fmt_real(static_cast<double>(out.max_residual)) +
                " exceeds 1e-12");
  }
  return out;
}

template <typename Scalar>
ExtremeZeros<Scalar> extreme_zeros(Degree n, const JacobiParams<Scalar>& p) {
  const auto zs = all_zeros(n, p);
  return {zs.smallest(), zs.largest()};
}

/// Closed-form Chebyshev zeros, independent of the eigensolver.
///
/// First kind:  cos((2k-1) pi / (2n)), the zeros of P_n^{(-1/2,-1/2)}.
/// Second kind: cos(k pi / (n+1)),     the zeros of P_n^{(1/2,1/2)}.
/// Both are evaluated as sines of symmetric arguments so the set is exactly
/// antisymmetric and the middle zero of odd degree is exactly 0.
template <typename Scalar = double>
ZeroSet<Scalar> chebyshev_closed_form(Degree n, ChebyshevKind kind) {
  const int deg = n.value();
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar half = kind == ChebyshevKind::first ? Scalar(-0.5) : Scalar(0.5);
  const int period = kind == ChebyshevKind::first ? deg : deg + 1;
  ZeroSet<Scalar> out{n, JacobiParams<Scalar>(half, half), VectorX<Scalar>(deg), Scalar(0)};
  for (int k = 1; k <= deg; ++k) {
    out.zeros(k - 1) = std::sin(pi * Scalar(2 * k - deg - 1) / Scalar(2 * period));
  }
  for (int k = 0; k < deg; ++k) {
    const Scalar r = std::abs(detail::newton_ratio(deg, half, half, out.zeros(k)));
    out.max_residual = std::max(out.max_residual, r);
  }
  return out;
}

}  // namespace jzb

#endif  // JZB_ZERO_ORACLE_HPP
