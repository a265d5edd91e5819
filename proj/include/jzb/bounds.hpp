#ifndef JZB_BOUNDS_HPP
#define JZB_BOUNDS_HPP

// Closed-form bounds for the extreme zeros of Jacobi and Gegenbauer polynomials.
//
// Every bound constrains an endpoint gap rather than the zero itself:
//   largest_gap          1 - x_{n,n}
//   smallest_gap         1 + x_{1,n}
//   largest_squared_gap  1 - x_{n,n}^2
// An outer bound is a lower bound on the gap, an inner bound an upper bound.

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "jzb/params.hpp"

namespace jzb {

enum class BoundId {
  newton_outer,
  thm1_outer,
  nem_outer,
  nem_outer_refined,
  laguerre_inner,
  dj_inner,
  gn14_inner,
  gn15_outer,
  dimnik_outer,
  thm2_inner,
  thm3_inner,
  krasikov,
};

enum class Family { jacobi, gegenbauer };
enum class Quantity { largest_gap, smallest_gap, largest_squared_gap };
enum class Direction { lower, upper };

struct BoundInfo {
  BoundId id;
  std::string_view name;
  Family family;
  std::string_view formula;
};

inline constexpr std::array<BoundInfo, 12> kBoundCatalog{{
    {BoundId::newton_outer, "newton_outer", Family::jacobi,
     "1-x_nn >= 2(a+1)/(n(n+a+b+1))"},
    {BoundId::thm1_outer, "thm1_outer", Family::jacobi, "1-x_nn >= 2(a+1)/(n(n+b)+a+1)"},
    {BoundId::nem_outer, "nem_outer", Family::jacobi,
     "1-x_nn >= 2a^2/(2n+a+b+1)^2, a,b >= -1/2"},
    {BoundId::nem_outer_refined, "nem_outer_refined", Family::jacobi,
     "1-x_nn >= 2a^2/((2n+a)(2n+a+2b+2)), a,b > 0"},
    {BoundId::laguerre_inner, "laguerre_inner", Family::jacobi, "1-x_nn <= 2(a+1)/(2n+a+b)"},
    {BoundId::dj_inner, "dj_inner", Family::jacobi,
     "1-x_nn <= 2(a+1)(a+3)/(2n(n+a+b+1)+(a+1)(a+b+2))"},
    {BoundId::gn14_inner, "gn14_inner", Family::gegenbauer,
     "1-x_nn < (2l+1)(2l+3)(2l+7)/((10l+17)(n(n+2l)+(2l+1)^2/8))"},
    {BoundId::gn15_outer, "gn15_outer", Family::gegenbauer,
     "1-x_nn^2 > (2l+1)(2l+9)/(4n(n+2l)+(2l+1)(2l+5))"},
    {BoundId::dimnik_outer, "dimnik_outer", Family::gegenbauer,
     "1-x_nn^2 > (2l+1)((2l+9)n+4(2l-3))/(4(n+l-1)(n(n+l-1)+4(l+1)))"},
    {BoundId::thm2_inner, "thm2_inner", Family::gegenbauer,
     "1-x_nn^2 <= (2l+1)(2l+5)/(2n(n+2l)+(2l+1)(2l+2)), n >= 4"},
    {BoundId::thm3_inner, "thm3_inner", Family::gegenbauer,
     "1-x_nn^2 < 2(2l+1)(2l+7)/(c n(n+2l)+4(l+2)(2l+7-2c)), n >= 5"},
    {BoundId::krasikov, "krasikov", Family::gegenbauer,
     "x_nn = S(1 - d (1-S^2)^(2/3)/((2R)^(1/3) S)), 3 < d < 9"},
}};

inline const BoundInfo& bound_info(BoundId id) { return kBoundCatalog[static_cast<std::size_t>(id)]; }
inline std::string_view to_string(BoundId id) { return bound_info(id).name; }

inline std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (const auto& info : kBoundCatalog) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

inline std::string_view to_string(Family f) { return f == Family::jacobi ? "jacobi" : "gegenbauer"; }

inline std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::largest_gap: return "1-x_max";
    case Quantity::smallest_gap: return "1+x_min";
    case Quantity::largest_squared_gap: return "1-x_max^2";
  }
  return "?";
}

inline std::string_view to_string(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

template <typename Scalar = double>
using PolyParams = std::variant<JacobiParams<Scalar>, GegenbauerParams<Scalar>>;

/// One bound's statement about one gap quantity.
template <typename Scalar = double>
struct BoundConstraint {
  BoundId id;
  Degree n;
  PolyParams<Scalar> params;
  Quantity quantity;
  Direction direction;
  Scalar value;
  bool applicable;
  std::string note;
};

template <typename Scalar = double>
struct KrasikovEnvelope {
  Scalar S;
  Scalar R;
  Scalar x_low;   // delta = 9
  Scalar x_high;  // delta = 3
};

enum class ZeroTarget { largest, smallest };

/// Closed interval implied for one extreme zero.
template <typename Scalar = double>
struct ZeroInterval {
  ZeroTarget target;
  Scalar lower;
  Scalar upper;
  bool degenerate = false;
};

/// c(lambda) = 3 + sqrt(5 + 32/((2l+3)(2l+5))), strictly inside (3+sqrt5, 6).
template <typename Scalar>
Scalar c_lambda(const GegenbauerParams<Scalar>& g) {
  const Scalar l = g.lambda();
  return Scalar(3) + std::sqrt(Scalar(5) + Scalar(32) / ((2 * l + 3) * (2 * l + 5)));
}

/// Right-hand side of the Theorem-3 inner bound on 1 - x_{n,n}^2 for real n
/// (no degree guard; used for the large-n asymptotic constants).
template <typename Scalar>
Scalar thm3_inner_value(Scalar n, const GegenbauerParams<Scalar>& g) {
  const Scalar l = g.lambda();
  const Scalar c = c_lambda(g);
  return 2 * (2 * l + 1) * (2 * l + 7) / (c * (n * (n + 2 * l)) + 4 * (l + 2) * (2 * l + 7 - 2 * c));
}

/// Right-hand side of the outer bound (2l+1)(2l+9)/(4n(n+2l)+(2l+1)(2l+5)) for real n.
template <typename Scalar>
Scalar gn15_outer_value(Scalar n, const GegenbauerParams<Scalar>& g) {
  const Scalar l = g.lambda();
  return (2 * l + 1) * (2 * l + 9) / (4 * (n * (n + 2 * l)) + (2 * l + 1) * (2 * l + 5));
}

template <typename Scalar>
KrasikovEnvelope<Scalar> krasikov_interval(Degree n, const GegenbauerParams<Scalar>& g) {
  const Scalar l = g.lambda();
  const Scalar nn = Scalar(n.value()) * (n.value() + 2 * l);
  const Scalar w = (2 * l + 1) * (2 * l + 1);
  const Scalar S = std::sqrt(4 * nn / (4 * nn + w));
  const Scalar R = 2 * std::sqrt(nn * (4 * nn + w));
  const Scalar one_minus_s2 = w / (4 * nn + w);
  const Scalar err = std::pow(one_minus_s2, Scalar(2) / 3) / (std::cbrt(2 * R) * S);
  return {S, R, S * (1 - 9 * err), S * (1 - 3 * err)};
}

namespace detail {

template <typename Scalar>
BoundConstraint<Scalar> make_constraint(BoundId id, Degree n, const PolyParams<Scalar>& p,
                                        Quantity q, Direction d, Scalar numerator,
                                        Scalar denominator, bool in_domain, std::string note) {
  BoundConstraint<Scalar> b{id, n, p, q, d, Scalar(0), false, std::move(note)};
  if (!(denominator > 0)) {
    b.value = denominator == 0 ? std::numeric_limits<Scalar>::quiet_NaN() : numerator / denominator;
    b.note = "nonpositive denominator";
    return b;
  }
  b.value = numerator / denominator;
  if (!std::isfinite(static_cast<double>(b.value))) {
    b.note = "nonfinite value";
    return b;
  }
  if (!in_domain) return b;
  if (!(b.value > 0)) {
    b.note = "nonpositive value (trivial statement)";
    return b;
  }
  b.applicable = true;
  return b;
}

template <typename Scalar>
std::vector<BoundConstraint<Scalar>> jacobi_bound(BoundId id, Degree n,
                                                  const JacobiParams<Scalar>& jp) {
  const PolyParams<Scalar> p = jp;
  const Scalar N = Scalar(n.value());
  const Scalar a = jp.alpha(), b = jp.beta();
  const Scalar half = Scalar(-0.5);
  // Each formula is written for the largest zero; the smallest-zero twin swaps a and b.
  auto both = [&](auto&& formula, Direction dir, bool in_domain, const char* why) {
    std::vector<BoundConstraint<Scalar>> out;
    const auto [num_hi, den_hi] = formula(a, b);
    const auto [num_lo, den_lo] = formula(b, a);
    out.push_back(make_constraint(id, n, p, Quantity::largest_gap, dir, num_hi, den_hi, in_domain,
                                  in_domain ? "" : why));
    out.push_back(make_constraint(id, n, p, Quantity::smallest_gap, dir, num_lo, den_lo,
                                  in_domain, in_domain ? "" : why));
    return out;
  };
  using Pair = std::pair<Scalar, Scalar>;
  switch (id) {
    case BoundId::newton_outer:
      return both([&](Scalar s, Scalar t) { return Pair{2 * (s + 1), N * (N + s + t + 1)}; },
                  Direction::lower, true, "");
    case BoundId::thm1_outer:
      return both([&](Scalar s, Scalar t) { return Pair{2 * (s + 1), N * (N + t) + s + 1}; },
                  Direction::lower, true, "");
    case BoundId::nem_outer: {
      const Scalar d = 2 * N + a + b + 1;
      return both([&](Scalar s, Scalar) { return Pair{2 * s * s, d * d}; }, Direction::lower,
                  a >= half && b >= half, "requires alpha, beta >= -1/2");
    }
    case BoundId::nem_outer_refined:
      return both(
          [&](Scalar s, Scalar t) { return Pair{2 * s * s, (2 * N + s) * (2 * N + s + 2 * t + 2)}; },
          Direction::lower, a > 0 && b > 0, "requires alpha, beta > 0");
    case BoundId::laguerre_inner:
      return both([&](Scalar s, Scalar t) { return Pair{2 * (s + 1), 2 * N + s + t}; },
                  Direction::upper, true, "");
    case BoundId::dj_inner:
      return both(
          [&](Scalar s, Scalar t) {
            return Pair{2 * (s + 1) * (s + 3), 2 * N * (N + s + t + 1) + (s + 1) * (s + t + 2)};
          },
          Direction::upper, true, "");
    default:
      throw ArgumentError("bound " + std::string(to_string(id)) +
                          " is a Gegenbauer bound and needs lambda, not (alpha, beta)");
  }
}

template <typename Scalar>
std::vector<BoundConstraint<Scalar>> gegenbauer_bound(BoundId id, Degree n,
                                                      const GegenbauerParams<Scalar>& g) {
  const PolyParams<Scalar> p = g;
  const int deg = n.value();
  const Scalar N = Scalar(deg);
  const Scalar l = g.lambda();
  const Scalar nn = N * (N + 2 * l);
  const Scalar l1 = 2 * l + 1;
  auto one = [&](Quantity q, Direction d, Scalar num, Scalar den, bool in_domain,
                 const char* why) {
    return std::vector<BoundConstraint<Scalar>>{
        make_constraint(id, n, p, q, d, num, den, in_domain, in_domain ? "" : why)};
  };
  switch (id) {
    case BoundId::gn14_inner:
      return one(Quantity::largest_gap, Direction::upper, l1 * (2 * l + 3) * (2 * l + 7),
                 (10 * l + 17) * (nn + l1 * l1 / 8), true, "");
    case BoundId::gn15_outer:
      return one(Quantity::largest_squared_gap, Direction::lower, l1 * (2 * l + 9),
                 4 * nn + l1 * (2 * l + 5), true, "");
    case BoundId::dimnik_outer: {
      const Scalar m = N + l - 1;
      return one(Quantity::largest_squared_gap, Direction::lower,
                 l1 * ((2 * l + 9) * N + 4 * (2 * l - 3)), 4 * m * (N * m + 4 * (l + 1)), true,
                 "");
    }
    case BoundId::thm2_inner:
      return one(Quantity::largest_squared_gap, Direction::upper, l1 * (2 * l + 5),
                 2 * nn + l1 * (2 * l + 2), deg >= 4, "requires n >= 4");
    case BoundId::thm3_inner: {
      const Scalar c = c_lambda(g);
      return one(Quantity::largest_squared_gap, Direction::upper, 2 * l1 * (2 * l + 7),
                 c * nn + 4 * (l + 2) * (2 * l + 7 - 2 * c), deg >= 5, "requires n >= 5");
    }
    case BoundId::krasikov: {
      const auto env = krasikov_interval(n, g);
      const bool ok = deg >= 5;
      const char* why = "envelope checked for n >= 5 only";
      std::vector<BoundConstraint<Scalar>> out;
      out.push_back(make_constraint(id, n, p, Quantity::largest_gap, Direction::lower,
                                    1 - env.x_high, Scalar(1), ok, ok ? "" : why));
      out.push_back(make_constraint(id, n, p, Quantity::largest_gap, Direction::upper,
                                    1 - env.x_low, Scalar(1), ok, ok ? "" : why));
      return out;
    }
    default:
      throw ArgumentError("bound " + std::string(to_string(id)) +
                          " is a Jacobi bound and needs (alpha, beta), not lambda");
  }
}

}  // namespace detail

/// Evaluate one catalogue bound. Jacobi-family ids yield two constraints
/// (largest and smallest zero), Gegenbauer ids one, krasikov two (both sides
/// of the envelope on 1 - x_{n,n}). Constraints outside the bound's stated
/// domain are still evaluated where arithmetically defined, with
/// applicable = false.
template <typename Scalar>
std::vector<BoundConstraint<Scalar>> evaluate_bound(BoundId id, Degree n,
                                                    const PolyParams<Scalar>& p) {
  if (const auto* jp = std::get_if<JacobiParams<Scalar>>(&p)) return detail::jacobi_bound(id, n, *jp);
  return detail::gegenbauer_bound(id, n, std::get<GegenbauerParams<Scalar>>(p));
}

template <typename Scalar>
std::vector<BoundConstraint<Scalar>> evaluate_bound(BoundId id, Degree n,
                                                    const JacobiParams<Scalar>& p) {
  return detail::jacobi_bound(id, n, p);
}

template <typename Scalar>
std::vector<BoundConstraint<Scalar>> evaluate_bound(BoundId id, Degree n,
                                                    const GegenbauerParams<Scalar>& p) {
  return detail::gegenbauer_bound(id, n, p);
}

/// Translate a gap statement into an interval for the extreme zero itself.
template <typename Scalar>
ZeroInterval<Scalar> constraint_to_zero_interval(const BoundConstraint<Scalar>& b) {
  if (!b.applicable) {
    throw ArgumentError("constraint " + std::string(to_string(b.id)) + " is not applicable");
  }
  const Scalar v = b.value;
  const bool lower = b.direction == Direction::lower;
  switch (b.quantity) {
    case Quantity::largest_gap:
      return lower ? ZeroInterval<Scalar>{ZeroTarget::largest, Scalar(-1), 1 - v}
                   : ZeroInterval<Scalar>{ZeroTarget::largest, 1 - v, Scalar(1)};
    case Quantity::smallest_gap:
      return lower ? ZeroInterval<Scalar>{ZeroTarget::smallest, v - 1, Scalar(1)}
                   : ZeroInterval<Scalar>{ZeroTarget::smallest, Scalar(-1), v - 1};
    case Quantity::largest_squared_gap:
      if (v >= 1) return {ZeroTarget::largest, Scalar(-1), Scalar(1), true};
      return lower ? ZeroInterval<Scalar>{ZeroTarget::largest, Scalar(-1), std::sqrt(1 - v)}
                   : ZeroInterval<Scalar>{ZeroTarget::largest, std::sqrt(1 - v), Scalar(1)};
  }
  throw ArgumentError("unknown quantity");
}

/// Gap quantity measured from the true extreme zeros.
template <typename Scalar>
Scalar true_gap(Quantity q, Scalar smallest, Scalar largest) {
  switch (q) {
    case Quantity::largest_gap: return 1 - largest;
    case Quantity::smallest_gap: return 1 + smallest;
    case Quantity::largest_squared_gap: return (1 - largest) * (1 + largest);
  }
  return std::numeric_limits<Scalar>::quiet_NaN();
}

}  // namespace jzb

#endif  // JZB_BOUNDS_HPP
