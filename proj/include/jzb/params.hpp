#ifndef JZB_PARAMS_HPP
#define JZB_PARAMS_HPP

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace jzb {

/// Thrown when a polynomial parameter or degree is outside its admissible domain.
class ParameterDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown for malformed arguments that are not parameter-domain violations
/// (derivative order out of range, unknown bound id, family mismatch, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal numerical fault of the zero oracle. Never expected for guarded inputs.
class OracleFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxDegree = 10000;
inline constexpr double kMaxParameter = 1e4;
/// Parameters this close to the lower domain boundary are accepted but flagged.
inline constexpr double kBoundaryFlag = 1e-6;

namespace detail {

inline std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename Scalar>
void require_parameter(const char* name, Scalar value, Scalar lower) {
  if (!std::isfinite(static_cast<double>(value))) {
    throw ParameterDomainError(std::string(name) + " must be finite");
  }
  if (!(value > lower)) {
    throw ParameterDomainError(std::string(name) + " must exceed " +
                               fmt_real(static_cast<double>(lower)) + " (got " +
                               fmt_real(static_cast<double>(value)) + ")");
  }
  if (std::abs(static_cast<double>(value)) > kMaxParameter) {
    throw ParameterDomainError(std::string(name) + " must satisfy |" + name + "| <= 1e4 (got " +
                               fmt_real(static_cast<double>(value)) + ")");
  }
}

}  // namespace detail

/// Polynomial degree n, 1 <= n <= kMaxDegree.
class Degree {
 public:
  explicit Degree(long n) {
    if (n < 1 || n > kMaxDegree) {
      throw ParameterDomainError("degree n must satisfy 1 <= n <= 10000 (got " + std::to_string(n) +
                                 ")");
    }
    n_ = static_cast<int>(n);
  }

  int value() const noexcept { return n_; }

  friend bool operator==(Degree, Degree) = default;
  friend auto operator<=>(Degree, Degree) = default;

 private:
  int n_;
};

/// Jacobi parameters (alpha, beta), both > -1.
template <typename Scalar = double>
class JacobiParams {
 public:
  using scalar_type = Scalar;

  JacobiParams(Scalar alpha, Scalar beta) : alpha_(alpha), beta_(beta) {
    detail::require_parameter("alpha", alpha_, Scalar(-1));
    detail::require_parameter("beta", beta_, Scalar(-1));
  }

  Scalar alpha() const noexcept { return alpha_; }
  Scalar beta() const noexcept { return beta_; }

  /// Parameters reflected by x -> -x.
  JacobiParams swapped() const { return JacobiParams(beta_, alpha_); }

  bool near_boundary() const noexcept {
    return alpha_ <= Scalar(-1 + kBoundaryFlag) || beta_ <= Scalar(-1 + kBoundaryFlag);
  }

  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;

 private:
  Scalar alpha_;
  Scalar beta_;
};

/// Gegenbauer parameter lambda > -1/2.
template <typename Scalar = double>
class GegenbauerParams {
 public:
  using scalar_type = Scalar;

  explicit GegenbauerParams(Scalar lambda) : lambda_(lambda) {
    detail::require_parameter("lambda", lambda_, Scalar(-0.5));
  }

  Scalar lambda() const noexcept { return lambda_; }

  bool near_boundary() const noexcept { return lambda_ <= Scalar(-0.5 + kBoundaryFlag); }

  friend bool operator==(const GegenbauerParams&, const GegenbauerParams&) = default;

 private:
  Scalar lambda_;
};

}  // namespace jzb

#endif  // JZB_PARAMS_HPP
