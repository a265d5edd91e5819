#ifndef JZB_CERTIFY_HPP
#define JZB_CERTIFY_HPP

// Numerical certification: every catalogue bound against the zero oracle over
// parameter grids, the intermediate inequalities of the derivative-chain
// argument behind the Gegenbauer inner bounds, and the headline numeric claims.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "jzb/bounds.hpp"
#include "jzb/params.hpp"
#include "jzb/zero_oracle.hpp"

namespace jzb {

/// Relative slack for sandwich checks; strict inequalities are checked non-strictly.
inline constexpr double kSandwichSlack = 1e-11;
/// Relative guard for inequalities in the proof trace.
inline constexpr double kTraceGuard = 1e-10;

enum class Verdict { holds, fails, not_applicable };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

struct CheckResult {
  BoundId id;
  Family family;
  int n;
  double alpha;   // Jacobi alpha, or lambda - 1/2 for the Gegenbauer family
  double beta;
  double lambda;  // NaN for the Jacobi family
  Quantity quantity;
  Direction direction;
  double bound_value;
  double truth_value;
  Verdict verdict;
  /// truth - bound for lower bounds, bound - truth for upper bounds.
  double slack;
  std::string note;
};

/// Sandwich verdict of one constraint against the oracle's extreme zeros.
CheckResult check_constraint(const BoundConstraint<double>& b, const ExtremeZeros<double>& truth);

std::vector<CheckResult> check_bound(BoundId id, Degree n, const PolyParams<double>& p);

struct GridSpec {
  std::vector<int> n;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> lambda;

  static GridSpec default_grid();

  std::size_t jacobi_points() const { return n.size() * alpha.size() * beta.size(); }
  std::size_t gegenbauer_points() const { return n.size() * lambda.size(); }
  bool empty() const { return jacobi_points() + gegenbauer_points() == 0; }

  /// Throws ParameterDomainError / ArgumentError naming the offending value.
  void validate() const;
};

struct Summary {
  std::size_t checked = 0;
  std::size_t holds = 0;
  std::size_t not_applicable = 0;
  std::size_t fails = 0;
};

struct Report {
  GridSpec grid;
  std::vector<CheckResult> rows;
  Summary summary;
  /// Smallest relative slack among applicable rows, per bound name.
  std::map<std::string, CheckResult> worst;
};

struct SweepOptions {
  unsigned threads = 1;
  /// Restrict to these ids; empty means the whole catalogue.
  std::vector<BoundId> bounds;
};

/// Check every (bound, grid point) pair. Row order is deterministic:
/// (family, bound id, n, parameters, quantity, direction).
Report sweep(const GridSpec& grid, const SweepOptions& options = {});

enum class TraceDepth { a_only, a_and_b, full };

struct TraceCheck {
  std::string name;
  double lhs;
  double rhs;
  bool holds;
};

/// Intermediate quantities of the derivative-chain argument at tau = x_{n,n}(lambda).
/// Fields beyond the trace depth are NaN.
struct ProofTrace {
  int n;
  double lambda;
  TraceDepth depth;
  double tau;
  double u;
  double A;
  double B;
  double K;
  double L;
  double M;
  double C;
  double Delta;
  double DeltaTilde;
  double DeltaRefined;
  double D;
  double u1;
  double u2;
  /// y^{(q+2)}(tau) y^{(q+1)}(tau) for q = 0 .. min(3, n-2).
  std::vector<double> sign_products;
  std::vector<TraceCheck> checks;

  bool all_hold() const;
};

/// Requires n >= 2; A only for n in {2,3}, A and B for n = 4, everything for n >= 5.
ProofTrace proof_trace(Degree n, const GegenbauerParams<double>& g);

struct ClaimResult {
  std::string name;
  std::string description;
  double measured;
  double target;
  double tolerance;
  bool passed;
  std::string detail;
};

std::vector<ClaimResult> headline_claims();

/// Grid used by the uniform-ratio claim: n = 5..200, lambda in {-0.49, 0, 0.5, 1, 5, 10, 100}.
GridSpec ratio_claim_grid();

/// max THM3_INNER / GN15_OUTER over a Gegenbauer grid, with its location.
struct RatioMax {
  double value;
  int n;
  double lambda;
};
RatioMax max_thm3_gn15_ratio(const GridSpec& grid);

}  // namespace jzb

#endif  // JZB_CERTIFY_HPP
