#include "jzb/certify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <tuple>

#include "jzb/polyeval.hpp"

namespace jzb {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct PointParams {
  double alpha;
  double beta;
  double lambda;
};

PointParams unpack(const PolyParams<double>& p) {
  if (const auto* jp = std::get_if<JacobiParams<double>>(&p)) {
    return {jp->alpha(), jp->beta(), kNaN};
  }
  const double l = std::get<GegenbauerParams<double>>(p).lambda();
  return {l - 0.5, l - 0.5, l};
}

JacobiParams<double> as_jacobi(const PolyParams<double>& p) {
  if (const auto* jp = std::get_if<JacobiParams<double>>(&p)) return *jp;
  return gegenbauer_to_jacobi(std::get<GegenbauerParams<double>>(p));
}

Family family_of(const PolyParams<double>& p) {
  return std::holds_alternative<JacobiParams<double>>(p) ? Family::jacobi : Family::gegenbauer;
}

// lhs > rhs up to a relative guard on the compared magnitudes.
bool exceeds(double lhs, double rhs) {
  return lhs - rhs > -kTraceGuard * std::max(std::abs(lhs), std::abs(rhs));
}

// L^2 - 4KM with an fma-compensated difference of products.
double discriminant(double L, double K, double M) {
  const double four_k = 4 * K;
  const double w = four_k * M;
  const double e = std::fma(-four_k, M, w);
  const double f = std::fma(L, L, -w);
  return f + e;
}

bool row_less(const CheckResult& a, const CheckResult& b) {
  const auto key = [](const CheckResult& r) {
    const bool jac = r.family == Family::jacobi;
    return std::make_tuple(to_string(r.family), to_string(r.id), r.n, jac ? r.alpha : r.lambda,
                           jac ? r.beta : 0.0, static_cast<int>(r.quantity),
                           static_cast<int>(r.direction));
  };
  return key(a) < key(b);
}

std::vector<BoundId> family_ids(Family f, const std::vector<BoundId>& filter) {
  std::vector<BoundId> ids;
  for (const auto& info : kBoundCatalog) {
    if (info.family != f) continue;
    if (!filter.empty() && std::find(filter.begin(), filter.end(), info.id) == filter.end()) continue;
    ids.push_back(info.id);
  }
  return ids;
}

}  // namespace

CheckResult check_constraint(const BoundConstraint<double>& b, const ExtremeZeros<double>& truth) {
  const auto pp = unpack(b.params);
  CheckResult r{b.id,
                family_of(b.params),
                b.n.value(),
                pp.alpha,
                pp.beta,
                pp.lambda,
                b.quantity,
                b.direction,
                b.value,
                true_gap(b.quantity, truth.smallest, truth.largest),
                Verdict::not_applicable,
                kNaN,
                b.note};
  r.slack = b.direction == Direction::lower ? r.truth_value - r.bound_value
                                            : r.bound_value - r.truth_value;
  if (!b.applicable) return r;
  r.verdict = r.slack >= -kSandwichSlack * std::abs(r.truth_value) ? Verdict::holds : Verdict::fails;
  return r;
}

std::vector<CheckResult> check_bound(BoundId id, Degree n, const PolyParams<double>& p) {
  const auto constraints = evaluate_bound(id, n, p);
  const auto truth = extreme_zeros(n, as_jacobi(p));
  std::vector<CheckResult> out;
  for (const auto& c : constraints) out.push_back(check_constraint(c, truth));
  return out;
}

GridSpec GridSpec::default_grid() {
  GridSpec g;
  for (int n = 1; n <= 20; ++n) g.n.push_back(n);
  g.n.insert(g.n.end(), {50, 100, 200});
  g.alpha = {-0.99, -0.5, 0, 0.5, 1, 2.5, 10, 100};
  g.beta = g.alpha;
  g.lambda = {-0.49, -0.25, 0, 0.5, 1, 2.5, 10, 100};
  return g;
}

void GridSpec::validate() const {
  if (alpha.empty() != beta.empty()) {
    throw ArgumentError("grid: alpha and beta must be given together");
  }
  if (n.empty()) throw ArgumentError("grid: n list is empty");
  if (empty()) throw ArgumentError("grid: no grid points");
  for (int v : n) (void)Degree(v);
  for (double a : alpha) (void)JacobiParams<double>(a, 0.0);
  for (double b : beta) (void)JacobiParams<double>(0.0, b);
  for (double l : lambda) (void)GegenbauerParams<double>(l);
}

Report sweep(const GridSpec& grid, const SweepOptions& options) {
  grid.validate();
  std::vector<PolyParams<double>> params;
  for (double a : grid.alpha) {
    for (double b : grid.beta) params.emplace_back(JacobiParams<double>(a, b));
  }
  for (double l : grid.lambda) params.emplace_back(GegenbauerParams<double>(l));
  struct Point {
    int n;
    const PolyParams<double>* p;
  };
  std::vector<Point> points;
  for (const auto& p : params) {
    for (int n : grid.n) points.push_back({n, &p});
  }
  const auto jacobi_ids = family_ids(Family::jacobi, options.bounds);
  const auto gegenbauer_ids = family_ids(Family::gegenbauer, options.bounds);

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, points.size()));
  std::vector<std::vector<CheckResult>> partial(threads);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < points.size(); i += threads) {
      const auto& pt = points[i];
      try {
        const Degree n(pt.n);
        const auto truth = extreme_zeros(n, as_jacobi(*pt.p));
        const auto& ids = family_of(*pt.p) == Family::jacobi ? jacobi_ids : gegenbauer_ids;
        for (BoundId id : ids) {
          for (const auto& c : evaluate_bound(id, n, *pt.p)) {
            partial[t].push_back(check_constraint(c, truth));
          }
        }
      } catch (const std::exception& e) {
        const auto pp = unpack(*pt.p);
        std::string where = "n=" + std::to_string(pt.n);
        where += family_of(*pt.p) == Family::jacobi
                     ? ", alpha=" + detail::fmt_real(pp.alpha) + ", beta=" + detail::fmt_real(pp.beta)
                     : ", lambda=" + detail::fmt_real(pp.lambda);
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::make_exception_ptr(OracleFault("sweep aborted at " + where + ": " + e.what()));
        }
        return;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  Report report;
  report.grid = grid;
  for (auto& part : partial) {
    report.rows.insert(report.rows.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
  }
  std::sort(report.rows.begin(), report.rows.end(), row_less);
  for (const auto& r : report.rows) {
    ++report.summary.checked;
    switch (r.verdict) {
      case Verdict::holds: ++report.summary.holds; break;
      case Verdict::fails: ++report.summary.fails; break;
      case Verdict::not_applicable: ++report.summary.not_applicable; break;
    }
    if (r.verdict == Verdict::not_applicable) continue;
    const std::string name(to_string(r.id));
    const double rel = r.slack / std::abs(r.truth_value);
    auto it = report.worst.find(name);
    if (it == report.worst.end() || rel < it->second.slack / std::abs(it->second.truth_value)) {
      report.worst.insert_or_assign(name, r);
    }
  }
  return report;
}

bool ProofTrace::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const TraceCheck& c) { return c.holds; });
}

ProofTrace proof_trace(Degree n, const GegenbauerParams<double>& g) {
  const int deg = n.value();
  if (deg < 2) throw ArgumentError("proof_trace requires n >= 2");
  const double l = g.lambda();
  const auto jp = gegenbauer_to_jacobi(g);
  const double tau = extreme_zeros(n, jp).largest;

  ProofTrace t{};
  t.n = deg;
  t.lambda = l;
  t.depth = deg >= 5 ? TraceDepth::full : deg >= 4 ? TraceDepth::a_and_b : TraceDepth::a_only;
  t.tau = tau;
  t.u = (1 - tau) * (1 + tau);
  t.B = t.K = t.L = t.M = t.C = t.Delta = t.DeltaTilde = t.DeltaRefined = t.D = t.u1 = t.u2 = kNaN;
  const double u = t.u;
  const double N = double(deg) * (deg + 2 * l);
  auto check = [&](std::string name, double lhs, double rhs) {
    t.checks.push_back({std::move(name), lhs, rhs, exceeds(lhs, rhs)});
  };

  for (int q = 0; q <= std::min(3, deg - 2); ++q) {
    const double prod =
        eval_jacobi_derivative(n, jp, tau, q + 2) * eval_jacobi_derivative(n, jp, tau, q + 1);
    t.sign_products.push_back(prod);
    t.checks.push_back({"sign_q" + std::to_string(q), prod, 0.0, prod > 0});
  }

  const double a_pos = (2 * l + 1) * (2 * l + 3);
  const double a_neg = (N + (2 * l + 1) * (2 * l + 2)) * u;
  t.A = a_pos - a_neg;
  check("A>0", a_pos, a_neg);
  if (deg < 4) return t;

  const double b_pos = (2 * l + 1) * (2 * l + 5);
  const double b_neg = (2 * N + (2 * l + 1) * (2 * l + 2)) * u;
  t.B = b_pos - b_neg;
  check("B>0", b_pos, b_neg);
  if (deg < 5) return t;

  const double l3 = 2 * l + 3, l5 = 2 * l + 5;
  t.K = N * (N + 12 * l * l + 40 * l + 35) + (2 * l + 1) * (2 * l + 2) * l3 * (2 * l + 4);
  t.L = l3 * l5 * (3 * N + 4 * (l + 2) * (2 * l + 1));
  t.M = (2 * l + 1) * l3 * l5 * (2 * l + 7);
  t.C = t.K * u * u - t.L * u + t.M;
  check("C(u)>0", t.K * u * u + t.M, t.L * u);

  t.Delta = discriminant(t.L, t.K, t.M);
  const double m4 = double(deg - 4) * (deg + 2 * l + 4);
  t.DeltaTilde = 5 * l3 * l3 * l5 * l5 * m4 * m4;
  t.DeltaRefined = (1 + 32 / (5 * l3 * l5)) * t.DeltaTilde;
  check("Delta>DeltaTilde", t.Delta, t.DeltaTilde);
  check("Delta>refined", t.Delta, t.DeltaRefined);

  const double q2 = 20 * l * l + 80 * l + 107;
  t.D = q2 * N * N - 4 * (2 * l + 1) * (20 * l * l + 68 * l + 65) * N +
        24 * (2 * l + 1) * (2 * l + 1) * l3 * (2 * l + 4);
  const double d_scaled = l3 * l5 * t.D;
  t.checks.push_back({"Delta=(2l+3)(2l+5)D", t.Delta, d_scaled,
                      std::abs(t.Delta - d_scaled) <= 1e-9 * std::max(t.Delta, d_scaled)});
  const double shift = N - 8 * (l + 2);
  check("D>bound", t.D, q2 * shift * shift);
  const double bracket = 5 * N * N - 4 * (10 * l + 23) * N - 16 * (2 * l + 1) * (l + 2);
  check("bracket>5(n-4)^2(n+2l+4)^2", bracket, 5 * m4 * m4);

  const double root = std::sqrt(t.Delta);
  t.u1 = 2 * t.M / (t.L + root);
  t.u2 = 2 * t.M / (t.L - root);
  check("u<u1", t.u1, u);
  check("u<u2", t.u2, u);

  const double thm2 = (2 * l + 1) * l5 / (2 * N + (2 * l + 1) * (2 * l + 2));
  const double middle = 2 * (2 * l + 1) * (2 * l + 7) / (3 * N + 4 * (l + 2) * (2 * l + 1));
  check("u<thm2", thm2, u);
  check("thm2<middle", middle, thm2);
  check("middle<u2", t.u2, middle);
  check("u1<=thm3", thm3_inner_value(double(deg), g), t.u1);
  return t;
}

GridSpec ratio_claim_grid() {
  GridSpec g;
  for (int n = 5; n <= 200; ++n) g.n.push_back(n);
  g.lambda = {-0.49, 0, 0.5, 1, 5, 10, 100};
  return g;
}

RatioMax max_thm3_gn15_ratio(const GridSpec& grid) {
  RatioMax best{-std::numeric_limits<double>::infinity(), 0, kNaN};
  for (double l : grid.lambda) {
    const GegenbauerParams<double> g(l);
    for (int n : grid.n) {
      const double r = thm3_inner_value(double(n), g) / gn15_outer_value(double(n), g);
      if (r > best.value) best = {r, n, l};
    }
  }
  return best;
}

std::vector<ClaimResult> headline_claims() {
  std::vector<ClaimResult> out;
  const double big_n = 1e5;

  const auto constant = [&](const char* name, const char* desc, double lambda, double target) {
    const GegenbauerParams<double> g(lambda);
    const double measured = big_n * big_n * thm3_inner_value(big_n, g);
    out.push_back({name, desc, measured, target, 1e-4, std::abs(measured - target) < 1e-4,
                   "n = 100000"});
  };
  const auto limit = [&](const char* name, const char* desc, double lambda, double target) {
    const GegenbauerParams<double> g(lambda);
    const double measured = 2 * (2 * lambda + 1) * (2 * lambda + 7) / c_lambda(g);
    out.push_back({name, desc, measured, target, 1e-4, std::abs(measured - target) < 1e-4,
                   "n -> infinity"});
  };
  constant("chebyshev_t_constant", "n^2 * thm3_inner(n, lambda=0) at n=1e5 vs 2.468774", 0.0,
           2.468774);
  limit("chebyshev_t_limit", "14/c(0), the n -> infinity limit of n^2 * thm3_inner(n, 0)", 0.0,
        2.468774);
  constant("chebyshev_u_constant", "n^2 * thm3_inner(n, lambda=1) at n=1e5 vs 9.941217", 1.0,
           9.941217);
  limit("chebyshev_u_limit", "54/c(1), the n -> infinity limit of n^2 * thm3_inner(n, 1)", 1.0,
        9.941217);

  {
    const auto best = max_thm3_gn15_ratio(ratio_claim_grid());
    const double target = 1.527864;
    out.push_back({"uniform_ratio",
                   "max thm3_inner/gn15_outer over n=5..200, lambda in {-0.49,0,0.5,1,5,10,100}",
                   best.value, target, 1e-9, best.value <= target + 1e-9,
                   "max at n=" + std::to_string(best.n) + ", lambda=" + detail::fmt_real(best.lambda)});
  }

  {
    const auto grid = GridSpec::default_grid();
    std::size_t violations = 0;
    std::string first;
    for (int n : grid.n) {
      for (double a : grid.alpha) {
        for (double b : grid.beta) {
          const JacobiParams<double> p(a, b);
          const auto thm1 = evaluate_bound(BoundId::thm1_outer, Degree(n), p);
          const auto newton = evaluate_bound(BoundId::newton_outer, Degree(n), p);
          for (std::size_t i = 0; i < thm1.size(); ++i) {
            const double t = thm1[i].value, w = newton[i].value;
            const bool ok = n == 1 ? std::abs(t - w) <= 1e-13 * std::abs(t) : t > w;
            if (!ok && violations++ == 0) {
              first = "n=" + std::to_string(n) + ", alpha=" + detail::fmt_real(a) +
                      ", beta=" + detail::fmt_real(b);
            }
          }
        }
      }
    }
    out.push_back({"thm1_dominates_newton",
                   "thm1_outer >= newton_outer on the default Jacobi grid, equality iff n=1",
                   double(violations), 0.0, 0.0, violations == 0,
                   violations == 0 ? "no violations" : "first violation at " + first});
  }

  {
    std::size_t violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (double l : GridSpec::default_grid().lambda) {
      const GegenbauerParams<double> g(l);
      const double thm3_coef = 2 * (2 * l + 1) * (2 * l + 7) / c_lambda(g);
      const double thm2_coef = (2 * l + 1) * (2 * l + 5) / 2;
      worst = std::min(worst, (thm2_coef - thm3_coef) / thm2_coef);
      if (!(thm3_coef <= thm2_coef)) ++violations;
    }
    out.push_back({"thm3_asymptotic_coefficient",
                   "2(2l+1)(2l+7)/c(l) <= (2l+1)(2l+5)/2 on the default lambda grid",
                   double(violations), 0.0, 0.0, violations == 0,
                   "smallest relative margin " + detail::fmt_real(worst)});
  }
  return out;
}

}  // namespace jzb
