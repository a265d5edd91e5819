#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "jzb/bounds.hpp"
#include "jzb/certify.hpp"
#include "jzb/polyeval.hpp"
#include "jzb/tabular.hpp"
#include "jzb/zero_oracle.hpp"

#ifndef JZB_VERSION
#define JZB_VERSION "0.0.0"
#endif

namespace jzb::cli {

namespace {

using json = nlohmann::ordered_json;

struct FamilyArgs {
  std::string family;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> lambda;
  long n = 0;
  std::string format = "table";
};

const std::map<std::string, OutputFormat> kFormats{
    {"csv", OutputFormat::csv}, {"json", OutputFormat::json}, {"table", OutputFormat::table}};

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--family", a.family, "Polynomial family")
      ->required()
      ->check(CLI::IsMember({"jacobi", "gegenbauer"}));
  cmd->add_option("--alpha", a.alpha, "Jacobi alpha > -1");
  cmd->add_option("--beta", a.beta, "Jacobi beta > -1");
  cmd->add_option("--lambda", a.lambda, "Gegenbauer lambda > -1/2");
  cmd->add_option("--n", a.n, "Degree, 1 <= n <= 10000")->required();
  cmd->add_option("--format", a.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "table"}));
}

PolyParams<double> family_params(const FamilyArgs& a) {
  if (a.family == "jacobi") {
    if (!a.alpha || !a.beta) throw ArgumentError("--family jacobi needs --alpha and --beta");
    if (a.lambda) throw ArgumentError("--lambda is only valid with --family gegenbauer");
    return JacobiParams<double>(*a.alpha, *a.beta);
  }
  if (!a.lambda) throw ArgumentError("--family gegenbauer needs --lambda");
  if (a.alpha || a.beta) throw ArgumentError("--alpha/--beta are only valid with --family jacobi");
  return GegenbauerParams<double>(*a.lambda);
}

JacobiParams<double> as_jacobi(const PolyParams<double>& p) {
  if (const auto* jp = std::get_if<JacobiParams<double>>(&p)) return *jp;
  return gegenbauer_to_jacobi(std::get<GegenbauerParams<double>>(p));
}

json params_json(const FamilyArgs& a) {
  json m;
  m["tool"] = "jzb";
  m["version"] = JZB_VERSION;
  m["family"] = a.family;
  m["n"] = a.n;
  if (a.alpha) m["alpha"] = *a.alpha;
  if (a.beta) m["beta"] = *a.beta;
  if (a.lambda) m["lambda"] = *a.lambda;
  return m;
}

Cell real_or_empty(double v) {
  if (std::isfinite(v)) return v;
  return std::monostate{};
}

Tabular zeros_table(const FamilyArgs& a) {
  const auto p = family_params(a);
  const Degree n(a.n);
  const auto jp = as_jacobi(p);
  const auto zs = all_zeros(n, jp);
  Tabular t;
  t.columns = {"k", "x", "residual"};
  for (Eigen::Index k = 0; k < zs.zeros.size(); ++k) {
    const double x = zs.zeros(k);
    const double r = std::abs(detail::newton_ratio(n.value(), jp.alpha(), jp.beta(), x));
    t.rows.push_back({std::int64_t(k + 1), x, r});
  }
  t.meta = params_json(a);
  t.meta["max_residual"] = zs.max_residual;
  t.meta["near_boundary"] = zs.near_boundary;
  return t;
}

std::vector<BoundId> resolve_bounds(const std::string& which, Family family) {
  std::vector<BoundId> ids;
  if (which == "all") {
    for (const auto& info : kBoundCatalog) {
      if (info.family == family) ids.push_back(info.id);
    }
    return ids;
  }
  const auto id = parse_bound_id(which);
  if (!id) {
    std::string valid;
    for (const auto& info : kBoundCatalog) valid += (valid.empty() ? "" : ", ") + std::string(info.name);
    throw ArgumentError("unknown bound '" + which + "'; valid ids: all, " + valid);
  }
  return {*id};
}

Tabular bounds_table(const FamilyArgs& a, const std::string& which) {
  const auto p = family_params(a);
  const Degree n(a.n);
  const Family family = std::holds_alternative<JacobiParams<double>>(p) ? Family::jacobi
                                                                        : Family::gegenbauer;
  Tabular t;
  t.columns = {"bound", "quantity", "direction", "value", "applicable",
               "zero", "zero_lower", "zero_upper", "note"};
  for (BoundId id : resolve_bounds(which, family)) {
    for (const auto& c : evaluate_bound(id, n, p)) {
      std::vector<Cell> row{std::string(to_string(id)), std::string(to_string(c.quantity)),
                            std::string(to_string(c.direction)), real_or_empty(c.value),
                            c.applicable};
      if (c.applicable) {
        const auto iv = constraint_to_zero_interval(c);
        row.emplace_back(std::string(iv.target == ZeroTarget::largest ? "x_max" : "x_min"));
        row.emplace_back(iv.lower);
        row.emplace_back(iv.upper);
        row.emplace_back(iv.degenerate ? std::string("degenerate interval") : c.note);
      } else {
        row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{}, c.note});
      }
      t.rows.push_back(std::move(row));
    }
  }
  t.meta = params_json(a);
  return t;
}

template <typename T>
std::vector<T> json_list(const json& doc, const char* key) {
  std::vector<T> out;
  if (!doc.contains(key)) return out;
  const auto& v = doc.at(key);
  if (!v.is_array()) throw ArgumentError(std::string("grid file: '") + key + "' must be an array");
  for (const auto& e : v) {
    if constexpr (std::is_integral_v<T>) {
      if (!e.is_number_integer()) {
        throw ArgumentError(std::string("grid file: '") + key + "' entries must be integers");
      }
    } else if (!e.is_number()) {
      throw ArgumentError(std::string("grid file: '") + key + "' entries must be numbers");
    }
    out.push_back(e.get<T>());
  }
  return out;
}

GridSpec read_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open grid file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ArgumentError("grid file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw ArgumentError("grid file must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "alpha" && key != "beta" && key != "lambda") {
      throw ArgumentError("grid file: unknown key '" + key + "'");
    }
  }
  GridSpec g;
  g.n = json_list<int>(doc, "n");
  g.alpha = json_list<double>(doc, "alpha");
  g.beta = json_list<double>(doc, "beta");
  g.lambda = json_list<double>(doc, "lambda");
  if (g.empty()) throw ArgumentError("grid file '" + path + "' describes no grid points");
  g.validate();
  return g;
}

json grid_json(const GridSpec& g, bool is_default) {
  json j;
  j["default"] = is_default;
  j["n"] = g.n;
  j["alpha"] = g.alpha;
  j["beta"] = g.beta;
  j["lambda"] = g.lambda;
  j["jacobi_points"] = g.jacobi_points();
  j["gegenbauer_points"] = g.gegenbauer_points();
  return j;
}

Tabular report_table(const Report& r, bool is_default) {
  Tabular t;
  t.columns = {"family", "bound", "n", "alpha", "beta", "lambda", "quantity", "direction",
               "bound_value", "truth_value", "verdict", "slack", "note"};
  for (const auto& row : r.rows) {
    t.rows.push_back({std::string(to_string(row.family)), std::string(to_string(row.id)),
                      std::int64_t(row.n), row.alpha, row.beta, real_or_empty(row.lambda),
                      std::string(to_string(row.quantity)), std::string(to_string(row.direction)),
                      real_or_empty(row.bound_value), row.truth_value,
                      std::string(to_string(row.verdict)), real_or_empty(row.slack), row.note});
  }
  t.meta["tool"] = "jzb";
  t.meta["version"] = JZB_VERSION;
  t.meta["grid"] = grid_json(r.grid, is_default);
  t.meta["relative_slack"] = kSandwichSlack;
  json summary;
  summary["checked"] = r.summary.checked;
  summary["holds"] = r.summary.holds;
  summary["na"] = r.summary.not_applicable;
  summary["fails"] = r.summary.fails;
  t.extra["summary"] = summary;
  json worst = json::object();
  for (const auto& [name, row] : r.worst) {
    json w;
    w["n"] = row.n;
    w["alpha"] = row.alpha;
    w["beta"] = row.beta;
    if (std::isfinite(row.lambda)) w["lambda"] = row.lambda;
    w["quantity"] = std::string(to_string(row.quantity));
    w["relative_slack"] = row.slack / std::abs(row.truth_value);
    worst[name] = w;
  }
  t.extra["worst"] = worst;
  return t;
}

std::string summary_line(const Summary& s) {
  return "checked=" + std::to_string(s.checked) + " holds=" + std::to_string(s.holds) +
         " na=" + std::to_string(s.not_applicable) + " fails=" + std::to_string(s.fails);
}

Tabular claims_table(const std::vector<ClaimResult>& claims) {
  Tabular t;
  t.columns = {"claim", "measured", "target", "tolerance", "passed", "detail"};
  for (const auto& c : claims) {
    t.rows.push_back({c.name, c.measured, c.target, c.tolerance, c.passed, c.detail});
  }
  return t;
}

template <typename T>
std::vector<T> split_list(const std::string& text, const char* flag) {
  std::vector<T> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    T v{};
    const char* first = item.data();
    const char* last = item.data() + item.size();
    std::size_t used = 0;
    try {
      if constexpr (std::is_integral_v<T>) {
        v = std::stoi(item, &used);
      } else {
        v = std::stod(item, &used);
      }
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (first == last || used != item.size()) {
      throw ArgumentError(std::string(flag) + ": cannot parse '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ArgumentError(std::string(flag) + " must not be empty");
  return out;
}

Tabular comparison_table(const std::vector<int>& ns, const std::vector<double>& lambdas) {
  if (ns.empty()) throw ArgumentError("--n-list must not be empty");
  if (lambdas.empty()) throw ArgumentError("--lambda-list must not be empty");
  std::vector<Degree> degrees;
  std::vector<GegenbauerParams<double>> params;
  for (int n : ns) degrees.emplace_back(n);
  for (double l : lambdas) params.emplace_back(l);

  Tabular t;
  t.columns = {"n", "lambda", "truth_sqgap", "gn15_outer", "dimnik_outer", "thm2_inner",
               "thm3_inner", "ratio_thm3_gn15", "truth_gap", "gn14_inner"};
  const auto value = [](BoundId id, Degree n, const GegenbauerParams<double>& g) -> Cell {
    const auto c = evaluate_bound(id, n, g).front();
    return c.applicable ? Cell(c.value) : Cell(std::monostate{});
  };
  for (const auto& g : params) {
    for (const auto& n : degrees) {
      const double x = extreme_zeros(n, gegenbauer_to_jacobi(g)).largest;
      const auto thm3 = evaluate_bound(BoundId::thm3_inner, n, g).front();
      const auto gn15 = evaluate_bound(BoundId::gn15_outer, n, g).front();
      const Cell ratio = thm3.applicable && gn15.applicable ? Cell(thm3.value / gn15.value)
                                                            : Cell(std::monostate{});
      t.rows.push_back({std::int64_t(n.value()), g.lambda(), (1 - x) * (1 + x),
                        value(BoundId::gn15_outer, n, g), value(BoundId::dimnik_outer, n, g),
                        value(BoundId::thm2_inner, n, g), value(BoundId::thm3_inner, n, g), ratio,
                        1 - x, value(BoundId::gn14_inner, n, g)});
    }
  }
  t.meta["tool"] = "jzb";
  t.meta["version"] = JZB_VERSION;
  t.meta["style"] = "paper";
  t.meta["n"] = ns;
  t.meta["lambda"] = lambdas;
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extreme-zero bounds for Jacobi and Gegenbauer polynomials", "jzb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", JZB_VERSION);

  FamilyArgs zeros_args;
  auto* zeros = app.add_subcommand("zeros", "All zeros of one polynomial, ascending");
  add_family_options(zeros, zeros_args);

  FamilyArgs bounds_args;
  std::string which = "all";
  auto* bounds = app.add_subcommand("bounds", "Evaluate catalogue bounds at one parameter point");
  add_family_options(bounds, bounds_args);
  bounds->add_option("--bound", which, "Bound id or 'all'");

  bool default_grid = false;
  std::string grid_file;
  bool claims = false;
  std::string verify_format = "table";
  unsigned threads = 1;
  auto* verify = app.add_subcommand("verify", "Certify every bound over a parameter grid");
  auto* dg = verify->add_flag("--default-grid", default_grid, "Use the built-in default grid");
  auto* gf = verify->add_option("--grid", grid_file, "JSON grid file {n, alpha, beta, lambda}");
  dg->excludes(gf);
  verify->add_flag("--claims", claims, "Also check the headline numeric claims");
  verify->add_option("--format", verify_format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  verify->add_option("--threads", threads, "Worker threads (output is identical for any value)")
      ->check(CLI::Range(1u, 256u));

  std::string style = "paper";
  std::string n_list = "5,10,20,50";
  std::string lambda_list = "0,1,5";
  std::string table_format = "table";
  auto* table = app.add_subcommand("table", "Gegenbauer bounds side by side with the true gap");
  table->add_option("--style", style, "Table style")->check(CLI::IsMember({"paper"}));
  table->add_option("--n-list", n_list, "Comma-separated degrees");
  table->add_option("--lambda-list", lambda_list, "Comma-separated lambda values");
  table->add_option("--format", table_format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "table"}));

  std::vector<const char*> argv{"jzb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << JZB_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  // Output is buffered so that a usage error never leaves partial output behind.
  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (zeros->parsed()) {
      write(zeros_table(zeros_args), kFormats.at(zeros_args.format), buffer);
    } else if (bounds->parsed()) {
      write(bounds_table(bounds_args, which), kFormats.at(bounds_args.format), buffer);
    } else if (verify->parsed()) {
      if (!default_grid && grid_file.empty()) {
        throw ArgumentError("verify needs --default-grid or --grid FILE");
      }
      const GridSpec grid = default_grid ? GridSpec::default_grid() : read_grid(grid_file);
      const auto report = sweep(grid, {threads, {}});
      const auto format = kFormats.at(verify_format);
      auto t = report_table(report, default_grid);
      std::vector<ClaimResult> claim_results;
      if (claims) {
        claim_results = headline_claims();
        auto arr = json::array();
        for (const auto& c : claim_results) {
          json j;
          j["claim"] = c.name;
          j["description"] = c.description;
          j["measured"] = c.measured;
          j["target"] = c.target;
          j["tolerance"] = c.tolerance;
          j["passed"] = c.passed;
          j["detail"] = c.detail;
          arr.push_back(j);
        }
        t.extra["claims"] = arr;
      }
      write(t, format, buffer);
      const bool claims_ok = std::all_of(claim_results.begin(), claim_results.end(),
                                         [](const ClaimResult& c) { return c.passed; });
      std::ostream& side = format == OutputFormat::table ? static_cast<std::ostream&>(buffer) : err;
      if (claims && format != OutputFormat::json) {
        if (format == OutputFormat::table) buffer << '\n';
        write(claims_table(claim_results), format == OutputFormat::table ? OutputFormat::table
                                                                          : OutputFormat::csv,
              side);
      }
      side << summary_line(report.summary) << '\n';
      code = report.summary.fails == 0 && claims_ok ? kExitOk : kExitFailure;
    } else if (table->parsed()) {
      const auto ns = split_list<int>(n_list, "--n-list");
      const auto lambdas = split_list<double>(lambda_list, "--lambda-list");
      write(comparison_table(ns, lambdas), kFormats.at(table_format), buffer);
    }
  } catch (const ParameterDomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  out << buffer.str();
  return code;
}

}  // namespace jzb::cli
