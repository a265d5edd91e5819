#ifndef JZB_TABULAR_HPP
#define JZB_TABULAR_HPP

// Uniform row/column output for the command-line front end.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace jzb {

enum class OutputFormat { csv, json, table };

/// monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, std::string, double, std::int64_t, bool>;

struct Tabular {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  /// Extra top-level members of the JSON document (e.g. "summary", "claims").
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

/// %.17g, the round-trip representation used for every real in CSV and table output.
std::string format_real(double v);

/// RFC-4180 field quoting.
std::string csv_field(const std::string& s);

void write_csv(const Tabular& t, std::ostream& out);
void write_json(const Tabular& t, std::ostream& out);
void write_table(const Tabular& t, std::ostream& out);
void write(const Tabular& t, OutputFormat format, std::ostream& out);

}  // namespace jzb

#endif  // JZB_TABULAR_HPP
