#include "jzb/tabular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace jzb {

namespace {

std::string render(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  } visitor;
  return std::visit(visitor, c);
}

nlohmann::ordered_json to_json(const Cell& c) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_csv(const Tabular& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(t.columns[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_field(render(row[i]));
    }
    out << '\n';
  }
}

void write_json(const Tabular& t, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["meta"] = t.meta;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = to_json(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  for (const auto& [key, value] : t.extra.items()) doc[key] = value;
  out << doc.dump(2) << '\n';
}

void write_table(const Tabular& t, std::ostream& out) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    auto& rendered = cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      rendered.push_back(render(row[i]));
      width[i] = std::max(width[i], rendered.back().size());
    }
  }
  const auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << "  ";
      out << fields[i];
      if (i + 1 < fields.size()) out << std::string(width[i] - fields[i].size(), ' ');
    }
    out << '\n';
  };
  line(t.columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : cells) line(r);
}

void write(const Tabular& t, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::csv: write_csv(t, out); break;
    case OutputFormat::json: write_json(t, out); break;
    case OutputFormat::table: write_table(t, out); break;
  }
}

}  // namespace jzb
