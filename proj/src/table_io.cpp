#include "htau/table_io.hpp"

#include "json.hpp"

#include "htau/characters.hpp"
#include "htau/errors.hpp"

namespace htau {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void csv_line(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(cells[i]);
  }
  out += '\n';
}

} // namespace

std::string emit_table(const Table& table, TableFormat format) {
  if (format == TableFormat::csv) {
    std::string out;
    csv_line(out, table.header);
    for (const auto& row : table.rows) csv_line(out, row);
    return out;
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.header.size() && i < row.size(); ++i) obj[table.header[i]] = row[i];
    arr.push_back(std::move(obj));
  }
  return arr.dump(1) + "\n";
}

Table tau_rows(const TauTable& table) {
  Table t{{"mu", "nu", "d", "H"}, {}};
  for (const auto& r : table.rows()) t.rows.push_back({r.mu.str(), r.nu.str(), std::to_string(r.d), r.value.str()});
  return t;
}

Table tau_rows(const SingleTauTable& table) {
  Table t{{"mu", "d", "H"}, {}};
  for (const auto& r : table.rows()) t.rows.push_back({r.mu.str(), std::to_string(r.d), r.value.str()});
  return t;
}

Table character_rows(int n) {
  const auto ct = character_table(n);
  Table t;
  t.header.push_back("lambda");
  for (const auto& mu : ct->partitions()) t.header.push_back(mu.str());
  for (std::size_t lam = 0; lam < ct->size(); ++lam) {
    std::vector<std::string> row{ct->partitions()[lam].str()};
    for (std::size_t mu = 0; mu < ct->size(); ++mu) row.push_back(std::to_string((*ct)(lam, mu)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  throw UsageError("unknown output format '" + name + "' (expected csv or json)");
}

} // namespace htau
