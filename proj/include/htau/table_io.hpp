#pragma once

#include <string>
#include <vector>

#include "htau/tau_series.hpp"

namespace htau {

enum class TableFormat { csv, json };

/// Rows of string cells under a fixed header. Rationals are stored in their
/// "p/q" form, partitions as "[3,1]".
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// CSV (RFC 4180 quoting, "\n" line ends) or a JSON array of objects keyed by
/// the header, all values strings. Output depends only on the table contents.
std::string emit_table(const Table& table, TableFormat format);

Table tau_rows(const TauTable& table);
Table tau_rows(const SingleTauTable& table);

/// Character table of S_n: first column lambda, then one column per mu.
Table character_rows(int n);

TableFormat parse_table_format(const std::string& name);

} // namespace htau
