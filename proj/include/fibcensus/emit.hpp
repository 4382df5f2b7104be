#pragma once

#include <string>
#include <vector>

#include "fibcensus/census.hpp"
#include "fibcensus/lattice.hpp"

namespace fibcensus {

enum class OutputFormat { csv, table };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC-4180: fields containing comma, quote, or newline are quoted, with
// embedded quotes doubled.
std::string csv_escape(const std::string& field);
std::string to_csv(const Table& t);
std::string to_aligned(const Table& t);
std::string render(const Table& t, OutputFormat f);

// Minimal RFC-4180 reader used by the round-trip tests.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

std::string format_double(double v);                  // shortest round-trip form
std::string format_interval(double lo, double hi);    // "lo..hi"

Table census_table(const CensusResult& r);
Table census_detail_table(const CensusResult& r);
Table count_table(const std::vector<CountReport>& rows);
Table penner_table(const PennerFamily& fam);

}  // namespace fibcensus
