#include "fibcensus/emit.hpp"

#include <cstdio>
#include <sstream>

namespace fibcensus {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << csv_escape(cells[i]);
    }
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string to_aligned(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], cells[i].size());
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << "  ";
      os << cells[i];
      if (i + 1 < cells.size())
        os << std::string(width[i] - cells[i].size(), ' ');
    }
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string render(const Table& t, OutputFormat f) {
  return f == OutputFormat::csv ? to_csv(t) : to_aligned(t);
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    any = true;
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_interval(double lo, double hi) {
  return format_double(lo) + ".." + format_double(hi);
}

Table census_table(const CensusResult& r) {
  Table t;
  t.header = {"genus", "count_raw", "count_orbits", "undecided", "upper_bound"};
  for (const GenusRow& row : r.rows)
    t.rows.push_back({std::to_string(row.g), std::to_string(row.included.size()),
                      std::to_string(row.orbits), std::to_string(row.undecided.size()),
                      std::to_string(row.upper_bound)});
  return t;
}

namespace {

void detail_row(Table& t, Coord g, const FiberRecord& rec, const char* disposition) {
  if (rec.status.empty()) {
    t.rows.push_back({std::to_string(g), to_string(rec.cls), std::to_string(rec.norm),
                      std::to_string(rec.genus),
                      format_interval(rec.lambda.lo_double(), rec.lambda.hi_double()),
                      format_interval(rec.normalized.lo, rec.normalized.hi), disposition});
  } else {
    t.rows.push_back({std::to_string(g), to_string(rec.cls), std::to_string(rec.norm),
                      std::to_string(rec.genus), "", "", "error: " + rec.status});
  }
}

}  // namespace

Table census_detail_table(const CensusResult& r) {
  Table t;
  t.header = {"genus", "class", "norm", "fiber_genus", "lambda", "normalized", "disposition"};
  for (const GenusRow& row : r.rows) {
    for (const FiberRecord& rec : row.included) detail_row(t, row.g, rec, "included");
    for (const FiberRecord& rec : row.undecided) detail_row(t, row.g, rec, "undecided");
    for (const FiberRecord& rec : row.failed) detail_row(t, row.g, rec, "failed");
  }
  return t;
}

Table count_table(const std::vector<CountReport>& rows) {
  Table t;
  t.header = {"g", "total", "primitive_exact", "primitive_ie", "lower_bound"};
  for (const CountReport& r : rows)
    t.rows.push_back({std::to_string(r.g), std::to_string(r.total),
                      r.primitive_exact ? std::to_string(*r.primitive_exact) : "",
                      std::to_string(r.primitive_ie),
                      r.lower_bound ? format_double(*r.lower_bound) : ""});
  return t;
}

Table penner_table(const PennerFamily& fam) {
  Table t;
  t.header = {"g", "class", "norm", "lambda", "norm_log_lambda", "status"};
  Coord g = fam.start_genus;
  for (const FiberRecord& rec : fam.records) {
    if (rec.status.empty()) {
      RealInterval nl = scaled_log_interval(rec.lambda, static_cast<double>(rec.norm));
      t.rows.push_back({std::to_string(g), to_string(rec.cls), std::to_string(rec.norm),
                        format_interval(rec.lambda.lo_double(), rec.lambda.hi_double()),
                        format_interval(nl.lo, nl.hi), "ok"});
    } else {
      t.rows.push_back({std::to_string(g), to_string(rec.cls), "", "", "", rec.status});
    }
    ++g;
  }
  return t;
}

}  // namespace fibcensus
