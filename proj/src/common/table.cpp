#include "common/table.hpp"

#include <cstdio>

namespace qclab {

namespace {
std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

std::string table_to_csv(const Table& t) {
  std::string out;
  for (const auto& m : t.meta) {
    out += "# ";
    out += m;
    out += '\n';
  }
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  const std::size_t nc = t.columns.size();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < nc; ++c) {
      if (c) out += ',';
      out += fmt_double(t.at(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string table_to_json(const Table& t) {
  std::string out = "{\n  \"meta\": [";
  for (std::size_t i = 0; i < t.meta.size(); ++i) {
    if (i) out += ", ";
    out += '"';
    for (char ch : t.meta[i]) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    out += '"';
  }
  out += "],\n  \"columns\": [";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ", ";
    out += '"' + t.columns[i] + '"';
  }
  out += "],\n  \"rows\": [\n";
  const std::size_t nc = t.columns.size();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    out += "    [";
    for (std::size_t c = 0; c < nc; ++c) {
      if (c) out += ", ";
      out += fmt_double(t.at(r, c));
    }
    out += r + 1 < t.rows() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace qclab
