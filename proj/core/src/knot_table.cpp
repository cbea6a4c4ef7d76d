#include "khs/knot_table.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace khs {

namespace {

std::vector<std::string> split_csv_line(const std::string& line, int lineno) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); i++) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          i++;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c == '\r') {
      // tolerate CRLF
    } else {
      cur += c;
    }
  }
  if (quoted) fail(errc::bad_row, "line " + std::to_string(lineno) + ": unclosed quote");
  out.push_back(cur);
  return out;
}

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::vector<KnotTableEntry> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::file_unreadable, "cannot open " + path);

  std::vector<KnotTableEntry> entries;
  std::set<std::string> names;
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    lineno++;
    if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
    auto cells = split_csv_line(line, lineno);
    if (!saw_header) {
      if (cells != std::vector<std::string>{"name", "crossings", "pd", "braid", "sigma_ref",
                                            "s_ref"})
        fail(errc::bad_row, "line " + std::to_string(lineno) + ": bad header");
      saw_header = true;
      continue;
    }
    if (cells.size() != 6)
      fail(errc::bad_row, "line " + std::to_string(lineno) + ": expected 6 cells, got " +
                              std::to_string(cells.size()));
    KnotTableEntry e;
    e.name = cells[0];
    if (e.name.empty()) fail(errc::bad_row, "line " + std::to_string(lineno) + ": empty name");
    if (!names.insert(e.name).second)
      fail(errc::duplicate_name, "line " + std::to_string(lineno) + ": duplicate " + e.name);
    try {
      e.crossings = std::stoi(cells[1]);
    } catch (...) {
      fail(errc::bad_row, "line " + std::to_string(lineno) + ": bad crossing count");
    }
    e.pd = cells[2];
    if (!cells[3].empty()) e.braid = cells[3];
    try {
      if (!cells[4].empty()) e.sigma_ref = std::stoi(cells[4]);
      if (!cells[5].empty()) e.s_ref = std::stoi(cells[5]);
    } catch (...) {
      fail(errc::bad_row, "line " + std::to_string(lineno) + ": bad reference value");
    }
    // validate the diagram now so bad rows are caught at load time
    try {
      PlanarDiagram d = parse_pd(e.pd);
      if (d.component_count() != 1)
        fail(errc::bad_row, "line " + std::to_string(lineno) + ": pd is not a knot");
    } catch (const error& err) {
      if (err.kind() == errc::bad_row) throw;
      fail(errc::bad_row,
           "line " + std::to_string(lineno) + ": pd does not parse (" + err.what() + ")");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

void save_table(const std::string& path, const std::vector<KnotTableEntry>& entries) {
  std::ofstream out(path);
  if (!out) fail(errc::file_unreadable, "cannot write " + path);
  out << "name,crossings,pd,braid,sigma_ref,s_ref\n";
  for (const auto& e : entries) {
    out << quote_csv(e.name) << "," << e.crossings << "," << quote_csv(e.pd) << ","
        << quote_csv(e.braid.value_or("")) << ",";
    if (e.sigma_ref) out << *e.sigma_ref;
    out << ",";
    if (e.s_ref) out << *e.s_ref;
    out << "\n";
  }
}

}  // namespace khs
