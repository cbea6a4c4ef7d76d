#pragma once

#include <optional>
#include <string>
#include <vector>

#include "khs/diagram.hpp"

namespace khs {

struct KnotTableEntry {
  std::string name;  // Rolfsen or Knotscape id
  int crossings = 0;
  std::string pd;
  std::optional<std::string> braid;
  std::optional<int> sigma_ref;
  std::optional<int> s_ref;

  PlanarDiagram diagram() const { return parse_pd(pd); }
};

// CSV with header exactly: name,crossings,pd,braid,sigma_ref,s_ref
// Fields containing commas are double-quoted; empty cells mean "absent".
std::vector<KnotTableEntry> load_table(const std::string& path);
void save_table(const std::string& path, const std::vector<KnotTableEntry>& entries);

}  // namespace khs
