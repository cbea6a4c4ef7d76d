#pragma once

#include <cstdint>
#include <vector>

#include "khs/diagram.hpp"

namespace khs {

// A fully resolved diagram: circles of one vertex of the cube. Circles are
// indexed 0..count-1 ordered by smallest arc label; crossingless components
// of the underlying diagram come after all arc-circles, in declaration order.
struct ResolvedDiagram {
  uint32_t vertex = 0;
  int circle_count = 0;
  std::vector<int32_t> circle_of_arc;  // dense arc index -> circle id
};

enum class EdgeKind : uint8_t { merge, split };

// Cube edge from `from` (bit 0 at `changed`) to from | 1<<changed. The sign
// (-1)^{s(e)} uses s(e) = number of 1-bits strictly before `changed`.
struct CubeEdge {
  uint32_t from = 0;
  int changed = -1;
  EdgeKind kind = EdgeKind::merge;
  int32_t src_a = -1, src_b = -1;  // merge: circles joined (a<b); split: src_a only
  int32_t dst_a = -1, dst_b = -1;  // merge: dst_a only; split: circles created (a<b)
  // bystander circle map: src circle -> dst circle for circles not involved
  std::vector<int32_t> circle_map;
  int8_t sign = 1;
};

// Precomputed arc indexing shared by all vertices of one diagram.
class CubeContext {
 public:
  explicit CubeContext(const PlanarDiagram& d);

  const PlanarDiagram& diagram() const { return *diagram_; }
  int crossing_count() const { return k_; }
  int arc_count() const { return static_cast<int>(arc_index_.size()); }
  int32_t arc_index(int32_t arc) const;

  // Circles of the resolution at `bits` (0-smoothing pairs (a,d),(b,c);
  // 1-smoothing pairs (a,b),(c,d)).
  ResolvedDiagram resolve(uint32_t bits) const;
  // Edge data between already-resolved source and its neighbor at `changed`.
  CubeEdge edge(const ResolvedDiagram& src, const ResolvedDiagram& dst, int changed) const;

 private:
  const PlanarDiagram* diagram_;
  int k_;
  std::vector<int32_t> arc_labels_;                 // sorted
  std::vector<std::array<int32_t, 4>> slot_index_;  // per crossing: dense arc ids of a,b,c,d
};

ResolvedDiagram resolve(const PlanarDiagram& d, uint32_t bits, int expected_len);
// Vertex whose resolution is the oriented (Seifert) smoothing at every
// crossing: bit 0 at positive crossings, 1 at negative ones.
uint32_t oriented_resolution(const PlanarDiagram& d);
std::vector<CubeEdge> edges(const PlanarDiagram& d);

}  // namespace khs
