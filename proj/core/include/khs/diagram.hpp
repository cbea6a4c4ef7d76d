#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "khs/errors.hpp"

namespace khs {

// One PD crossing X(a,b,c,d): arc labels listed counterclockwise starting
// from the incoming under-strand a. The under-strand runs a -> c; the
// over-strand runs d -> b or b -> d, decided by the component successor
// relation.
struct CrossingPD {
  int32_t a, b, c, d;
  int32_t slot(int i) const { return i == 0 ? a : i == 1 ? b : i == 2 ? c : d; }
};

// Where each end of an arc sits: (crossing, slot) or free (crossingless).
struct ArcEnds {
  int32_t tail_crossing = -1, tail_slot = -1;  // the arc leaves this slot
  int32_t head_crossing = -1, head_slot = -1;  // the arc arrives at this slot
};

// Oriented link diagram. Components are cyclic arc sequences in orientation
// order; crossingless_components counts closed unknotted circles carrying no
// crossings (they have no arcs).
struct PlanarDiagram {
  std::vector<CrossingPD> crossings;
  std::vector<std::vector<int32_t>> components;
  std::vector<int8_t> signs;  // +1 / -1 per crossing
  int n_plus = 0;
  int n_minus = 0;
  int crossingless_components = 0;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int writhe() const { return n_plus - n_minus; }
  int component_count() const {
    return static_cast<int>(components.size()) + crossingless_components;
  }
  bool is_knot() const { return component_count() == 1 && crossingless_components == 0; }
  // A 0-crossing unknot counts as a knot for invariant purposes.
  bool is_knot_like() const {
    return component_count() == 1;
  }

  std::vector<int32_t> arcs() const;  // sorted
  int32_t successor(int32_t arc) const;
  const ArcEnds& ends(int32_t arc) const;

  // Validates the invariants (arc usage, orientation consistency), resolves
  // over-strand directions, and fills signs / n_plus / n_minus.
  void finalize();

 private:
  std::unordered_map<int32_t, int32_t> successor_;
  std::unordered_map<int32_t, ArcEnds> ends_;
  friend PlanarDiagram mirror(const PlanarDiagram&);
};

// Text grammar: whitespace-separated X(a,b,c,d) tokens, optional suffix
// "| components: (1 2 3)(4 5)"; an empty group () declares a crossingless
// unknot component. The empty string parses to the crossingless unknot.
// Without explicit components the diagram must be a knot with arcs 1..2n and
// successor i -> i+1 (mod 2n).
PlanarDiagram parse_pd(const std::string& text);
std::string to_pd_string(const PlanarDiagram& d);

struct BraidWord {
  int strands = 0;
  std::vector<int32_t> letters;  // i or -i, 1 <= i < strands
};

// "strands=3 1 -2 1 -2"
BraidWord parse_braid(const std::string& text);
std::string to_braid_string(const BraidWord& w);

// Closure of the braid; positive letters produce positive crossings.
PlanarDiagram from_braid(const BraidWord& word);

PlanarDiagram mirror(const PlanarDiagram& d);

// Splice D2 into D1 at the given arcs; both inputs must be knots. Result arcs
// are relabeled 1..2(n1+n2) in traversal order.
PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2, int32_t arc1,
                            int32_t arc2);

// Relabels arcs 1..N in traversal order (components ordered by smallest
// original arc label, starting each at its smallest arc). Deterministic.
// arc_map, when given, receives old label -> new label.
PlanarDiagram relabel_canonical(const PlanarDiagram& d,
                                std::unordered_map<int32_t, int32_t>* arc_map = nullptr);

}  // namespace khs
