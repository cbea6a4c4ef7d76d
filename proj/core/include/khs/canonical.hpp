#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "khs/complex.hpp"
#include "khs/diagram.hpp"

namespace khs {

// Lee's canonical cycle at the oriented resolution. The coloring is a proper
// 2-coloring of the circle adjacency graph (alpha = v- + v+, beta = v- - v+);
// expanded is the cycle written in the v+- state basis of the Lee complex.
struct CanonicalGenerator {
  uint32_t vertex = 0;
  std::vector<int8_t> coloring;  // per circle: 0 = alpha, 1 = beta
  Chain expanded;
};

// The two proper 2-colorings of the oriented resolution's circle adjacency
// graph, expanded over the Lee state basis. First generator colors the circle
// with the smallest arc label alpha. Requires the adjacency graph connected.
std::pair<CanonicalGenerator, CanonicalGenerator> canonical_generators(
    const PlanarDiagram& d, const GradedComplex& lee);

// s([g]) = max{ q : [g] lies in S_q }, computed by membership tests in
// im(d') + F_q for descending q.
int class_filtration_grading(const GradedComplex& lee, const Chain& g);

// Splitting of the Lee complex by q mod 4. part e collects q = n (mod 4),
// part o collects q = n+2 (mod 4), n = number of components.
struct SummandSplit {
  int e_residue = 0;
  bool differential_preserves = false;
  // which part contains s_o + s_obar / s_o - s_obar (0 = e, 1 = o);
  // -1 when canonical generators are unavailable
  int part_of_sum = -1;
  int part_of_difference = -1;
};

SummandSplit summand_split(const PlanarDiagram& d, const GradedComplex& lee);

}  // namespace khs
