#pragma once

#include <cstdint>
#include <random>

#include "khs/diagram.hpp"

namespace khs {

// Random braid closures for the property suites: uniform letters over
// +-1..+-(strands-1), resampled until the closure is a knot.
class KnotSampler {
 public:
  explicit KnotSampler(uint64_t seed, int max_strands = 4, int max_length = 8)
      : rng_(seed), max_strands_(max_strands), max_length_(max_length) {}

  BraidWord next_word(bool positive_only = false);
  PlanarDiagram next_knot(bool positive_only = false);
  // A knot together with the knot obtained by switching one positive
  // crossing to negative (K+ first, K- second).
  std::pair<PlanarDiagram, PlanarDiagram> next_crossing_change_pair();

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int max_strands_;
  int max_length_;
};

}  // namespace khs
