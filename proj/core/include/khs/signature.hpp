#pragma once

#include <cstdint>
#include <vector>

#include "khs/diagram.hpp"

namespace khs {

// Seifert matrix of the surface from Seifert's algorithm on a closed braid
// (linking numbers of pushed-off band loops). Size = letters - strands + 1
// for a knot closure.
struct SeifertMatrix {
  std::vector<std::vector<int64_t>> v;
  int size() const { return static_cast<int>(v.size()); }
};

SeifertMatrix seifert_matrix(const BraidWord& word);

// Classical signature under the paper's convention (positive trefoil -> +2):
// sigma = -sig(V + V^T) for the braid-closure surface basis used here.
int signature_of(const SeifertMatrix& m);

// |det(V + V^T)| (the knot determinant), for cross-validation of table data.
int64_t determinant_of(const SeifertMatrix& m);

}  // namespace khs
