#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "khs/diagram.hpp"
#include "khs/resolution.hpp"
#include "khs/sparse.hpp"

namespace khs {

enum class Theory : uint8_t { khovanov, lee };

// Local TQFT maps. Labels: 0 = v-, 1 = v+. Returned as (labels..., coeff)
// terms; coefficients in the v-basis are all 1.
enum class TqftKind : uint8_t { merge, split, birth, death };
struct TqftTerm {
  std::vector<int> labels;
  Rational coeff;
};
std::vector<TqftTerm> tqft_maps(Theory theory, TqftKind kind, const std::vector<int>& in);

// A state: resolution vertex plus one label bit per circle (bit i = circle i
// carries v+). Basis order within a homological degree: vertex ascending,
// then label words lexicographic with v- < v+ and circle 0 compared first.
struct StateBasis {
  struct Elem {
    uint32_t vertex;
    uint32_t labels;
    int32_t q;
  };
  std::vector<Elem> elems;
  std::unordered_map<uint64_t, int32_t> index;

  int32_t size() const { return static_cast<int32_t>(elems.size()); }
  int32_t find(uint32_t vertex, uint32_t labels) const {
    auto it = index.find((static_cast<uint64_t>(vertex) << 32) | labels);
    return it == index.end() ? -1 : it->second;
  }
};

struct ColumnEntry {
  int32_t row;
  int8_t coeff;
};

// The Khovanov or Lee complex of a diagram: per-weight state bases and sparse
// differentials d[w]: weight w -> w+1. Homological degree of weight w is
// w - n_minus; the q-grading of every stored element is on the basis.
struct GradedComplex {
  Theory theory = Theory::khovanov;
  int k = 0;
  int n_plus = 0;
  int n_minus = 0;
  int n_components = 0;
  std::vector<StateBasis> basis;                          // size k+1
  std::vector<std::vector<std::vector<ColumnEntry>>> diff;  // size k (maps w -> w+1)

  int degree_of_weight(int w) const { return w - n_minus; }
  int min_degree() const { return -n_minus; }
  int max_degree() const { return k - n_minus; }
  int64_t total_dim() const;
  SparseMatrixQ diff_matrix(int w) const;  // zero-size safe at w = k
};

// An element supported in a single homological degree (weight w).
struct Chain {
  int w = 0;
  SparseVectorQ v;
};

inline constexpr int64_t kDefaultDimensionCap = 50'000'000;

GradedComplex build_complex(const PlanarDiagram& d, Theory theory,
                            int64_t cap = kDefaultDimensionCap);

Chain apply_differential(const GradedComplex& c, const Chain& x);

// Debug dump, one line per nonzero entry: i q_src q_dst coeff row col
void dump_complex(const GradedComplex& c, std::ostream& out);

// label-word enumeration helper: word index -> label mask for `circles` bits
uint32_t word_to_mask(uint32_t word, int circles);

}  // namespace khs
