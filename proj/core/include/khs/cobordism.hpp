#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "khs/canonical.hpp"
#include "khs/complex.hpp"
#include "khs/diagram.hpp"
#include "khs/sparse.hpp"

namespace khs {

// Chain map between Lee complexes. Matrices are indexed by source weight;
// the target weight of mats[w] is w + weight_shift, which keeps homological
// degree fixed (weight_shift = target n_minus - source n_minus).
struct ChainMap {
  std::shared_ptr<const PlanarDiagram> src_diagram, tgt_diagram;
  std::shared_ptr<const GradedComplex> src, tgt;
  int weight_shift = 0;
  int filtered_degree = 0;
  std::vector<SparseMatrixQ> mats;  // size src->k + 1

  Chain apply(const Chain& x) const;
  static ChainMap identity(std::shared_ptr<const PlanarDiagram> d,
                           std::shared_ptr<const GradedComplex> c);
  // g after f (f first). Filtered degrees add.
  static ChainMap compose(const ChainMap& g, const ChainMap& f);
};

// exact verification helpers
bool is_chain_map(const ChainMap& f);
// true when every entry satisfies q(target) - q(source) >= f.filtered_degree
// and the bound is attained somewhere (sharpness not required: set exact=false)
bool respects_filtered_degree(const ChainMap& f);
// induced map on Lee homology is an isomorphism in every degree
bool induces_homology_iso(const ChainMap& f);
// rank of the induced map on total Lee homology
int64_t induced_homology_rank(const ChainMap& f);

enum class MoveKind : uint8_t {
  r1_plus,        // add left curl (positive kink) at an arc
  r1_minus,       // remove a positive kink crossing
  r1p_plus,       // add right curl (negative kink) at an arc, via R2 then R1
  r1p_minus,      // remove a negative kink crossing
  r2_plus,        // poke: push arc m across arc s (m passes over s)
  r2_minus,       // unpoke a bigon given its two crossings
  r3,             // slide across a triangle given its three crossings
  birth,          // new crossingless circle
  death,          // remove a crossingless circle
  saddle,         // oriented saddle between two arcs
};

struct Move {
  MoveKind kind;
  std::vector<int32_t> args;  // arcs / crossings / circle index, per kind
};

struct MoveResult {
  PlanarDiagram after;   // canonically relabeled
  ChainMap map;
  int chi = 0;           // Euler characteristic contribution (birth/death +1? no: see movie)
};

// Applies one move to `d` (with its Lee complex) and returns the new diagram
// plus the chain-level map. PatternMismatch when the local pattern is absent.
MoveResult apply_move(std::shared_ptr<const PlanarDiagram> d,
                      std::shared_ptr<const GradedComplex> lee, const Move& move);

// rho'_1 / rho'_2 / rho'_3 as standalone operations on a diagram
MoveResult reidemeister_map(const PlanarDiagram& d, const Move& move);
MoveResult morse_map(const PlanarDiagram& d, const Move& move);

// lambda with rho'_*[s_o] = lambda [s_otilde], computed pair-symmetrically:
// the image of either canonical class must hit exactly one target class.
Rational check_canonical_transport(const PlanarDiagram& d, const Move& move);

}  // namespace khs
