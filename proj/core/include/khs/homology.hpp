#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "khs/complex.hpp"
#include "khs/diagram.hpp"

namespace khs {

// dim over Q of Kh^{i,j}, keyed by (homological degree i, q-grading j).
struct BigradedDims {
  std::map<std::pair<int, int>, int64_t> dims;
  int64_t at(int i, int j) const {
    auto it = dims.find({i, j});
    return it == dims.end() ? 0 : it->second;
  }
  int64_t total() const;
};

// Laurent polynomial in t, q with integer coefficients, keyed by (t-exp, q-exp).
struct Poly2 {
  std::map<std::pair<int, int>, int64_t> coeff;
  bool is_zero() const { return coeff.empty(); }
  void add(int i, int j, int64_t v);
  std::string str() const;  // e.g. "q^-1 + q + t^2 q^5"
};

Poly2 poincare_polynomial(const BigradedDims& dims);

BigradedDims khovanov_homology(const PlanarDiagram& d, int64_t cap = kDefaultDimensionCap);
BigradedDims khovanov_homology(const GradedComplex& c);

// Number of populated diagonals: (max mu - min mu)/2 + 1 over mu = j - 2i.
int width(const BigradedDims& dims);

// Induced filtration on Lee homology: per degree i, dim S_q at each realized
// q (descending). dim S_q is a step function of q, constant between realized
// values and 0 above the largest.
struct FiltrationTable {
  std::map<int, std::vector<std::pair<int, int64_t>>> levels;  // i -> [(q, dim S_q)] desc

  int64_t dim_s(int degree, int q) const;
  int64_t homology_dim(int degree) const;
  int64_t total_rank() const;
};

FiltrationTable lee_filtration(const PlanarDiagram& d, int64_t cap = kDefaultDimensionCap,
                               int threads = 1);
FiltrationTable lee_filtration(const GradedComplex& lee, int threads = 1);

struct SInvariantResult {
  bool has_s = false;  // withheld for links
  int s_min = 0;
  int s_max = 0;
  int s = 0;
  int64_t lee_total_rank = 0;
  std::map<std::pair<int, int>, int64_t> e_infinity;  // (i, q) -> dim S_q - dim S_{q+2}
  FiltrationTable table;
};

SInvariantResult s_invariant(const PlanarDiagram& d, int64_t cap = kDefaultDimensionCap,
                             int threads = 1);

// Attempts P = q^s (q + q^-1) + (1 + t q^4) Q with Q >= 0 coefficientwise.
struct BarNatanResult {
  bool ok = false;
  Poly2 q;
};
BarNatanResult barnatan_decomposition(const BigradedDims& dims, int s);

}  // namespace khs
