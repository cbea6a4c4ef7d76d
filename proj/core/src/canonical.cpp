#include "khs/canonical.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "khs/resolution.hpp"
#include "khs/sparse.hpp"

namespace khs {

namespace {

Chain expand_coloring(const GradedComplex& lee, uint32_t vertex,
                      const std::vector<int8_t>& coloring) {
  int w = std::popcount(vertex);
  uint32_t beta_mask = 0;
  for (std::size_t i = 0; i < coloring.size(); i++)
    if (coloring[i]) beta_mask |= 1u << i;
  Chain out;
  out.w = w;
  int circles = static_cast<int>(coloring.size());
  out.v.reserve(std::size_t{1} << circles);
  for (uint32_t mask = 0; mask < (1u << circles); mask++) {
    int32_t idx = lee.basis[w].find(vertex, mask);
    if (idx < 0) fail(errc::internal, "canonical state missing from basis");
    int sign = std::popcount(mask & beta_mask) % 2 ? -1 : 1;
    out.v.push_back({idx, Rational(sign)});
  }
  std::sort(out.v.begin(), out.v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

std::pair<CanonicalGenerator, CanonicalGenerator> canonical_generators(
    const PlanarDiagram& d, const GradedComplex& lee) {
  if (lee.theory != Theory::lee) fail(errc::internal, "canonical generators need the Lee complex");

  uint32_t vo = oriented_resolution(d);
  CubeContext ctx(d);
  ResolvedDiagram res = ctx.resolve(vo);
  int circles = res.circle_count;

  std::vector<int8_t> coloring(circles, -1);
  if (d.crossing_count() == 0) {
    if (circles != 1)
      fail(errc::disconnected_adjacency,
           "canonical generators need a connected circle adjacency graph");
    coloring[0] = 0;
  } else {
    if (d.crossingless_components > 0)
      fail(errc::disconnected_adjacency, "crossingless components split the adjacency graph");
    // adjacency from shared crossings; oriented smoothing pairs (a,d),(b,c)
    // at positive crossings and (a,b),(c,d) at negative ones
    std::vector<std::pair<int32_t, int32_t>> adj;
    for (int l = 0; l < d.crossing_count(); l++) {
      const auto& x = d.crossings[l];
      int32_t c1 = res.circle_of_arc[ctx.arc_index(x.a)];
      int32_t c2 = ((vo >> l) & 1) ? res.circle_of_arc[ctx.arc_index(x.c)]
                                   : res.circle_of_arc[ctx.arc_index(x.b)];
      if (c1 == c2)
        fail(errc::internal, "oriented resolution has a self-adjacent circle");
      adj.push_back({c1, c2});
    }
    std::vector<std::vector<int32_t>> nbr(circles);
    for (auto [a, b] : adj) {
      nbr[a].push_back(b);
      nbr[b].push_back(a);
    }
    std::deque<int32_t> queue{0};
    coloring[0] = 0;  // circle with the smallest arc label gets alpha
    while (!queue.empty()) {
      int32_t c = queue.front();
      queue.pop_front();
      for (int32_t n : nbr[c]) {
        if (coloring[n] < 0) {
          coloring[n] = 1 - coloring[c];
          queue.push_back(n);
        } else if (coloring[n] == coloring[c]) {
          fail(errc::internal, "circle adjacency graph is not 2-colorable");
        }
      }
    }
    for (int8_t c : coloring)
      if (c < 0)
        fail(errc::disconnected_adjacency,
             "canonical generators need a connected circle adjacency graph");
  }

  CanonicalGenerator g1, g2;
  g1.vertex = g2.vertex = vo;
  g1.coloring = coloring;
  g2.coloring.reserve(coloring.size());
  for (int8_t c : coloring) g2.coloring.push_back(1 - c);
  g1.expanded = expand_coloring(lee, vo, g1.coloring);
  g2.expanded = expand_coloring(lee, vo, g2.coloring);
  return {std::move(g1), std::move(g2)};
}

int class_filtration_grading(const GradedComplex& lee, const Chain& g) {
  Chain dg = apply_differential(lee, g);
  if (!dg.v.empty()) fail(errc::not_a_cycle, "class_filtration_grading needs a d'-cycle");

  const int w = g.w;
  const StateBasis& b = lee.basis[w];
  Eliminator elim(b.size());
  if (w > 0) {
    for (const auto& col : lee.diff[w - 1]) {
      SparseVectorQ v;
      v.reserve(col.size());
      for (const auto& e : col) v.push_back({e.row, Rational(e.coeff)});
      elim.add_column(std::move(v));
    }
  }
  SparseVectorQ residual = g.v;
  elim.reduce(residual);
  if (residual.empty() && !g.v.empty()) {
    // g is a boundary; it lies in S_q for every realized q
  }

  // basis indices by descending q
  std::vector<int32_t> order(b.size());
  for (int32_t i = 0; i < b.size(); i++) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int32_t x, int32_t y) { return b.elems[x].q > b.elems[y].q; });

  int64_t checkpoint = elim.rank();
  std::size_t pos = 0;
  int last_q = 0;
  while (pos < order.size()) {
    int q = b.elems[order[pos]].q;
    while (pos < order.size() && b.elems[order[pos]].q == q) {
      elim.add_column({{order[pos], Rational(1)}});
      pos++;
    }
    elim.reduce_from(residual, checkpoint);
    checkpoint = elim.rank();
    last_q = q;
    if (residual.empty()) return q;
  }
  (void)last_q;
  fail(errc::internal, "cycle not contained in the full filtration");
}

SummandSplit summand_split(const PlanarDiagram& d, const GradedComplex& lee) {
  SummandSplit out;
  int n = d.component_count();
  out.e_residue = ((n % 4) + 4) % 4;

  out.differential_preserves = true;
  for (int w = 0; w < lee.k; w++) {
    for (std::size_t col = 0; col < lee.diff[w].size(); col++) {
      int qs = lee.basis[w].elems[col].q;
      for (const auto& e : lee.diff[w][col]) {
        int qt = lee.basis[w + 1].elems[e.row].q;
        if (((qt - qs) % 4 + 4) % 4 != 0) out.differential_preserves = false;
      }
    }
  }

  auto part_of = [&](int q) { return (((q - out.e_residue) % 4) + 4) % 4 == 0 ? 0 : 1; };

  try {
    auto [g1, g2] = canonical_generators(d, lee);
    SparseVectorQ sum = add(g1.expanded.v, g2.expanded.v);
    SparseVectorQ dif = add(g1.expanded.v, scale(g2.expanded.v, Rational(-1)));
    auto classify = [&](const SparseVectorQ& v) {
      int part = -1;
      for (const auto& [idx, coeff] : v) {
        int p = part_of(lee.basis[g1.expanded.w].elems[idx].q);
        if (part < 0)
          part = p;
        else if (part != p)
          fail(errc::internal, "canonical combination straddles the summands");
      }
      return part;
    };
    out.part_of_sum = classify(sum);
    out.part_of_difference = classify(dif);
  } catch (const error& e) {
    if (e.kind() != errc::disconnected_adjacency) throw;
  }
  return out;
}

}  // namespace khs
