#include "khs/complex.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

namespace khs {

std::vector<TqftTerm> tqft_maps(Theory theory, TqftKind kind, const std::vector<int>& in) {
  bool lee = theory == Theory::lee;
  switch (kind) {
    case TqftKind::merge: {
      if (in.size() != 2) fail(errc::arity_mismatch, "merge takes two labels");
      int x = in[0], y = in[1];
      if (x == 1 && y == 1) return {{{1}, Rational(1)}};
      if (x != y) return {{{0}, Rational(1)}};
      // v- v-
      if (lee) return {{{1}, Rational(1)}};
      return {};
    }
    case TqftKind::split: {
      if (in.size() != 1) fail(errc::arity_mismatch, "split takes one label");
      if (in[0] == 1) return {{{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}};
      if (lee) return {{{0, 0}, Rational(1)}, {{1, 1}, Rational(1)}};
      return {{{0, 0}, Rational(1)}};
    }
    case TqftKind::birth:
      if (!in.empty()) fail(errc::arity_mismatch, "birth takes no labels");
      return {{{1}, Rational(1)}};  // iota(1) = v+
    case TqftKind::death:
      if (in.size() != 1) fail(errc::arity_mismatch, "death takes one label");
      if (in[0] == 0) return {{{}, Rational(1)}};  // eps(v-) = 1
      return {};                                   // eps(v+) = 0
  }
  fail(errc::internal, "unreachable");
}

uint32_t word_to_mask(uint32_t word, int circles) {
  // word bit (circles-1-i) drives circle i, so words enumerate label
  // sequences lexicographically with circle 0 compared first
  uint32_t mask = 0;
  for (int i = 0; i < circles; i++)
    if ((word >> (circles - 1 - i)) & 1) mask |= 1u << i;
  return mask;
}

int64_t GradedComplex::total_dim() const {
  int64_t n = 0;
  for (const auto& b : basis) n += b.size();
  return n;
}

SparseMatrixQ GradedComplex::diff_matrix(int w) const {
  int32_t cols = (w >= 0 && w <= k) ? basis[w].size() : 0;
  int32_t rows = (w + 1 >= 0 && w + 1 <= k) ? basis[w + 1].size() : 0;
  SparseMatrixQ m(rows, cols);
  if (w < 0 || w >= k) return m;
  for (int32_t c = 0; c < cols; c++) {
    auto& col = m.columns[c];
    col.reserve(diff[w][c].size());
    for (const auto& e : diff[w][c]) col.push_back({e.row, Rational(e.coeff)});
    std::sort(col.begin(), col.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return m;
}

GradedComplex build_complex(const PlanarDiagram& d, Theory theory, int64_t cap) {
  GradedComplex c;
  c.theory = theory;
  c.k = d.crossing_count();
  c.n_plus = d.n_plus;
  c.n_minus = d.n_minus;
  c.n_components = d.component_count();
  c.basis.resize(c.k + 1);
  c.diff.resize(std::max(c.k, 0));

  CubeContext ctx(d);
  const int k = c.k;
  const bool lee = theory == Theory::lee;

  // vertices grouped by weight, ascending within each weight
  std::vector<std::vector<uint32_t>> by_weight(k + 1);
  for (uint32_t v = 0; v < (1u << k); v++) by_weight[std::popcount(v)].push_back(v);

  std::vector<ResolvedDiagram> layer, next_layer;
  std::unordered_map<uint32_t, int32_t> layer_pos, next_pos;

  auto resolve_layer = [&](int w, std::vector<ResolvedDiagram>& out,
                           std::unordered_map<uint32_t, int32_t>& pos) {
    out.clear();
    pos.clear();
    for (uint32_t v : by_weight[w]) {
      pos[v] = static_cast<int32_t>(out.size());
      out.push_back(ctx.resolve(v));
    }
  };

  int64_t total = 0;
  auto build_basis = [&](int w, const std::vector<ResolvedDiagram>& resolved) {
    StateBasis& b = c.basis[w];
    int gr = w - c.n_minus;
    for (const auto& r : resolved) {
      int circles = r.circle_count;
      int64_t count = int64_t{1} << circles;
      total += count;
      if (total > cap)
        fail(errc::dimension_cap_exceeded,
             "state basis exceeds cap (estimated >= " + std::to_string(total) + ")");
      for (uint32_t word = 0; word < (1u << circles); word++) {
        uint32_t mask = word_to_mask(word, circles);
        int p = 2 * std::popcount(mask) - circles;
        int32_t q = p + gr + c.n_plus - c.n_minus;
        b.index[(static_cast<uint64_t>(r.vertex) << 32) | mask] = b.size();
        b.elems.push_back({r.vertex, mask, q});
      }
    }
  };

  resolve_layer(0, layer, layer_pos);
  build_basis(0, layer);

  for (int w = 0; w < k; w++) {
    resolve_layer(w + 1, next_layer, next_pos);
    build_basis(w + 1, next_layer);

    auto& dmat = c.diff[w];
    dmat.resize(c.basis[w].size());
    const StateBasis& tgt = c.basis[w + 1];

    for (const auto& src : layer) {
      int circles = src.circle_count;
      int32_t base_col = c.basis[w].find(src.vertex, word_to_mask(0, circles));
      // collect edge plans out of this vertex
      for (int l = 0; l < k; l++) {
        if ((src.vertex >> l) & 1) continue;
        const ResolvedDiagram& dst = next_layer[next_pos.at(src.vertex | (1u << l))];
        CubeEdge e = ctx.edge(src, dst, l);

        for (uint32_t word = 0; word < (1u << circles); word++) {
          uint32_t mask = word_to_mask(word, circles);
          int32_t col = c.basis[w].find(src.vertex, mask);

          uint32_t bystander = 0;
          for (int ci = 0; ci < circles; ci++) {
            int32_t m = e.circle_map[ci];
            if (m >= 0 && ((mask >> ci) & 1)) bystander |= 1u << m;
          }
          if (e.kind == EdgeKind::merge) {
            int la = (mask >> e.src_a) & 1;
            int lb = (mask >> e.src_b) & 1;
            int out;
            if (la == 1 && lb == 1)
              out = 1;
            else if (la != lb)
              out = 0;
            else if (lee)
              out = 1;  // m'(v- v-) = v+
            else
              continue;  // m(v- v-) = 0
            uint32_t tmask = bystander | (static_cast<uint32_t>(out) << e.dst_a);
            int32_t row = tgt.find(dst.vertex, tmask);
            dmat[col].push_back({row, e.sign});
          } else {
            int la = (mask >> e.src_a) & 1;
            if (la == 1) {
              // v+ -> v+ v- + v- v+
              int32_t r1 = tgt.find(dst.vertex, bystander | (1u << e.dst_a));
              int32_t r2 = tgt.find(dst.vertex, bystander | (1u << e.dst_b));
              dmat[col].push_back({r1, e.sign});
              dmat[col].push_back({r2, e.sign});
            } else {
              int32_t r1 = tgt.find(dst.vertex, bystander);
              dmat[col].push_back({r1, e.sign});
              if (lee) {
                // Delta'(v-) also has v+ v+
                int32_t r2 =
                    tgt.find(dst.vertex, bystander | (1u << e.dst_a) | (1u << e.dst_b));
                dmat[col].push_back({r2, e.sign});
              }
            }
          }
        }
      }
      (void)base_col;
    }
    for (auto& col : c.diff[w])
      std::sort(col.begin(), col.end(),
                [](const ColumnEntry& x, const ColumnEntry& y) { return x.row < y.row; });

    layer.swap(next_layer);
    layer_pos.swap(next_pos);
  }
  return c;
}

Chain apply_differential(const GradedComplex& c, const Chain& x) {
  if (x.w < 0 || x.w > c.k) fail(errc::degree_mixed, "chain weight out of range");
  Chain out;
  out.w = x.w + 1;
  if (x.w == c.k) return out;  // top degree maps to zero
  SparseVectorQ acc;
  for (const auto& [col, coeff] : x.v) {
    if (col < 0 || col >= c.basis[x.w].size())
      fail(errc::degree_mixed, "chain entry outside its degree basis");
    for (const auto& e : c.diff[x.w][col]) {
      // accumulate; columns are small so linear insertion is fine
      axpy(acc, coeff * Rational(e.coeff), SparseVectorQ{{e.row, Rational(1)}});
    }
  }
  out.v = std::move(acc);
  return out;
}

void dump_complex(const GradedComplex& c, std::ostream& out) {
  for (int w = 0; w < c.k; w++) {
    int i = c.degree_of_weight(w);
    for (std::size_t col = 0; col < c.diff[w].size(); col++) {
      for (const auto& e : c.diff[w][col]) {
        out << i << " " << c.basis[w].elems[col].q << " " << c.basis[w + 1].elems[e.row].q
            << " " << static_cast<int>(e.coeff) << " " << e.row << " " << col << "\n";
      }
    }
  }
}

}  // namespace khs
