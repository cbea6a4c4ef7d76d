#include "khs/resolution.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace khs {

namespace {

struct UnionFind {
  std::vector<int32_t> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int32_t find(int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

CubeContext::CubeContext(const PlanarDiagram& d) : diagram_(&d), k_(d.crossing_count()) {
  arc_labels_ = d.arcs();
  slot_index_.resize(k_);
  for (int i = 0; i < k_; i++) {
    const auto& x = d.crossings[i];
    for (int s = 0; s < 4; s++) slot_index_[i][s] = arc_index(x.slot(s));
  }
}

int32_t CubeContext::arc_index(int32_t arc) const {
  auto it = std::lower_bound(arc_labels_.begin(), arc_labels_.end(), arc);
  if (it == arc_labels_.end() || *it != arc) fail(errc::internal, "arc not in diagram");
  return static_cast<int32_t>(it - arc_labels_.begin());
}

ResolvedDiagram CubeContext::resolve(uint32_t bits) const {
  if (k_ < 32 && bits >= (1u << k_)) fail(errc::bit_length_mismatch, "vertex out of range");
  ResolvedDiagram out;
  out.vertex = bits;
  int na = arc_count();
  UnionFind uf(na);
  for (int i = 0; i < k_; i++) {
    const auto& s = slot_index_[i];
    if ((bits >> i) & 1) {
      uf.unite(s[0], s[1]);  // (a,b),(c,d)
      uf.unite(s[2], s[3]);
    } else {
      uf.unite(s[0], s[3]);  // (a,d),(b,c)
      uf.unite(s[1], s[2]);
    }
  }
  // circle ids by smallest arc label: arcs are indexed in sorted label order,
  // so first occurrence order of roots gives the canonical ordering
  out.circle_of_arc.assign(na, -1);
  std::vector<int32_t> root_id(na, -1);
  int next = 0;
  for (int32_t a = 0; a < na; a++) {
    int32_t r = uf.find(a);
    if (root_id[r] < 0) root_id[r] = next++;
    out.circle_of_arc[a] = root_id[r];
  }
  out.circle_count = next + diagram_->crossingless_components;
  return out;
}

CubeEdge CubeContext::edge(const ResolvedDiagram& src, const ResolvedDiagram& dst,
                           int changed) const {
  CubeEdge e;
  e.from = src.vertex;
  e.changed = changed;
  e.sign = (std::popcount(src.vertex & ((1u << changed) - 1)) % 2 == 0) ? 1 : -1;

  const auto& s = slot_index_[changed];
  // source pairs (a,d),(b,c); the saddle joins/splits the circles through them
  int32_t c1 = src.circle_of_arc[s[0]];
  int32_t c2 = src.circle_of_arc[s[1]];
  int32_t t1 = dst.circle_of_arc[s[0]];
  int32_t t2 = dst.circle_of_arc[s[2]];

  int arc_circles_src = src.circle_count - diagram_->crossingless_components;
  int arc_circles_dst = dst.circle_count - diagram_->crossingless_components;

  e.circle_map.assign(src.circle_count, -1);
  if (c1 != c2) {
    e.kind = EdgeKind::merge;
    e.src_a = std::min(c1, c2);
    e.src_b = std::max(c1, c2);
    e.dst_a = t1;
  } else {
    e.kind = EdgeKind::split;
    e.src_a = c1;
    e.dst_a = std::min(t1, t2);
    e.dst_b = std::max(t1, t2);
  }

  // bystanders: match by any shared arc (their arc sets are unchanged)
  std::vector<int32_t> rep(arc_circles_src, -1);
  for (int32_t a = 0; a < static_cast<int32_t>(src.circle_of_arc.size()); a++) {
    int32_t c = src.circle_of_arc[a];
    if (rep[c] < 0) rep[c] = a;
  }
  for (int32_t c = 0; c < arc_circles_src; c++) {
    if (c == e.src_a || c == e.src_b) continue;
    e.circle_map[c] = dst.circle_of_arc[rep[c]];
  }
  // crossingless components occupy the trailing ids on both sides
  for (int i = 0; i < diagram_->crossingless_components; i++)
    e.circle_map[arc_circles_src + i] = arc_circles_dst + i;
  return e;
}

ResolvedDiagram resolve(const PlanarDiagram& d, uint32_t bits, int expected_len) {
  if (expected_len != d.crossing_count())
    fail(errc::bit_length_mismatch, "bit-vector length does not match crossing count");
  CubeContext ctx(d);
  return ctx.resolve(bits);
}

uint32_t oriented_resolution(const PlanarDiagram& d) {
  uint32_t v = 0;
  for (int i = 0; i < d.crossing_count(); i++)
    if (d.signs[i] < 0) v |= 1u << i;
  return v;
}

std::vector<CubeEdge> edges(const PlanarDiagram& d) {
  CubeContext ctx(d);
  int k = d.crossing_count();
  std::vector<CubeEdge> out;
  if (k == 0) return out;
  out.reserve(static_cast<std::size_t>(k) << (k - 1));
  std::vector<ResolvedDiagram> resolved(1u << k);
  for (uint32_t v = 0; v < (1u << k); v++) resolved[v] = ctx.resolve(v);
  for (uint32_t v = 0; v < (1u << k); v++)
    for (int l = 0; l < k; l++)
      if (!((v >> l) & 1)) out.push_back(ctx.edge(resolved[v], resolved[v | (1u << l)], l));
  return out;
}

}  // namespace khs
