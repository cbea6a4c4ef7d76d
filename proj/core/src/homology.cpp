#include "khs/homology.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

#include "khs/sparse.hpp"

namespace khs {

int64_t BigradedDims::total() const {
  int64_t n = 0;
  for (const auto& [ij, v] : dims) n += v;
  return n;
}

void Poly2::add(int i, int j, int64_t v) {
  if (v == 0) return;
  auto [it, fresh] = coeff.try_emplace({i, j}, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) coeff.erase(it);
  }
}

std::string Poly2::str() const {
  if (coeff.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [ij, v] : coeff) {
    auto [i, j] = ij;
    if (!first) out << (v >= 0 ? " + " : " - ");
    else if (v < 0) out << "-";
    first = false;
    int64_t a = std::abs(v);
    bool unit = (i == 0 && j == 0);
    if (a != 1 || unit) out << a;
    if (i != 0) out << (a != 1 ? " " : "") << "t" << (i == 1 ? "" : "^" + std::to_string(i));
    if (j != 0) {
      if (a != 1 || i != 0) out << " ";
      out << "q" << (j == 1 ? "" : "^" + std::to_string(j));
    }
  }
  return out.str();
}

Poly2 poincare_polynomial(const BigradedDims& dims) {
  Poly2 p;
  for (const auto& [ij, v] : dims.dims) p.add(ij.first, ij.second, v);
  return p;
}

BigradedDims khovanov_homology(const GradedComplex& c) {
  // d is q-homogeneous, so each (degree, q) block computes independently
  // rank[w][q] = rank of the q-block of d_w
  std::vector<std::map<int, int64_t>> block_rank(c.k + 1);
  for (int w = 0; w < c.k; w++) {
    // group columns by source q; row indices compacted per q
    std::map<int, std::vector<int32_t>> cols_by_q;
    for (int32_t col = 0; col < c.basis[w].size(); col++)
      cols_by_q[c.basis[w].elems[col].q].push_back(col);
    std::map<int, std::unordered_map<int32_t, int32_t>> row_map;
    for (int32_t r = 0; r < c.basis[w + 1].size(); r++) {
      auto& m = row_map[c.basis[w + 1].elems[r].q];
      int32_t id = static_cast<int32_t>(m.size());
      m.emplace(r, id);
    }
    for (auto& [q, cols] : cols_by_q) {
      auto rm = row_map.find(q);
      if (rm == row_map.end()) continue;
      Eliminator elim(static_cast<int32_t>(rm->second.size()));
      for (int32_t col : cols) {
        SparseVectorQ v;
        v.reserve(c.diff[w][col].size());
        for (const auto& e : c.diff[w][col]) v.push_back({rm->second.at(e.row), Rational(e.coeff)});
        std::sort(v.begin(), v.end());
        elim.add_column(std::move(v));
      }
      block_rank[w][q] = elim.rank();
    }
  }

  BigradedDims out;
  for (int w = 0; w <= c.k; w++) {
    std::map<int, int64_t> dim_q;
    for (const auto& e : c.basis[w].elems) dim_q[e.q]++;
    int i = c.degree_of_weight(w);
    for (const auto& [q, n] : dim_q) {
      int64_t rk = block_rank[w].count(q) ? block_rank[w][q] : 0;
      int64_t rk_prev = 0;
      if (w > 0 && block_rank[w - 1].count(q)) rk_prev = block_rank[w - 1][q];
      int64_t h = n - rk - rk_prev;
      if (h != 0) out.dims[{i, q}] = h;
    }
  }
  return out;
}

BigradedDims khovanov_homology(const PlanarDiagram& d, int64_t cap) {
  return khovanov_homology(build_complex(d, Theory::khovanov, cap));
}

int width(const BigradedDims& dims) {
  if (dims.dims.empty()) fail(errc::empty_homology, "width of empty homology");
  int mn = 0, mx = 0;
  bool first = true;
  for (const auto& [ij, v] : dims.dims) {
    int mu = ij.second - 2 * ij.first;
    if (first) {
      mn = mx = mu;
      first = false;
    } else {
      mn = std::min(mn, mu);
      mx = std::max(mx, mu);
    }
  }
  return (mx - mn) / 2 + 1;
}

int64_t FiltrationTable::dim_s(int degree, int q) const {
  auto it = levels.find(degree);
  if (it == levels.end()) return 0;
  // entries descend in q; S_q equals the value at the smallest realized
  // q' >= q, and 0 above the largest realized q
  int64_t val = 0;
  for (const auto& [rq, dim] : it->second) {
    if (rq >= q)
      val = dim;
    else
      break;
  }
  return val;
}

int64_t FiltrationTable::homology_dim(int degree) const {
  auto it = levels.find(degree);
  if (it == levels.end() || it->second.empty()) return 0;
  return it->second.back().second;
}

int64_t FiltrationTable::total_rank() const {
  int64_t n = 0;
  for (const auto& [i, lv] : levels) n += lv.empty() ? 0 : lv.back().second;
  return n;
}

namespace {

// one filtration layer: basis order of weight w sorted by descending q
struct LayerOrder {
  std::vector<int32_t> perm;          // position -> basis index
  std::vector<int> qs;                // realized q values, descending
  std::vector<int64_t> cuts;          // prefix counts per realized q
};

LayerOrder layer_order(const StateBasis& b) {
  LayerOrder lo;
  lo.perm.resize(b.size());
  std::iota(lo.perm.begin(), lo.perm.end(), 0);
  std::stable_sort(lo.perm.begin(), lo.perm.end(), [&](int32_t x, int32_t y) {
    return b.elems[x].q > b.elems[y].q;
  });
  for (int64_t i = 0; i < static_cast<int64_t>(lo.perm.size()); i++) {
    int q = b.elems[lo.perm[i]].q;
    if (lo.qs.empty() || q != lo.qs.back()) {
      lo.qs.push_back(q);
      lo.cuts.push_back(i + 1);
    } else {
      lo.cuts.back() = i + 1;
    }
  }
  return lo;
}

}  // namespace

FiltrationTable lee_filtration(const GradedComplex& lee, int threads) {
  const int k = lee.k;
  std::vector<LayerOrder> orders(k + 1);
  for (int w = 0; w <= k; w++) orders[w] = layer_order(lee.basis[w]);

  // One elimination per weight w: feed d_{w-1} columns (sources sorted by
  // descending q, recording the Z-profile of weight w-1 at its q-cuts), then
  // identity columns of weight w (descending q, recording the augmented
  // profile for the B-part of weight w).
  struct Slice {
    std::vector<int64_t> z_prev;  // rank d_{w-1}|F_q per q-cut of weight w-1
    int64_t rank_prev = 0;        // rank d_{w-1}
    std::vector<int64_t> aug;     // rank [d_{w-1} | E_{F_q}] per q-cut of weight w
  };
  std::vector<Slice> slices(k + 2);

  auto run_slice = [&](int w) {
    Slice s;
    int32_t rows = (w <= k) ? lee.basis[w].size() : 0;
    Eliminator elim(rows);
    if (w > 0 && w <= k) {
      const auto& lo = orders[w - 1];
      std::size_t cut_i = 0;
      for (std::size_t pos = 0; pos < lo.perm.size(); pos++) {
        int32_t col = lo.perm[pos];
        SparseVectorQ v;
        v.reserve(lee.diff[w - 1][col].size());
        for (const auto& e : lee.diff[w - 1][col]) v.push_back({e.row, Rational(e.coeff)});
        elim.add_column(std::move(v));
        while (cut_i < lo.cuts.size() && lo.cuts[cut_i] == static_cast<int64_t>(pos) + 1) {
          s.z_prev.push_back(elim.rank());
          cut_i++;
        }
      }
      while (cut_i < lo.cuts.size()) {  // empty trailing cuts
        s.z_prev.push_back(elim.rank());
        cut_i++;
      }
      s.rank_prev = elim.rank();
    }
    if (w <= k) {
      const auto& lo = orders[w];
      std::size_t cut_i = 0;
      for (std::size_t pos = 0; pos < lo.perm.size(); pos++) {
        elim.add_column({{lo.perm[pos], Rational(1)}});
        while (cut_i < lo.cuts.size() && lo.cuts[cut_i] == static_cast<int64_t>(pos) + 1) {
          s.aug.push_back(elim.rank());
          cut_i++;
        }
      }
    }
    return s;
  };

  if (threads > 1) {
    std::vector<std::future<Slice>> futs(k + 2);
    std::atomic<int> next{0};
    int nt = std::min(threads, k + 2);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; t++)
      pool.emplace_back([&] {
        for (int w; (w = next.fetch_add(1)) <= k + 1;) slices[w] = run_slice(w);
      });
    for (auto& th : pool) th.join();
    (void)futs;
  } else {
    for (int w = 0; w <= k + 1; w++) slices[w] = run_slice(w);
  }

  FiltrationTable out;
  for (int w = 0; w <= k; w++) {
    const auto& lo = orders[w];
    auto& level = out.levels[lee.degree_of_weight(w)];
    const auto& z_here = slices[w + 1].z_prev;  // rank d_w | F_q, per q-cut of weight w
    for (std::size_t j = 0; j < lo.qs.size(); j++) {
      int64_t aug = slices[w].aug[j];
      int64_t zr = z_here.empty() ? 0 : z_here[j];
      int64_t dim = aug - zr - slices[w].rank_prev;
      level.push_back({lo.qs[j], dim});
    }
    if (level.empty()) out.levels.erase(lee.degree_of_weight(w));
  }
  return out;
}

FiltrationTable lee_filtration(const PlanarDiagram& d, int64_t cap, int threads) {
  return lee_filtration(build_complex(d, Theory::lee, cap), threads);
}

SInvariantResult s_invariant(const PlanarDiagram& d, int64_t cap, int threads) {
  SInvariantResult r;
  GradedComplex lee = build_complex(d, Theory::lee, cap);
  r.table = lee_filtration(lee, threads);
  r.lee_total_rank = r.table.total_rank();

  for (const auto& [i, level] : r.table.levels) {
    int64_t prev = 0;
    for (auto it = level.rbegin(); it != level.rend(); ++it) {
      // iterate ascending q: dim S_q - dim S_{q+2} read from consecutive steps
      (void)it;
      break;
    }
    // e_infinity: realized q's descend; dim S above the top is 0
    for (std::size_t j = 0; j < level.size(); j++) {
      int64_t above = (j == 0) ? 0 : level[j - 1].second;
      int64_t here = level[j].second;
      if (here - above != 0) r.e_infinity[{i, level[j].first}] = here - above;
    }
    (void)prev;
  }

  if (d.is_knot_like()) {
    auto it = r.table.levels.find(0);
    if (it != r.table.levels.end() && !it->second.empty()) {
      int64_t full = it->second.back().second;
      int smin = 0, smax = 0;
      bool found_min = false, found_max = false;
      for (const auto& [q, dim] : it->second) {  // descending q
        if (!found_max && dim > 0) {
          smax = q;
          found_max = true;
        }
        if (!found_min && dim == full) {
          smin = q;
          found_min = true;
        }
      }
      if (found_min && found_max) {
        r.has_s = true;
        r.s_min = smin;
        r.s_max = smax;
        r.s = smin + 1;
      }
    }
  }
  return r;
}

BarNatanResult barnatan_decomposition(const BigradedDims& dims, int s) {
  BarNatanResult res;
  Poly2 rem = poincare_polynomial(dims);
  rem.add(0, s + 1, -1);
  rem.add(0, s - 1, -1);
  if (rem.is_zero()) {
    res.ok = true;
    return res;
  }
  // negative coefficients anywhere in the remainder are an early failure
  int tmin = rem.coeff.begin()->first.first;
  int tmax = rem.coeff.rbegin()->first.first;
  // Q_i = R_i - q^4 Q_{i-1}; exact division needs Q_{tmax} = 0
  std::map<int, std::map<int, int64_t>> r_by_t;
  for (const auto& [ij, v] : rem.coeff) r_by_t[ij.first][ij.second] = v;
  std::map<int, int64_t> prev;  // Q_{i-1}
  Poly2 q_poly;
  for (int i = tmin; i <= tmax; i++) {
    std::map<int, int64_t> cur = r_by_t.count(i) ? r_by_t[i] : std::map<int, int64_t>{};
    for (const auto& [j, v] : prev) {
      cur[j + 4] -= v;
    }
    std::erase_if(cur, [](const auto& e) { return e.second == 0; });
    for (const auto& [j, v] : cur) {
      if (v < 0) return res;  // not non-negative
      q_poly.add(i, j, v);
    }
    prev = std::move(cur);
  }
  if (!prev.empty()) return res;  // division leaves a remainder
  res.ok = true;
  res.q = q_poly;
  return res;
}

}  // namespace khs
