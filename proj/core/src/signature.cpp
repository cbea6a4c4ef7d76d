#include "khs/signature.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

#include "khs/rational.hpp"

namespace khs {

namespace {

struct Loop {
  int column;  // generator index
  int t1, t2;  // positions of the two bands (t1 < t2)
  int e1, e2;  // band signs
};

}  // namespace

SeifertMatrix seifert_matrix(const BraidWord& word) {
  if (word.letters.empty()) fail(errc::empty_word, "empty braid word");

  // closure must be a knot: the strand permutation is a single cycle
  std::vector<int> perm(word.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int32_t l : word.letters) {
    int i = std::abs(l) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  int cycle_len = 0;
  for (int j = perm[0];; j = perm[j]) {
    cycle_len++;
    if (j == 0) break;
  }
  if (cycle_len != word.strands) fail(errc::not_a_knot, "braid closure is not a knot");

  std::vector<std::vector<std::pair<int, int>>> occ(word.strands);  // (position, sign)
  for (std::size_t t = 0; t < word.letters.size(); t++) {
    int32_t l = word.letters[t];
    occ[std::abs(l)].push_back({static_cast<int>(t), l > 0 ? 1 : -1});
  }

  std::vector<Loop> loops;
  for (int i = 1; i < word.strands; i++)
    for (std::size_t j = 0; j + 1 < occ[i].size(); j++)
      loops.push_back({i, occ[i][j].first, occ[i][j + 1].first, occ[i][j].second,
                       occ[i][j + 1].second});

  const int n = static_cast<int>(loops.size());
  SeifertMatrix m;
  m.v.assign(n, std::vector<int64_t>(n, 0));

  // symmetrized linking form on band loops; the asymmetric split is not
  // needed for signature or determinant
  for (int x = 0; x < n; x++) {
    m.v[x][x] = -(loops[x].e1 + loops[x].e2);
    for (int y = x + 1; y < n; y++) {
      const Loop &a = loops[x], &b = loops[y];
      int64_t v = 0;
      if (a.column == b.column) {
        if (a.t2 == b.t1)
          v = a.e2;  // shared band sign
        else if (b.t2 == a.t1)
          v = b.e2;
      } else if (std::abs(a.column - b.column) == 1) {
        const Loop& lo = (a.column < b.column) ? a : b;
        const Loop& hi = (a.column < b.column) ? b : a;
        if (lo.t1 < hi.t1 && hi.t1 < lo.t2 && lo.t2 < hi.t2)
          v = 1;  // exactly one attachment inside the window
        else if (hi.t1 < lo.t1 && lo.t1 < hi.t2 && hi.t2 < lo.t2)
          v = -1;
      }
      m.v[x][y] = m.v[y][x] = v;
    }
  }
  return m;
}

int signature_of(const SeifertMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) a[i][j] = Rational(m.v[i][j]);

  int pos = 0, neg = 0;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; step++) {
    int p = -1;
    for (int i = 0; i < n; i++)
      if (!done[i] && a[i][i] != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      // create a nonzero diagonal entry by a congruence row+col add
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; i++)
        if (!done[i])
          for (int j = i + 1; j < n; j++)
            if (!done[j] && a[i][j] != 0) {
              bi = i;
              bj = j;
              break;
            }
      if (bi < 0) fail(errc::singular_form, "V + V^T is singular");
      for (int k = 0; k < n; k++) a[bi][k] += a[bj][k];
      for (int k = 0; k < n; k++) a[k][bi] += a[k][bj];
      p = bi;
    }
    (a[p][p] > 0 ? pos : neg)++;
    for (int i = 0; i < n; i++) {
      if (done[i] || i == p || a[i][p] == 0) continue;
      Rational f = -a[i][p] / a[p][p];
      for (int k = 0; k < n; k++) a[i][k] += f * a[p][k];
      for (int k = 0; k < n; k++) a[k][i] += f * a[k][p];
    }
    done[p] = true;
  }
  // paper convention: positive trefoil has signature +2
  return -(pos - neg);
}

int64_t determinant_of(const SeifertMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) a[i][j] = m.v[i][j];
  mpq_class det = 1;
  for (int c = 0; c < n; c++) {
    int p = -1;
    for (int r = c; r < n; r++)
      if (a[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; r++) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (int k = c; k < n; k++) a[r][k] -= f * a[c][k];
    }
  }
  mpq_class abs = det >= 0 ? det : mpq_class(-det);
  mpz_class num = abs.get_num() / abs.get_den();
  return num.get_si();
}

}  // namespace khs
