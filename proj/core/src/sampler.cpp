#include "khs/sampler.hpp"

#include <numeric>

namespace khs {

namespace {

bool closure_is_knot(const BraidWord& w) {
  std::vector<int> perm(w.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int32_t l : w.letters) std::swap(perm[std::abs(l) - 1], perm[std::abs(l)]);
  int len = 0;
  for (int j = perm[0];; j = perm[j]) {
    len++;
    if (j == 0) break;
  }
  return len == w.strands;
}

}  // namespace

BraidWord KnotSampler::next_word(bool positive_only) {
  std::uniform_int_distribution<int> strands(2, max_strands_);
  for (;;) {
    BraidWord w;
    w.strands = strands(rng_);
    std::uniform_int_distribution<int> len(w.strands, max_length_);
    std::uniform_int_distribution<int> gen(1, w.strands - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    int n = len(rng_);
    for (int i = 0; i < n; i++) {
      int g = gen(rng_);
      w.letters.push_back(positive_only || sgn(rng_) ? g : -g);
    }
    if (closure_is_knot(w)) return w;
  }
}

PlanarDiagram KnotSampler::next_knot(bool positive_only) {
  return from_braid(next_word(positive_only));
}

std::pair<PlanarDiagram, PlanarDiagram> KnotSampler::next_crossing_change_pair() {
  for (;;) {
    BraidWord w = next_word();
    std::vector<int> pos_letters;
    for (std::size_t i = 0; i < w.letters.size(); i++)
      if (w.letters[i] > 0) pos_letters.push_back(static_cast<int>(i));
    if (pos_letters.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, pos_letters.size() - 1);
    BraidWord flipped = w;
    flipped.letters[pos_letters[pick(rng_)]] *= -1;
    return {from_braid(w), from_braid(flipped)};
  }
}

}  // namespace khs
