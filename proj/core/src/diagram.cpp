#include "khs/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace khs {

std::vector<int32_t> PlanarDiagram::arcs() const {
  std::vector<int32_t> out;
  for (const auto& comp : components) out.insert(out.end(), comp.begin(), comp.end());
  std::sort(out.begin(), out.end());
  return out;
}

int32_t PlanarDiagram::successor(int32_t arc) const {
  auto it = successor_.find(arc);
  if (it == successor_.end()) fail(errc::internal, "unknown arc " + std::to_string(arc));
  return it->second;
}

const ArcEnds& PlanarDiagram::ends(int32_t arc) const {
  auto it = ends_.find(arc);
  if (it == ends_.end()) fail(errc::internal, "unknown arc " + std::to_string(arc));
  return it->second;
}

void PlanarDiagram::finalize() {
  successor_.clear();
  ends_.clear();
  signs.assign(crossings.size(), 0);
  n_plus = n_minus = 0;

  // arc usage across crossing slots
  std::map<int32_t, int> uses;
  for (const auto& x : crossings)
    for (int s = 0; s < 4; s++) {
      if (x.slot(s) <= 0) fail(errc::malformed_token, "arc labels must be positive");
      uses[x.slot(s)]++;
    }

  std::set<int32_t> comp_arcs;
  for (const auto& comp : components) {
    if (comp.empty()) fail(errc::internal, "empty component sequence");
    for (std::size_t i = 0; i < comp.size(); i++) {
      if (!comp_arcs.insert(comp[i]).second)
        fail(errc::arc_label_used_wrong_number_of_times,
             "arc " + std::to_string(comp[i]) + " occurs in more than one component slot");
      successor_[comp[i]] = comp[(i + 1) % comp.size()];
    }
  }
  for (const auto& [arc, n] : uses) {
    if (n != 2)
      fail(errc::arc_label_used_wrong_number_of_times,
           "arc " + std::to_string(arc) + " appears " + std::to_string(n) +
               " times across crossing slots");
    if (!comp_arcs.count(arc))
      fail(errc::arc_label_used_wrong_number_of_times,
           "arc " + std::to_string(arc) + " missing from components");
  }
  for (int32_t arc : comp_arcs) {
    if (!uses.count(arc))
      fail(errc::arc_label_used_wrong_number_of_times,
           "component arc " + std::to_string(arc) + " appears at no crossing");
    ends_[arc] = ArcEnds{};
  }

  auto head_free = [&](int32_t arc) { return ends_[arc].head_crossing < 0; };
  auto tail_free = [&](int32_t arc) { return ends_[arc].tail_crossing < 0; };
  auto set_head = [&](int32_t arc, int32_t k, int32_t slot) {
    if (!head_free(arc))
      fail(errc::inconsistent_orientation, "arc " + std::to_string(arc) + " has two heads");
    ends_[arc].head_crossing = k;
    ends_[arc].head_slot = slot;
  };
  auto set_tail = [&](int32_t arc, int32_t k, int32_t slot) {
    if (!tail_free(arc))
      fail(errc::inconsistent_orientation, "arc " + std::to_string(arc) + " has two tails");
    ends_[arc].tail_crossing = k;
    ends_[arc].tail_slot = slot;
  };

  // under passages are forced: a -> c
  for (std::size_t k = 0; k < crossings.size(); k++) {
    const auto& x = crossings[k];
    if (successor_[x.a] != x.c)
      fail(errc::inconsistent_orientation,
           "under-strand at crossing " + std::to_string(k) + " does not run a->c");
    set_head(x.a, static_cast<int32_t>(k), 0);
    set_tail(x.c, static_cast<int32_t>(k), 2);
  }

  // over passages: b -> d gives sign +1, d -> b gives sign -1. End
  // availability settles kinks and 2-arc components where the successor
  // relation alone is ambiguous.
  std::vector<bool> resolved(crossings.size(), false);
  std::size_t remaining = crossings.size();
  while (remaining > 0) {
    bool progress = false;
    int32_t first_unresolved = -1;
    for (std::size_t k = 0; k < crossings.size(); k++) {
      if (resolved[k]) continue;
      const auto& x = crossings[k];
      bool bd = successor_[x.b] == x.d && head_free(x.b) && tail_free(x.d);
      bool db = successor_[x.d] == x.b && head_free(x.d) && tail_free(x.b);
      if (!bd && !db) {
        if (first_unresolved < 0) first_unresolved = static_cast<int32_t>(k);
        continue;
      }
      if (bd && db) {
        if (first_unresolved < 0) first_unresolved = static_cast<int32_t>(k);
        continue;  // still ambiguous, retry after others commit
      }
      if (bd) {
        set_head(x.b, static_cast<int32_t>(k), 1);
        set_tail(x.d, static_cast<int32_t>(k), 3);
        signs[k] = 1;
      } else {
        set_head(x.d, static_cast<int32_t>(k), 3);
        set_tail(x.b, static_cast<int32_t>(k), 1);
        signs[k] = -1;
      }
      resolved[k] = true;
      remaining--;
      progress = true;
    }
    if (!progress) {
      if (first_unresolved < 0)
        fail(errc::inconsistent_orientation, "over-strand resolution stuck");
      const auto& x = crossings[first_unresolved];
      bool bd = successor_[x.b] == x.d && head_free(x.b) && tail_free(x.d);
      if (bd) {
        set_head(x.b, first_unresolved, 1);
        set_tail(x.d, first_unresolved, 3);
        signs[first_unresolved] = 1;
      } else if (successor_[x.d] == x.b && head_free(x.d) && tail_free(x.b)) {
        set_head(x.d, first_unresolved, 3);
        set_tail(x.b, first_unresolved, 1);
        signs[first_unresolved] = -1;
      } else {
        fail(errc::inconsistent_orientation,
             "crossing " + std::to_string(first_unresolved) +
                 ": neither over-strand direction is consistent");
      }
      resolved[first_unresolved] = true;
      remaining--;
    }
  }

  for (int32_t arc : comp_arcs) {
    const auto& e = ends_[arc];
    if (e.head_crossing < 0 || e.tail_crossing < 0)
      fail(errc::inconsistent_orientation, "arc " + std::to_string(arc) + " has a loose end");
  }

  for (int8_t s : signs) (s > 0 ? n_plus : n_minus)++;
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
}

int32_t parse_int(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) i++;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
  if (i == start) fail(errc::malformed_token, "expected integer at position " + std::to_string(start));
  return std::stoi(s.substr(start, i - start));
}

void expect(const std::string& s, std::size_t& i, char c) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != c)
    fail(errc::malformed_token, std::string("expected '") + c + "' at position " + std::to_string(i));
  i++;
}

}  // namespace

PlanarDiagram parse_pd(const std::string& text) {
  PlanarDiagram d;
  std::string body = text;
  std::string comp_part;
  if (auto bar = text.find('|'); bar != std::string::npos) {
    body = text.substr(0, bar);
    comp_part = text.substr(bar + 1);
  }

  std::size_t i = 0;
  skip_ws(body, i);
  while (i < body.size()) {
    if (body[i] != 'X') fail(errc::malformed_token, "expected X(...) token at position " + std::to_string(i));
    i++;
    expect(body, i, '(');
    CrossingPD x;
    x.a = parse_int(body, i);
    expect(body, i, ',');
    x.b = parse_int(body, i);
    expect(body, i, ',');
    x.c = parse_int(body, i);
    expect(body, i, ',');
    x.d = parse_int(body, i);
    expect(body, i, ')');
    d.crossings.push_back(x);
    skip_ws(body, i);
  }

  if (!comp_part.empty()) {
    std::size_t j = 0;
    skip_ws(comp_part, j);
    const std::string kw = "components:";
    if (comp_part.compare(j, kw.size(), kw) != 0)
      fail(errc::malformed_token, "expected 'components:' after '|'");
    j += kw.size();
    skip_ws(comp_part, j);
    while (j < comp_part.size()) {
      expect(comp_part, j, '(');
      std::vector<int32_t> comp;
      skip_ws(comp_part, j);
      while (j < comp_part.size() && comp_part[j] != ')') {
        comp.push_back(parse_int(comp_part, j));
        skip_ws(comp_part, j);
      }
      expect(comp_part, j, ')');
      if (comp.empty())
        d.crossingless_components++;
      else
        d.components.push_back(std::move(comp));
      skip_ws(comp_part, j);
    }
  } else if (d.crossings.empty()) {
    d.crossingless_components = 1;  // "" is the unknot
  } else {
    // knot default: arcs 1..2n with successor i -> i+1
    int n = d.crossing_count();
    std::set<int32_t> seen;
    for (const auto& x : d.crossings)
      for (int s = 0; s < 4; s++) seen.insert(x.slot(s));
    if (static_cast<int>(seen.size()) != 2 * n || *seen.begin() != 1 || *seen.rbegin() != 2 * n)
      fail(errc::malformed_token,
           "knot PD without explicit components must use arc labels 1..2n");
    std::vector<int32_t> comp(2 * n);
    std::iota(comp.begin(), comp.end(), 1);
    d.components.push_back(std::move(comp));
  }

  d.finalize();
  return d;
}

std::string to_pd_string(const PlanarDiagram& d) {
  std::ostringstream out;
  for (const auto& x : d.crossings)
    out << "X(" << x.a << "," << x.b << "," << x.c << "," << x.d << ")";

  bool default_knot = d.components.size() == 1 && d.crossingless_components == 0;
  if (default_knot) {
    const auto& comp = d.components[0];
    int n = d.crossing_count();
    if (static_cast<int>(comp.size()) != 2 * n) default_knot = false;
    for (std::size_t i = 0; default_knot && i < comp.size(); i++)
      if (comp[i] != static_cast<int32_t>(i) + 1) default_knot = false;
  }
  if (!default_knot && (!d.components.empty() || d.crossingless_components > 0)) {
    out << " | components:";
    for (const auto& comp : d.components) {
      out << " (";
      for (std::size_t i = 0; i < comp.size(); i++) out << (i ? " " : "") << comp[i];
      out << ")";
    }
    for (int i = 0; i < d.crossingless_components; i++) out << " ()";
  }
  return out.str();
}

BraidWord parse_braid(const std::string& text) {
  BraidWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.rfind("strands=", 0) == 0) {
      w.strands = std::stoi(tok.substr(8));
    } else {
      try {
        w.letters.push_back(std::stoi(tok));
      } catch (...) {
        fail(errc::malformed_token, "bad braid token '" + tok + "'");
      }
    }
  }
  if (w.strands <= 0) fail(errc::malformed_token, "braid requires strands=<n> prefix");
  for (int32_t l : w.letters)
    if (l == 0 || std::abs(l) >= w.strands)
      fail(errc::malformed_token, "braid letter " + std::to_string(l) + " out of range");
  return w;
}

std::string to_braid_string(const BraidWord& w) {
  std::ostringstream out;
  out << "strands=" << w.strands;
  for (int32_t l : w.letters) out << " " << l;
  return out.str();
}

PlanarDiagram from_braid(const BraidWord& word) {
  if (word.letters.empty()) fail(errc::empty_word, "empty braid word");
  if (word.strands < 2) fail(errc::malformed_token, "braid needs at least 2 strands");
  for (int32_t l : word.letters)
    if (l == 0 || std::abs(l) >= word.strands)
      fail(errc::malformed_token, "braid letter " + std::to_string(l) + " out of range");

  const int s = word.strands;
  std::vector<int32_t> cur(s + 1);
  std::iota(cur.begin(), cur.end(), 0);  // cur[j] = j initially
  int32_t next_label = s + 1;

  PlanarDiagram d;
  std::map<int32_t, int32_t> succ;
  for (int32_t letter : word.letters) {
    int i = std::abs(letter);
    int32_t left = cur[i], right = cur[i + 1];
    int32_t ni = next_label++, ni1 = next_label++;
    if (letter > 0)
      d.crossings.push_back({left, right, ni1, ni});
    else
      d.crossings.push_back({right, ni1, ni, left});
    succ[left] = ni1;
    succ[right] = ni;
    cur[i] = ni;
    cur[i + 1] = ni1;
  }

  // closure: final position arcs are the initial ones
  std::map<int32_t, int32_t> rename;
  for (int j = 1; j <= s; j++) {
    if (cur[j] == j) {
      d.crossingless_components++;  // untouched strand closes to a circle
    } else {
      rename[cur[j]] = j;
    }
  }
  auto canon = [&](int32_t a) {
    auto it = rename.find(a);
    return it == rename.end() ? a : it->second;
  };
  for (auto& x : d.crossings) {
    x.a = canon(x.a);
    x.b = canon(x.b);
    x.c = canon(x.c);
    x.d = canon(x.d);
  }
  std::map<int32_t, int32_t> succ2;
  for (auto& [from, to] : succ) succ2[canon(from)] = canon(to);

  // trace components
  std::set<int32_t> todo;
  for (auto& [from, to] : succ2) todo.insert(from);
  while (!todo.empty()) {
    int32_t start = *todo.begin();
    std::vector<int32_t> comp;
    int32_t a = start;
    do {
      comp.push_back(a);
      todo.erase(a);
      a = succ2.at(a);
    } while (a != start);
    d.components.push_back(std::move(comp));
  }

  d.finalize();
  return relabel_canonical(d);
}

PlanarDiagram relabel_canonical(const PlanarDiagram& d,
                                std::unordered_map<int32_t, int32_t>* arc_map) {
  PlanarDiagram out;
  out.crossingless_components = d.crossingless_components;

  // order components by smallest arc, start each at its smallest arc
  std::vector<std::vector<int32_t>> comps = d.components;
  for (auto& comp : comps) {
    auto mn = std::min_element(comp.begin(), comp.end());
    std::rotate(comp.begin(), mn, comp.end());
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });

  std::unordered_map<int32_t, int32_t> remap;
  int32_t next = 1;
  for (auto& comp : comps) {
    std::vector<int32_t> nc;
    for (int32_t a : comp) {
      remap[a] = next;
      nc.push_back(next);
      next++;
    }
    out.components.push_back(std::move(nc));
  }

  out.crossings.reserve(d.crossings.size());
  for (const auto& x : d.crossings)
    out.crossings.push_back({remap.at(x.a), remap.at(x.b), remap.at(x.c), remap.at(x.d)});
  out.finalize();
  if (arc_map) *arc_map = remap;
  return out;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  PlanarDiagram out;
  out.components = d.components;
  out.crossingless_components = d.crossingless_components;
  out.crossings.reserve(d.crossings.size());
  for (std::size_t k = 0; k < d.crossings.size(); k++) {
    const auto& x = d.crossings[k];
    // swapping over/under re-bases the CCW slot list at the old over entry
    if (d.signs[k] > 0)
      out.crossings.push_back({x.b, x.c, x.d, x.a});
    else
      out.crossings.push_back({x.d, x.a, x.b, x.c});
  }
  out.finalize();
  return out;
}

PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2, int32_t arc1,
                            int32_t arc2) {
  auto is_plain_unknot = [](const PlanarDiagram& d) {
    return d.crossings.empty() && d.crossingless_components == 1 && d.components.empty();
  };
  if (is_plain_unknot(d1)) return relabel_canonical(d2);
  if (is_plain_unknot(d2)) return relabel_canonical(d1);
  if (d1.component_count() != 1 || d2.component_count() != 1)
    fail(errc::not_a_knot, "connected_sum needs one-component inputs");

  const auto arcs1 = d1.arcs();
  if (!std::binary_search(arcs1.begin(), arcs1.end(), arc1))
    fail(errc::internal, "arc1 not in first diagram");
  const auto arcs2 = d2.arcs();
  if (!std::binary_search(arcs2.begin(), arcs2.end(), arc2))
    fail(errc::internal, "arc2 not in second diagram");

  int32_t offset = arcs1.back();
  auto shift = [&](int32_t a) { return a + offset; };
  int32_t arc2s = shift(arc2);

  PlanarDiagram out;
  out.crossings = d1.crossings;
  for (const auto& x : d2.crossings)
    out.crossings.push_back({shift(x.a), shift(x.b), shift(x.c), shift(x.d)});

  // replace arc1 at its head slot by arc2s, and arc2s at its head slot by arc1
  const ArcEnds& e1 = d1.ends(arc1);
  const ArcEnds& e2 = d2.ends(arc2);
  auto slot_ref = [](CrossingPD& x, int s) -> int32_t& {
    switch (s) {
      case 0: return x.a;
      case 1: return x.b;
      case 2: return x.c;
      default: return x.d;
    }
  };
  slot_ref(out.crossings[e1.head_crossing], e1.head_slot) = arc2s;
  slot_ref(out.crossings[d1.crossing_count() + e2.head_crossing], e2.head_slot) = arc1;

  // spliced component: arc1, (d2's cycle after arc2), arc2s, (d1's cycle after arc1)
  std::vector<int32_t> comp;
  comp.push_back(arc1);
  for (int32_t a = d2.successor(arc2); a != arc2; a = d2.successor(a)) comp.push_back(shift(a));
  comp.push_back(arc2s);
  for (int32_t a = d1.successor(arc1); a != arc1; a = d1.successor(a)) comp.push_back(a);
  out.components.push_back(std::move(comp));

  out.finalize();
  return relabel_canonical(out);
}

}  // namespace khs
