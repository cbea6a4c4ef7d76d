#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "khs/cobordism.hpp"

namespace khs {

// Line-oriented movie grammar, one move per line, '#' comments:
//   R1+ arc=5        R1- crossing=2     R1'+ arc=4      R1'- crossing=7
//   R2+ arcs=3,8     R2- crossings=1,2  R3 crossings=1,2,4
//   birth            death circle=0     saddle arcs=4,9
std::vector<Move> parse_movie(std::istream& in);
std::vector<Move> parse_movie_file(const std::string& path);

struct MovieResult {
  PlanarDiagram final_diagram;
  ChainMap composite;          // from the initial to the final Lee complex
  int chi = 0;                 // births + deaths - saddles
  std::vector<std::string> trace;  // post-move PD per step
};

MovieResult run_movie(const PlanarDiagram& initial, const std::vector<Move>& moves,
                      bool verbose_trace = false);

}  // namespace khs
