#pragma once

// Line-oriented text formats ('#' starts a comment, ids are 1-based):
//
//   graph:        n <count>            first non-comment line, exactly once
//                 dim <K>              optional, defaults to 1
//                 e <u> <v> <weight>   weight as p or p/q
//                 a <v> <c1> ... <cK>  anchor
//                 name <v> <label>
//
//   realization:  dim <K>              first non-comment line
//                 x <v> <c1> ... <cK>  one line per vertex
//
// Writers emit reduced fractions; readers accept unreduced ones. Real
// realizations may use decimal literals.

#include "edgp/graph.hpp"
#include "edgp/realization.hpp"

#include <iosfwd>
#include <string>

namespace edgp {

WeightedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const WeightedGraph& g);

Realization read_realization(std::istream& in);
RealRealization read_real_realization(std::istream& in);
void write_realization(std::ostream& out, const Realization& x);
void write_realization(std::ostream& out, const RealRealization& x);

WeightedGraph load_graph(const std::string& path);
void save_graph(const std::string& path, const WeightedGraph& g);
Realization load_realization(const std::string& path);
RealRealization load_real_realization(const std::string& path);
void save_realization(const std::string& path, const Realization& x);

std::string to_text(const WeightedGraph& g);
std::string to_text(const Realization& x);
std::string to_text(const RealRealization& x);

}  // namespace edgp
