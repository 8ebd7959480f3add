#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypercat/diagram.hpp"

namespace hypercat::cli {

/// Runs the command line `args` (without the program name). Returns 0 for
/// equal / isomorphic / success, 1 for distinct / non-isomorphic, 2 on errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Graphviz rendering: one node per box and per dot, plaintext stubs for the
/// boundary ports, one edge per port.
std::string export_graph(const DotDiagram& f);

}  // namespace hypercat::cli
