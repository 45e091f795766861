#pragma once

#include <string>

#include "fatcob/open_closed.hpp"

namespace fatcob {

// Line-based .fg documents:
//   fatgraph
//   vertex <name> [isolated]
//   edge <name> <src> <dst>
//   order <vertex> <half-edge>...
//   in <leaf>...   out <leaf>...   closed <leaf>...
// '#' starts a comment. Syntax problems raise ParseFailure; graphs that
// parse but break a structural rule raise the validator's Error.
OpenClosedFatGraph parse_fg(const std::string& text);
OpenClosedFatGraph load_fg(const std::string& path);

// Identifiers in sorted order, rotations from their smallest half-edge.
std::string serialize_fg(const OpenClosedFatGraph& g);

}  // namespace fatcob
