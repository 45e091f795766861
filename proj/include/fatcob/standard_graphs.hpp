#pragma once

#include "fatcob/open_closed.hpp"

namespace fatcob {

// Annulus S1 -> S1: a loop at p with a closed incoming leaf inside and a
// closed outgoing leaf outside.
OpenClosedFatGraph cylinder_graph();

// Pair of pants S1 + S1 -> S1: two loops carrying the incoming leaves,
// joined by an arc through r, where the outgoing leaf hangs.
OpenClosedFatGraph pants_graph();

}  // namespace fatcob
