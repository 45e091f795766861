#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fatcob/open_closed.hpp"

namespace fatcob {

// Equal strings iff the graphs are isomorphic (preserving sigma, the
// involution and, for open-closed graphs, In/Out orders and Closed).
std::string canonical_form(const FatGraph& g);
std::string canonical_form(const OpenClosedFatGraph& g);

bool is_isomorphic(const FatGraph& a, const FatGraph& b);
bool is_isomorphic(const OpenClosedFatGraph& a, const OpenClosedFatGraph& b);

// Number of automorphisms of a connected graph with at least one edge.
std::size_t automorphism_count(const FatGraph& g);

struct CanonicalCode {
  std::vector<std::uint32_t> code;
  std::size_t automorphisms = 0;
};

// Canonical code of one connected map on darts 0..n-1 (n >= 1). The
// involution is an arbitrary fixed-point-free pairing; decoration is an
// isomorphism-invariant label per dart (0 for none).
CanonicalCode canonical_code(const std::vector<std::uint32_t>& sigma, const std::vector<std::uint32_t>& involution,
                             const std::vector<std::uint32_t>& decoration);

std::string code_to_string(const std::vector<std::vector<std::uint32_t>>& sorted_components);

}  // namespace fatcob
