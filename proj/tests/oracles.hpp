#pragma once

// Slow, independent reference implementations the fast code is checked
// against. Everything here favours obviousness over speed and is only run
// at small sizes.

#include <utility>
#include <vector>

#include "hforge/polynomial.hpp"
#include "hforge/sequences.hpp"

namespace hforge::oracle {

// Polynomial with the given roots (each once), as a coefficient product.
Polynomial from_roots(const std::vector<Rational>& roots);

// Crossed-comparison count by direct scan of all comparison prefixes:
// longest alternating run of strict <,> over comparable positions, via
// subset enumeration. Pre: lengths equal, <= 16.
long cross_count_subsets(const Sequence& a, const Sequence& b);

// Largest pairwise-compatible subset by depth-first search over the
// compatibility graph, returning the lexicographically least witness
// (by member index list). Pre: items.size() <= 40.
std::pair<std::size_t, std::vector<std::size_t>> max_clique_bitmask(
    const std::vector<std::vector<bool>>& adjacent);

}  // namespace hforge::oracle
