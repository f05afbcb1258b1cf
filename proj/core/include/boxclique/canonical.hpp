#pragma once

#include <string>

#include "boxclique/graph.hpp"

namespace boxclique {

// Whether an isomorphism may also permute the colors.
enum class SwapPolicy { kColorFixed, kColorPermuting };

// Byte string equal for two graphs iff they are isomorphic under the policy.
// Minimum relabeling encoding over all vertex permutations, pruned by
// color-degree refinement. Budget: n <= 16 (and t <= 8 when permuting colors).
std::string canonical_form(const MultiColoredGraph& g, SwapPolicy policy = SwapPolicy::kColorFixed);

bool are_isomorphic(const MultiColoredGraph& a, const MultiColoredGraph& b,
                    SwapPolicy policy = SwapPolicy::kColorFixed);

} // namespace boxclique
