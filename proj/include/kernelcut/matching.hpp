#pragma once

#include <utility>
#include <vector>

namespace kernelcut {

struct BipartiteGraph {
    int left = 0, right = 0;
    std::vector<std::pair<int, int>> edges;  // (left index, right index)
};

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // sorted by left index
    std::vector<int> matched_left;           // X_M, ascending

    int size() const { return static_cast<int>(pairs.size()); }
};

// Hopcroft–Karp; left vertices and neighbour lists are scanned in ascending order.
Matching maximum_matching(const BipartiteGraph& h);

bool coverable(const BipartiteGraph& h, const std::vector<int>& demand);

// h restricted to the given left vertices (indices keep their meaning).
BipartiteGraph restrict_left(const BipartiteGraph& h, const std::vector<int>& keep_left);

// Exhaustive check of the restriction property over all demand subsets.
// Throws std::invalid_argument when h.right exceeds `cap`.
bool matched_restriction_holds(const BipartiteGraph& h, int cap = 16);

// Reference maximum by exhaustive search; tiny graphs only.
int brute_force_matching_size(const BipartiteGraph& h);

}  // namespace kernelcut
