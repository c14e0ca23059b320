#pragma once

#include <optional>
#include <vector>

#include "qstirling/coding.hpp"
#include "qstirling/multiset.hpp"
#include "qstirling/partitions.hpp"
#include "qstirling/trees.hpp"

namespace qstirling {

// ----------------------------------------------------------------- phi

// Depth-first walk emitting an edge label going down and, going up, unless
// the edge starts at a singleton leaf or the next sibling edge carries the
// same label. Root label r >= 1 designates the position of c^{-1}(r).
RootedWord phi(const VETree& t);

// Same map via the pair-rewrite description: emit every edge twice, then
// collapse the aa pairs of same-labeled siblings and singleton leaves.
RootedWord phi_pair_rewrite(const VETree& t);

// Throws InvalidInput for non-quasi-Stirling words or inadmissible roots.
VETree phi_inverse(const RootedWord& rw);

// ------------------------------------------------ Foata path transform

struct PathDecomposition {
  std::vector<int> path;                 // v_0 = 0, ..., v_s = t
  std::vector<int> minima;               // right-to-left minima u_0 = 0 < ... < u_j = t
  std::vector<std::vector<int>> cycles;  // path cut after each minimum; cycles[0] = {0}
};

// Throws InvalidInput if the path is empty or does not start at its minimum.
PathDecomposition decompose_path(const std::vector<int>& path);

// Inverse: sorts cycles by minimum, rotates each to end at its minimum and
// concatenates. Each cycle is given in parent order.
std::vector<int> recompose_path(std::vector<std::vector<int>> cycles);

// ------------------------------------------------------------- psi1

struct Psi1Trace {
  std::vector<VertexLabel> anchors;  // sorted
  ParentMap intermediate;            // G̃; vertices without an entry are sinks
  std::vector<int> sinks;            // outdegree-0 vertices of G̃
  PathDecomposition decomposition;   // empty path when the root is 0
  bool repaired = false;             // G̃ had a cycle; the pairing rule was used
};

// Anchor step then Foata step on the path from 0. When the intermediate
// graph G̃ is not a forest the two steps alone are not invertible; such trees
// are paired, in sorted order, with the regular graphs the two steps never
// reach that have the same distinct-label count at every vertex.
RegularGraph psi1(const UnorderedVETree& t, Psi1Trace* trace = nullptr);
UnorderedVETree psi1_inverse(const RegularGraph& g);

// The anchor and Foata steps alone; nullopt when G̃ is not a forest.
std::optional<RegularGraph> psi1_two_step(const UnorderedVETree& t, Psi1Trace* trace = nullptr);
// Inverse of psi1_two_step; nullopt for graphs outside its image.
std::optional<UnorderedVETree> psi1_two_step_inverse(const RegularGraph& g);

// ------------------------------------------------------------- psi2

// Block i collects the values of the vertices whose parent is i; the result
// is the canonical (sorted-blocks) representative with M - n + 1 blocks.
OrderedBlockPartition psi2(const RegularGraph& g);

// Throws InvalidInput when the block count is not M - n + 1 or the
// partition is not over [n].
RegularGraph psi2_inverse(const OrderedBlockPartition& p, const MultisetSpec& m);

// -------------------------------------------------------------- Psi

OrderedBlockPartition Psi(const VETree& t);
VETree Psi_inverse(const OrderedBlockPartition& p, const MultisetSpec& m);

}  // namespace qstirling
