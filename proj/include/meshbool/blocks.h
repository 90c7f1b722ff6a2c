// Copyright 2026 The meshbool Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meshbool/loops.h"
#include "meshbool/subsurface.h"
#include "meshbool/topology.h"

namespace meshbool {

enum class BlockLabel { Union, Intersection, AMinusB, BMinusA, Unclassified };

std::string_view BlockLabelName(BlockLabel label);

/// How partner sub-surfaces were matched across each shared loop: with
/// opposite loop signs (union or intersection) or equal signs
/// (subtraction).
enum class Pairing { Opposite, Same };

struct SubBlock {
  int id = -1;
  std::vector<int> surfaces;  // sorted sub-surface ids
  Pairing pairing = Pairing::Opposite;
  BlockLabel label = BlockLabel::Unclassified;
  std::vector<int> reversed;  // sub-surfaces flipped in the output
  bool closed = false;
};

struct BooleanResult {
  std::vector<TriMesh> unions, intersections, a_minus_b, b_minus_a;
};

/**
 * Closes sub-surfaces into sub-blocks. Starting from each usable
 * sub-surface, every owner loop pulls in the sub-surface of the other
 * input that uses the same loop with the opposite (or, for the second
 * pass, the same) sign; this repeats until no loop is unmatched. Blocks
 * that would need a sub-surface touching an open boundary are dropped.
 * Each sub-surface therefore ends up in at most two blocks.
 */
std::vector<SubBlock> AssembleBlocks(const std::vector<SubSurface>& surfs,
                                     const std::vector<OrientedLoop>& loops,
                                     bool both_closed);

/// Recomputes each block's pairing from its owner signs: opposite signs
/// mark a union/intersection candidate, equal signs a subtraction.
/// Throws TopologyError if one block mixes both.
std::vector<Pairing> ClassifyNonSubtraction(
    const std::vector<SubBlock>& blocks, const std::vector<SubSurface>& surfs);

struct UnionPick {
  int union_block = -1;
  std::vector<int> intersection_blocks;
  bool ambiguous = false;  // extrema did not single out one candidate
};

/// Among candidate blocks, the union is the one whose vertices include
/// all six stored extrema; the rest are intersections. When the extrema
/// do not decide, the candidate of largest volume is taken.
UnionPick PickUnion(const std::vector<SubBlock>& blocks,
                    const std::vector<int>& candidates,
                    const std::vector<SubSurface>& surfs,
                    const MergedState& state);

/// Labels every block and sets which sub-surfaces are reversed.
void ClassifySubtractions(std::vector<SubBlock>& blocks, const UnionPick& pick,
                          const std::vector<SubSurface>& surfs);

/// Block triangles as a compact mesh, with reversed sub-surfaces flipped.
TriMesh BlockMesh(const SubBlock& block, const std::vector<SubSurface>& surfs,
                  const MergedState& state);

BooleanResult CollectResult(std::vector<SubBlock>& blocks,
                            const std::vector<SubSurface>& surfs,
                            const MergedState& state);

/// Throws CoincidentInput when both meshes carry the same vertices and
/// triangle count.
void RejectCoincident(const TriMesh& a, const TriMesh& b, double tol);

/// Result for inputs whose surfaces do not cross: disjoint or nested.
BooleanResult TrivialResult(const TriMesh& a, const TriMesh& b, double tol);

}  // namespace meshbool
