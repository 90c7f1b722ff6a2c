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

#include <compare>
#include <vector>

#include "meshbool/geometry.h"

namespace meshbool {

struct OctreeConfig {
  int max_depth = 8;
  /// A node stops splitting once both triangle counts are at or below this.
  int leaf_capacity = 32;
};

struct OctreeNode {
  Aabb bounds;
  int depth = 0;
  std::vector<OctreeNode> children;  // empty or exactly 8
  std::vector<int> tris_a, tris_b;   // only filled on leaves

  bool IsLeaf() const { return children.empty(); }
};

struct CandidatePair {
  int tri_a = 0;
  int tri_b = 0;
  friend auto operator<=>(const CandidatePair&, const CandidatePair&) = default;
};

/// Triangles of each mesh whose boxes touch the shared box, plus the cubic
/// root that encloses all of them.
struct SharedRegion {
  std::vector<int> a_in, b_in;
  Aabb shared;     // Box_A ∩ Box_B
  Aabb root_cube;  // empty when the meshes' boxes are disjoint
};

std::vector<Aabb> TriangleBoxes(const TriMesh& mesh);

SharedRegion ClipToSharedRegion(const TriMesh& a, const TriMesh& b,
                                const std::vector<Aabb>& boxes_a,
                                const std::vector<Aabb>& boxes_b);

/// Recursively splits the root cube into octants until one of the leaf
/// rules holds: maximum depth reached, both counts within capacity, or
/// either count zero. Triangles are filed into every child their box
/// touches.
OctreeNode BuildOctree(const std::vector<int>& a_in,
                       const std::vector<Aabb>& boxes_a,
                       const std::vector<int>& b_in,
                       const std::vector<Aabb>& boxes_b, const Aabb& root,
                       const OctreeConfig& cfg);

/// Union over leaves of tris_a × tris_b whose boxes overlap, deduplicated
/// and sorted.
std::vector<CandidatePair> CandidatePairs(const OctreeNode& tree,
                                          const std::vector<Aabb>& boxes_a,
                                          const std::vector<Aabb>& boxes_b);

/// Unfiltered variant: every pair sharing a leaf.
std::vector<CandidatePair> CandidatePairs(const OctreeNode& tree);

/// Convenience wrapper over the three steps above.
std::vector<CandidatePair> FindCandidatePairs(const TriMesh& a,
                                              const TriMesh& b,
                                              const OctreeConfig& cfg);

}  // namespace meshbool
