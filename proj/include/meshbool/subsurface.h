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

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "meshbool/loops.h"
#include "meshbool/topology.h"

namespace meshbool {

/// A loop bounding a sub-surface. sign = +1 when the sub-surface's
/// triangles traverse the loop in its stored direction, -1 otherwise.
struct LoopUse {
  int loop = -1;
  int sign = 1;
  friend auto operator<=>(const LoopUse&, const LoopUse&) = default;
};

struct SubSurface {
  int id = -1;
  std::vector<int> triangles;  // sorted ids into MergedState::triangles
  std::vector<LoopUse> owners;
  SurfaceTag source = SurfaceTag::A;
  bool is_public = false;
  bool has_boundary_loop = false;
};

/// Directed-edge lookup for one surface, plus the undirected intersection
/// edges that growth may not cross.
struct SurfaceAdjacency {
  SurfaceTag tag = SurfaceTag::A;
  std::unordered_map<uint64_t, int> edge_to_tri;
  std::unordered_set<uint64_t> barriers;
};

SurfaceAdjacency MakeAdjacency(const MergedState& state, SurfaceTag tag,
                               const std::vector<DirectedEdge>& edges);

/**
 * Advancing-front growth from one side of a closed loop. The front starts
 * as the loop's edges opposing the chosen side; each front edge adopts the
 * triangle carrying its reverse, the triangle's edges join the front and
 * opposite pairs cancel. Growth never crosses a barrier edge except from
 * the seed loop itself. Owners and flags are filled in afterwards by
 * BuildSubSurfaces; here only `triangles` and `source` are set.
 */
SubSurface GrowSubSurface(const OrientedLoop& loop, int sign,
                          const MergedState& state,
                          const SurfaceAdjacency& adj);

/// Grows both sides of every closed loop usable on this surface,
/// deduplicates identical triangle sets and records owners.
std::vector<SubSurface> BuildSubSurfaces(const std::vector<OrientedLoop>& loops,
                                         const MergedState& state,
                                         const SurfaceAdjacency& adj,
                                         int first_id);

/// Checks the public/private rules per surface. Violations are returned
/// as messages rather than thrown.
std::vector<std::string> ClassifySubSurfaces(
    const std::vector<SubSurface>& surfs);

}  // namespace meshbool
