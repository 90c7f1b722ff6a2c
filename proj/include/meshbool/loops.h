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

#include <string_view>
#include <unordered_map>
#include <vector>

#include "meshbool/geometry.h"
#include "meshbool/topology.h"

namespace meshbool {

enum class LoopKind {
  Open,
  HardClosed,
  SoftClosed,
  /// An open-surface boundary arc chain closed by open intersection loops.
  BoundaryClosed,
};

std::string_view LoopKindName(LoopKind kind);

/**
 * Chain of intersection edges. `verts` holds one more entry than there
 * are edges; closed cycles repeat their first vertex at the end.
 */
struct OrientedLoop {
  int id = -1;
  std::vector<int> verts;
  LoopKind kind = LoopKind::Open;
  std::vector<int> edges;  // ids into the DirectedEdge array
  /// Only set for BoundaryClosed loops, which live on one surface.
  SurfaceTag surface = SurfaceTag::A;

  bool IsClosed() const { return kind != LoopKind::Open; }
};

/// Number of intersection edges incident to each vertex.
std::unordered_map<int, int> EdgeDegrees(const std::vector<DirectedEdge>& edges);

/**
 * Chains edges into loops. Chains never pass through a vertex whose edge
 * degree differs from 2; what remains after tracing from those vertices
 * are pure cycles. Each chain is oriented to agree with the majority of
 * its edges' head->tail directions; cycles start at their lowest vertex.
 */
std::vector<OrientedLoop> BuildLoops(const std::vector<DirectedEdge>& edges);

/// Kind from edge degrees. Throws TopologyError when an interior vertex
/// does not have degree 2.
LoopKind ClassifyLoop(const OrientedLoop& loop,
                      const std::unordered_map<int, int>& degree);

struct BoundaryClosure {
  std::vector<OrientedLoop> loops;  // BoundaryClosed, ids from first_id
  std::vector<int> dangling;        // open loop ids not ending on boundary
};

/// Splits the surface's boundary loops at the endpoints of open loops and
/// stitches arcs and open loops into closed cycles, each bounding one face
/// of the surface.
BoundaryClosure CloseOpenLoopsOnBoundary(const std::vector<OrientedLoop>& loops,
                                         const TriMesh& surface, int first_id);

}  // namespace meshbool
