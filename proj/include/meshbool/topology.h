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

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "meshbool/geometry.h"

namespace meshbool {

/// Intersection edge running from `head` to `tail`, with the triangle
/// pairs (A id, B id) that produced it.
struct DirectedEdge {
  int head = -1;
  int tail = -1;
  std::vector<std::pair<int, int>> owners;
};

struct Extrema {
  std::array<int, 3> min_index{-1, -1, -1};
  std::array<int, 3> max_index{-1, -1, -1};

  /// The six indices, min x/y/z then max x/y/z.
  std::array<int, 6> All() const {
    return {min_index[0], min_index[1], min_index[2],
            max_index[0], max_index[1], max_index[2]};
  }
};

/// Global vertex/triangle/edge arrays shared by both surfaces after
/// re-triangulation and welding.
struct MergedState {
  std::vector<Point3> vertices;
  std::vector<Triangle> triangles;  // Triangle::source tells A from B
  std::vector<int> parent;          // originating input triangle id
  std::vector<Vec3> parent_normal;
  std::vector<DirectedEdge> edges;
  std::vector<int> remap;  // raw point index -> merged vertex index
  Extrema extrema;
};

struct MergeResult {
  std::vector<Point3> vertices;
  std::vector<int> remap;
};

/// Welds points closer than `tol` on a uniform hash grid. New indices
/// follow first occurrence.
MergeResult MergeVertices(std::span<const Point3> raw, double tol);

struct ClearReport {
  int removed_repeated = 0;
  int removed_slivers = 0;
  int reversed = 0;
  int passes = 0;
};

/**
 * Enforces the clearing requirements on the triangle arrays: no triangle
 * with repeated indices, no sliver (height below `tol`), no directed edge
 * used twice on one surface, and every child triangle facing like its
 * parent. Slivers are removed by splitting the neighbor across their long
 * edge at the middle vertex. Throws TopologyError if 10 passes do not
 * converge.
 */
MergedState ClearTopology(MergedState state, double tol,
                          ClearReport* report = nullptr);

Extrema ComputeExtrema(std::span<const Point3> vertices);

/// Triangles of one surface as a standalone mesh over the global vertices.
TriMesh SurfaceMesh(const MergedState& state, SurfaceTag tag);

}  // namespace meshbool
