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
#include <vector>

#include "meshbool/broadphase.h"
#include "meshbool/geometry.h"

namespace meshbool {

struct IntersectionSegment {
  Point3 p0, p1;
  int tri_a = -1;
  int tri_b = -1;
  bool degenerate = false;
};

/// Triangle corners plus their vertex ids. The ids only order edge
/// endpoints so that a point on a shared edge is computed bit-identically
/// from either incident triangle.
struct TriangleRef {
  std::array<Point3, 3> p;
  std::array<int, 3> ids{0, 1, 2};
};

enum class ContactKind { None, Segment, Coplanar };

struct TriTriResult {
  ContactKind kind = ContactKind::None;
  IntersectionSegment segment;  // valid when kind == Segment
};

/**
 * Interval-overlap triangle/triangle intersection. Each triangle is cut by
 * the other's plane; the two resulting intervals along the planes' common
 * line are clipped against each other. Plane distances below `eps` snap to
 * zero. The returned segment runs along cross(n_a, n_b).
 */
TriTriResult IntersectTriangles(const TriangleRef& a, const TriangleRef& b,
                                double eps);

struct NarrowPhaseOptions {
  double eps = 1e-12;
  int threads = 1;  // 0 = hardware concurrency
  bool strict = false;
};

struct NarrowPhaseResult {
  std::vector<IntersectionSegment> segments;  // sorted by (tri_a, tri_b)
  std::vector<CandidatePair> coplanar;
};

TriangleRef MakeTriangleRef(const TriMesh& mesh, int tri);

/// Parallel map over the candidate pairs. Point contacts are dropped.
/// Coplanar overlaps are collected, or raise CoplanarPair under `strict`.
NarrowPhaseResult IntersectAll(const std::vector<CandidatePair>& pairs,
                               const TriMesh& a, const TriMesh& b,
                               const NarrowPhaseOptions& opts);

int ResolveThreadCount(int requested);

}  // namespace meshbool
