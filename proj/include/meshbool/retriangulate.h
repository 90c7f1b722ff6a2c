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

struct Point2 {
  double x = 0, y = 0;
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double Cross2(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double SignedArea(std::span<const Point2> loop);

struct LocalFrame {
  Point3 origin;
  Vec3 u, v, n;

  Point2 ToLocal(Point3 p) const {
    const Vec3 d = p - origin;
    return {Dot(d, u), Dot(d, v)};
  }
};

/// Newell normal of a closed 3D polygon (unnormalized).
Vec3 NewellNormal(std::span<const Point3> poly);

/// Frame with n along `normal`, u along the polygon's longest edge.
LocalFrame MakeFrame(std::span<const Point3> poly, Vec3 normal);

struct LocalPolygon {
  LocalFrame frame;
  std::vector<Point2> loop;  // counter-clockwise
  bool reversed = false;     // true if the input order was clockwise
};

/// Projects a planar polygon into its Newell frame and orders it CCW.
/// Throws DegeneratePolygon for zero-area input.
LocalPolygon ToLocalCcw(std::span<const Point3> poly);

/// Ear clipping of a simple CCW polygon; returns n - 2 index triples.
/// Throws NotSimple on self-intersecting input.
std::vector<std::array<int, 3>> EarClip(std::span<const Point2> loop);

/// A sub-polygon of a split triangle, as vertex ids in the parent's
/// winding. Holes wind the opposite way.
struct SplitPolygon {
  std::vector<int> boundary;
  std::vector<std::vector<int>> holes;
  int parent_tri = -1;
};

/**
 * Splits a triangle into the faces of the planar graph formed by its
 * boundary chain and the chords. `boundary` lists the corner ids and any
 * points on the edges in winding order. Chords are id pairs whose
 * endpoints lie inside or on the triangle. Chords that cross boundary
 * points are split there; chords with a free end do not split anything.
 */
std::vector<SplitPolygon> SplitTriangle(
    std::span<const int> boundary, std::span<const std::pair<int, int>> chords,
    const std::vector<Point3>& verts, double tol, int parent_tri);

/// Triangulates a split polygon (holes bridged into the outer loop) in
/// the frame of `normal`; output triangles wind like the boundary.
std::vector<std::array<int, 3>> TriangulatePolygon(
    const SplitPolygon& poly, const std::vector<Point3>& verts, Vec3 normal);

}  // namespace meshbool
