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
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "meshbool/error.h"

namespace meshbool {

struct Point3 {
  double x = 0, y = 0, z = 0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend Point3 operator+(Point3 a, Point3 b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Point3 operator-(Point3 a, Point3 b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Point3 operator*(Point3 a, double s) {
    return {a.x * s, a.y * s, a.z * s};
  }
  friend Point3 operator*(double s, Point3 a) { return a * s; }
  friend Point3 operator/(Point3 a, double s) {
    return {a.x / s, a.y / s, a.z / s};
  }
  friend Point3 operator-(Point3 a) { return {-a.x, -a.y, -a.z}; }
  friend bool operator==(const Point3&, const Point3&) = default;
};

using Vec3 = Point3;

inline double Dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 Cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}
inline double Norm(Vec3 a) { return std::sqrt(Dot(a, a)); }
inline double Distance(Point3 a, Point3 b) { return Norm(a - b); }
inline Vec3 Normalized(Vec3 a) {
  const double n = Norm(a);
  return n > 0 ? a / n : Vec3{};
}
inline bool IsFinite(Point3 p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

/// Axis-aligned box. Default-constructed boxes are empty (min > max).
struct Aabb {
  Point3 min{std::numeric_limits<double>::infinity(),
             std::numeric_limits<double>::infinity(),
             std::numeric_limits<double>::infinity()};
  Point3 max{-std::numeric_limits<double>::infinity(),
             -std::numeric_limits<double>::infinity(),
             -std::numeric_limits<double>::infinity()};

  bool IsEmpty() const {
    return min.x > max.x || min.y > max.y || min.z > max.z;
  }
  void Include(Point3 p);
  void Include(const Aabb& b);
  bool Overlaps(const Aabb& b) const;
  bool Contains(Point3 p) const;
  Point3 Center() const { return (min + max) * 0.5; }
  Vec3 Size() const { return max - min; }
  double MaxExtent() const;
  friend bool operator==(const Aabb&, const Aabb&) = default;
};

enum class SurfaceTag : uint8_t { A = 0, B = 1 };

struct Triangle {
  std::array<int, 3> v{0, 0, 0};
  SurfaceTag source = SurfaceTag::A;
  int id = 0;
};

/**
 * Indexed triangle surface. `closed` and `boundary_loops` are derived from
 * edge degrees by Finalize(); boundary loops follow the triangle winding.
 */
struct TriMesh {
  std::vector<Point3> vertices;
  std::vector<Triangle> triangles;
  bool closed = false;
  std::vector<std::vector<int>> boundary_loops;

  /// Re-numbers triangle ids, stamps the source tag and recomputes
  /// `closed`/`boundary_loops`.
  void Finalize(SurfaceTag tag);
  void Finalize() { Finalize(triangles.empty() ? SurfaceTag::A
                                               : triangles.front().source); }
};

inline uint64_t EdgeKey(int from, int to) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(from)) << 32) |
         static_cast<uint32_t>(to);
}
inline uint64_t UndirectedKey(int a, int b) {
  return a < b ? EdgeKey(a, b) : EdgeKey(b, a);
}
inline int KeyFrom(uint64_t key) { return static_cast<int>(key >> 32); }
inline int KeyTo(uint64_t key) { return static_cast<int>(key & 0xffffffffu); }

Aabb MeshAabb(const TriMesh& mesh);
Aabb AabbIntersection(const Aabb& a, const Aabb& b);
Aabb TriangleAabb(const TriMesh& mesh, int tri);

/// Divergence-theorem volume; positive for outward windings.
double SignedVolume(const TriMesh& mesh);

Vec3 TriangleNormal(Point3 a, Point3 b, Point3 c);  // unnormalized
double TriangleArea(Point3 a, Point3 b, Point3 c);

/// True when every undirected edge has exactly two incident triangles
/// that use it in opposite directions.
bool IsClosedManifold(const TriMesh& mesh);
/// True when every edge has at most two incident triangles, consistently
/// oriented.
bool IsOrientedManifold(const TriMesh& mesh);
/// V - E + F over referenced vertices.
int EulerCharacteristic(const TriMesh& mesh);
int ConnectedComponents(const TriMesh& mesh);

/// Ray-parity containment against a closed mesh. Retries with a new ray
/// direction when the ray grazes an edge or vertex.
bool PointInMesh(const TriMesh& mesh, Point3 p);

/// Smallest distance from p to any triangle of the mesh.
double DistanceToMesh(const TriMesh& mesh, Point3 p);
double PointTriangleDistance(Point3 p, Point3 a, Point3 b, Point3 c);

/// Drops unreferenced vertices, keeping first-use order.
TriMesh Compact(const TriMesh& mesh);

}  // namespace meshbool
