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

#include "meshbool/geometry.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace meshbool {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::CoplanarPair: return "CoplanarPair";
    case ErrorKind::GeometryError: return "GeometryError";
    case ErrorKind::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::TopologyError: return "TopologyError";
    case ErrorKind::DanglingLoop: return "DanglingLoop";
    case ErrorKind::AssemblyError: return "AssemblyError";
    case ErrorKind::ClassificationError: return "ClassificationError";
    case ErrorKind::CoincidentInput: return "CoincidentInput";
  }
  return "Unknown";
}

void Aabb::Include(Point3 p) {
  min = {std::min(min.x, p.x), std::min(min.y, p.y), std::min(min.z, p.z)};
  max = {std::max(max.x, p.x), std::max(max.y, p.y), std::max(max.z, p.z)};
}

void Aabb::Include(const Aabb& b) {
  if (b.IsEmpty()) return;
  Include(b.min);
  Include(b.max);
}

bool Aabb::Overlaps(const Aabb& b) const {
  if (IsEmpty() || b.IsEmpty()) return false;
  return min.x <= b.max.x && b.min.x <= max.x && min.y <= b.max.y &&
         b.min.y <= max.y && min.z <= b.max.z && b.min.z <= max.z;
}

bool Aabb::Contains(Point3 p) const {
  return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y &&
         p.z >= min.z && p.z <= max.z;
}

double Aabb::MaxExtent() const {
  if (IsEmpty()) return 0;
  const Vec3 s = Size();
  return std::max({s.x, s.y, s.z});
}

Aabb MeshAabb(const TriMesh& mesh) {
  if (mesh.vertices.empty())
    throw Error(ErrorKind::EmptyInput, "mesh has no vertices");
  Aabb box;
  for (const Point3& p : mesh.vertices) box.Include(p);
  return box;
}

Aabb AabbIntersection(const Aabb& a, const Aabb& b) {
  if (a.IsEmpty() || b.IsEmpty()) return {};
  Aabb r;
  r.min = {std::max(a.min.x, b.min.x), std::max(a.min.y, b.min.y),
           std::max(a.min.z, b.min.z)};
  r.max = {std::min(a.max.x, b.max.x), std::min(a.max.y, b.max.y),
           std::min(a.max.z, b.max.z)};
  if (r.IsEmpty()) return {};
  return r;
}

Aabb TriangleAabb(const TriMesh& mesh, int tri) {
  Aabb box;
  for (int v : mesh.triangles[tri].v) box.Include(mesh.vertices[v]);
  return box;
}

Vec3 TriangleNormal(Point3 a, Point3 b, Point3 c) {
  return Cross(b - a, c - a);
}

double TriangleArea(Point3 a, Point3 b, Point3 c) {
  return 0.5 * Norm(TriangleNormal(a, b, c));
}

double SignedVolume(const TriMesh& mesh) {
  if (!mesh.closed)
    throw Error(ErrorKind::NotClosed, "signed volume needs a closed mesh");
  double vol = 0;
  for (const Triangle& t : mesh.triangles) {
    const Point3& a = mesh.vertices[t.v[0]];
    const Point3& b = mesh.vertices[t.v[1]];
    const Point3& c = mesh.vertices[t.v[2]];
    vol += Dot(a, Cross(b, c));
  }
  return vol / 6.0;
}

void TriMesh::Finalize(SurfaceTag tag) {
  std::unordered_map<uint64_t, int> directed;
  for (size_t i = 0; i < triangles.size(); ++i) {
    Triangle& t = triangles[i];
    t.id = static_cast<int>(i);
    t.source = tag;
    for (int k = 0; k < 3; ++k) ++directed[EdgeKey(t.v[k], t.v[(k + 1) % 3])];
  }
  // Boundary edges: directed edges whose reverse is missing.
  std::unordered_map<int, std::vector<int>> next;
  std::vector<uint64_t> boundary;
  for (const auto& [key, count] : directed) {
    if (!directed.contains(EdgeKey(KeyTo(key), KeyFrom(key))))
      boundary.push_back(key);
  }
  std::sort(boundary.begin(), boundary.end());
  for (uint64_t key : boundary) next[KeyFrom(key)].push_back(KeyTo(key));

  boundary_loops.clear();
  std::unordered_set<uint64_t> used;
  for (uint64_t key : boundary) {
    if (used.contains(key)) continue;
    std::vector<int> loop;
    int from = KeyFrom(key);
    int to = KeyTo(key);
    const int start = from;
    while (true) {
      used.insert(EdgeKey(from, to));
      loop.push_back(from);
      if (to == start) break;
      int nextTo = -1;
      for (int cand : next[to]) {
        if (!used.contains(EdgeKey(to, cand))) {
          nextTo = cand;
          break;
        }
      }
      if (nextTo < 0) {
        loop.push_back(to);
        break;
      }
      from = to;
      to = nextTo;
    }
    // Canonical start: lowest vertex index.
    auto it = std::min_element(loop.begin(), loop.end());
    std::rotate(loop.begin(), it, loop.end());
    boundary_loops.push_back(std::move(loop));
  }
  closed = !triangles.empty() && boundary.empty();
}

bool IsOrientedManifold(const TriMesh& mesh) {
  std::unordered_map<uint64_t, int> directed;
  for (const Triangle& t : mesh.triangles) {
    if (t.v[0] == t.v[1] || t.v[1] == t.v[2] || t.v[2] == t.v[0])
      return false;
    for (int k = 0; k < 3; ++k) {
      if (++directed[EdgeKey(t.v[k], t.v[(k + 1) % 3])] > 1) return false;
    }
  }
  return true;
}

bool IsClosedManifold(const TriMesh& mesh) {
  if (mesh.triangles.empty() || !IsOrientedManifold(mesh)) return false;
  std::unordered_set<uint64_t> directed;
  for (const Triangle& t : mesh.triangles)
    for (int k = 0; k < 3; ++k)
      directed.insert(EdgeKey(t.v[k], t.v[(k + 1) % 3]));
  for (uint64_t key : directed)
    if (!directed.contains(EdgeKey(KeyTo(key), KeyFrom(key)))) return false;
  return true;
}

int EulerCharacteristic(const TriMesh& mesh) {
  std::unordered_set<int> verts;
  std::unordered_set<uint64_t> edges;
  for (const Triangle& t : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      verts.insert(t.v[k]);
      edges.insert(UndirectedKey(t.v[k], t.v[(k + 1) % 3]));
    }
  }
  return static_cast<int>(verts.size()) - static_cast<int>(edges.size()) +
         static_cast<int>(mesh.triangles.size());
}

int ConnectedComponents(const TriMesh& mesh) {
  std::vector<int> parent(mesh.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> used(mesh.vertices.size(), 0);
  for (const Triangle& t : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      used[t.v[k]] = 1;
      parent[find(t.v[k])] = find(t.v[(k + 1) % 3]);
    }
  }
  int count = 0;
  for (size_t i = 0; i < parent.size(); ++i)
    if (used[i] && find(static_cast<int>(i)) == static_cast<int>(i)) ++count;
  return count;
}

namespace {

enum class RayHit { Miss, Hit, Ambiguous };

// Moller-Trumbore with an ambiguity flag for edge/vertex grazing.
RayHit RayTriangle(Point3 orig, Vec3 dir, Point3 a, Point3 b, Point3 c) {
  constexpr double kEps = 1e-10;
  const Vec3 e1 = b - a;
  const Vec3 e2 = c - a;
  const Vec3 p = Cross(dir, e2);
  const double det = Dot(e1, p);
  const double scale = Norm(e1) * Norm(e2) * Norm(dir);
  if (std::abs(det) <= kEps * scale) {
    // Ray parallel to the triangle plane; ambiguous only if it lies in it.
    const Vec3 n = Normalized(Cross(e1, e2));
    return std::abs(Dot(orig - a, n)) < 1e-12 ? RayHit::Ambiguous
                                              : RayHit::Miss;
  }
  const double inv = 1.0 / det;
  const Vec3 s = orig - a;
  const double u = Dot(s, p) * inv;
  const Vec3 q = Cross(s, e1);
  const double v = Dot(dir, q) * inv;
  const double t = Dot(e2, q) * inv;
  constexpr double kBary = 1e-9;
  if (u < -kBary || v < -kBary || u + v > 1 + kBary) return RayHit::Miss;
  if (t < -kBary) return RayHit::Miss;
  if (u < kBary || v < kBary || u + v > 1 - kBary || t < kBary)
    return RayHit::Ambiguous;
  return RayHit::Hit;
}

}  // namespace

bool PointInMesh(const TriMesh& mesh, Point3 p) {
  static const std::array<Vec3, 8> kDirs = {{
      {0.5773, 0.5774, 0.5775},
      {-0.31, 0.82, 0.481},
      {0.913, -0.261, 0.313},
      {-0.577, -0.619, 0.533},
      {0.123, 0.357, -0.926},
      {-0.702, 0.091, -0.706},
      {0.385, -0.889, -0.247},
      {0.661, 0.701, -0.268},
  }};
  for (const Vec3& dir : kDirs) {
    int crossings = 0;
    bool ambiguous = false;
    for (const Triangle& t : mesh.triangles) {
      const RayHit hit =
          RayTriangle(p, dir, mesh.vertices[t.v[0]], mesh.vertices[t.v[1]],
                      mesh.vertices[t.v[2]]);
      if (hit == RayHit::Ambiguous) {
        ambiguous = true;
        break;
      }
      if (hit == RayHit::Hit) ++crossings;
    }
    if (!ambiguous) return crossings % 2 == 1;
  }
  // Every direction grazed something; fall back to the first direction's
  // strict count.
  int crossings = 0;
  for (const Triangle& t : mesh.triangles) {
    if (RayTriangle(p, kDirs[0], mesh.vertices[t.v[0]], mesh.vertices[t.v[1]],
                    mesh.vertices[t.v[2]]) != RayHit::Miss)
      ++crossings;
  }
  return crossings % 2 == 1;
}

double PointTriangleDistance(Point3 p, Point3 a, Point3 b, Point3 c) {
  // Closest point on triangle via Voronoi regions.
  const Vec3 ab = b - a, ac = c - a, ap = p - a;
  const double d1 = Dot(ab, ap), d2 = Dot(ac, ap);
  if (d1 <= 0 && d2 <= 0) return Distance(p, a);
  const Vec3 bp = p - b;
  const double d3 = Dot(ab, bp), d4 = Dot(ac, bp);
  if (d3 >= 0 && d4 <= d3) return Distance(p, b);
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) {
    const double v = d1 / (d1 - d3);
    return Distance(p, a + ab * v);
  }
  const Vec3 cp = p - c;
  const double d5 = Dot(ab, cp), d6 = Dot(ac, cp);
  if (d6 >= 0 && d5 <= d6) return Distance(p, c);
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) {
    const double w = d2 / (d2 - d6);
    return Distance(p, a + ac * w);
  }
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return Distance(p, b + (c - b) * w);
  }
  const double denom = 1.0 / (va + vb + vc);
  const double v = vb * denom, w = vc * denom;
  return Distance(p, a + ab * v + ac * w);
}

double DistanceToMesh(const TriMesh& mesh, Point3 p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Triangle& t : mesh.triangles) {
    best = std::min(best, PointTriangleDistance(p, mesh.vertices[t.v[0]],
                                                mesh.vertices[t.v[1]],
                                                mesh.vertices[t.v[2]]));
  }
  return best;
}

TriMesh Compact(const TriMesh& mesh) {
  TriMesh out;
  std::vector<int> remap(mesh.vertices.size(), -1);
  for (const Triangle& t : mesh.triangles) {
    Triangle nt = t;
    for (int k = 0; k < 3; ++k) {
      int& r = remap[t.v[k]];
      if (r < 0) {
        r = static_cast<int>(out.vertices.size());
        out.vertices.push_back(mesh.vertices[t.v[k]]);
      }
      nt.v[k] = r;
    }
    out.triangles.push_back(nt);
  }
  out.Finalize();
  return out;
}

}  // namespace meshbool
