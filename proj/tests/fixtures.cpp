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

#include "fixtures.h"

#include <cmath>
#include <map>
#include <numbers>

namespace meshbool::fixtures {

namespace {

constexpr double kPi = std::numbers::pi;

void AddQuad(TriMesh& m, int a, int b, int c, int d) {
  m.triangles.push_back({{a, b, c}});
  m.triangles.push_back({{a, c, d}});
}

TriMesh Done(TriMesh m, SurfaceTag tag) {
  m.Finalize(tag);
  return m;
}

}  // namespace

Point3 Rotation::Apply(Point3 p) const {
  return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
          m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
          m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z};
}

Rotation Rotation::AxisAngle(Vec3 axis, double angle) {
  const Vec3 k = Normalized(axis);
  const double c = std::cos(angle), s = std::sin(angle), t = 1 - c;
  Rotation r;
  r.m[0][0] = t * k.x * k.x + c;
  r.m[0][1] = t * k.x * k.y - s * k.z;
  r.m[0][2] = t * k.x * k.z + s * k.y;
  r.m[1][0] = t * k.x * k.y + s * k.z;
  r.m[1][1] = t * k.y * k.y + c;
  r.m[1][2] = t * k.y * k.z - s * k.x;
  r.m[2][0] = t * k.x * k.z - s * k.y;
  r.m[2][1] = t * k.y * k.z + s * k.x;
  r.m[2][2] = t * k.z * k.z + c;
  return r;
}

TriMesh Transformed(TriMesh mesh, const Rotation& r, Vec3 t) {
  for (Point3& p : mesh.vertices) p = r.Apply(p) + t;
  return mesh;
}

TriMesh Box(Point3 lo, Point3 hi, SurfaceTag tag) {
  TriMesh m;
  for (int i = 0; i < 8; ++i)
    m.vertices.push_back({i & 1 ? hi.x : lo.x, i & 2 ? hi.y : lo.y,
                          i & 4 ? hi.z : lo.z});
  AddQuad(m, 0, 4, 6, 2);
  AddQuad(m, 1, 3, 7, 5);
  AddQuad(m, 0, 1, 5, 4);
  AddQuad(m, 2, 6, 7, 3);
  AddQuad(m, 0, 2, 3, 1);
  AddQuad(m, 4, 5, 7, 6);
  return Done(m, tag);
}

TriMesh StarShaped(int levels, const std::function<double(Vec3)>& radius,
                   SurfaceTag tag) {
  const double g = (1 + std::sqrt(5.0)) / 2;
  TriMesh m;
  m.vertices = {{-1, g, 0}, {1, g, 0},  {-1, -g, 0}, {1, -g, 0},
                {0, -1, g}, {0, 1, g},  {0, -1, -g}, {0, 1, -g},
                {g, 0, -1}, {g, 0, 1},  {-g, 0, -1}, {-g, 0, 1}};
  for (Point3& p : m.vertices) p = Normalized(p);
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int l = 0; l < levels; ++l) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      m.vertices.push_back(Normalized((m.vertices[a] + m.vertices[b]) * 0.5));
      return mid[key] = static_cast<int>(m.vertices.size()) - 1;
    };
    std::vector<std::array<int, 3>> next;
    for (const auto& f : faces) {
      const int a = midpoint(f[0], f[1]), b = midpoint(f[1], f[2]),
                c = midpoint(f[2], f[0]);
      next.push_back({f[0], a, c});
      next.push_back({f[1], b, a});
      next.push_back({f[2], c, b});
      next.push_back({a, b, c});
    }
    faces = std::move(next);
  }
  for (Point3& p : m.vertices) p = p * radius(p);
  for (const auto& f : faces) m.triangles.push_back({f});
  return Done(m, tag);
}

TriMesh Sphere(double r, int levels, SurfaceTag tag) {
  return StarShaped(levels, [r](Vec3) { return r; }, tag);
}

TriMesh CylinderX(double radius, double half, int n, SurfaceTag tag) {
  TriMesh m;
  for (int end = 0; end < 2; ++end) {
    for (int k = 0; k < n; ++k) {
      const double th = kPi / 2 + 2 * kPi * k / n;
      double c = std::cos(th), s = std::sin(th);
      if (std::abs(c) < 1e-12) c = 0;
      if (std::abs(s) < 1e-12) s = 0;
      m.vertices.push_back({end ? half : -half, radius * c, radius * s});
    }
  }
  m.vertices.push_back({-half, 0, 0});
  m.vertices.push_back({half, 0, 0});
  const int c0 = 2 * n, c1 = 2 * n + 1;
  for (int k = 0; k < n; ++k) {
    const int k1 = (k + 1) % n;
    AddQuad(m, k, k1, n + k1, n + k);
    m.triangles.push_back({{c1, n + k, n + k1}});
    m.triangles.push_back({{c0, k1, k}});
  }
  return Done(m, tag);
}

TriMesh Torus(double major, double minor, int nu, int nv, SurfaceTag tag) {
  TriMesh m;
  for (int i = 0; i < nu; ++i) {
    const double u = 2 * kPi * i / nu;
    for (int j = 0; j < nv; ++j) {
      const double v = 2 * kPi * j / nv;
      const double w = major + minor * std::cos(v);
      m.vertices.push_back({w * std::cos(u), w * std::sin(u),
                            minor * std::sin(v)});
    }
  }
  auto at = [&](int i, int j) { return (i % nu) * nv + (j % nv); };
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j)
      AddQuad(m, at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
  return Done(m, tag);
}

TriMesh ExtrudedSheet(const std::vector<Point3>& polyline, double z0,
                      double z1, int layers, SurfaceTag tag) {
  TriMesh m;
  const int n = static_cast<int>(polyline.size());
  for (int j = 0; j <= layers; ++j)
    for (const Point3& p : polyline)
      m.vertices.push_back({p.x, p.y, z0 + (z1 - z0) * j / layers});
  for (int j = 0; j < layers; ++j)
    for (int i = 0; i + 1 < n; ++i)
      AddQuad(m, j * n + i, j * n + i + 1, (j + 1) * n + i + 1,
              (j + 1) * n + i);
  return Done(m, tag);
}

TriMesh Plane(double half, double z, int n, SurfaceTag tag) {
  TriMesh m;
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      m.vertices.push_back(
          {-half + 2 * half * i / n, -half + 2 * half * j / n, z});
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      AddQuad(m, j * (n + 1) + i, j * (n + 1) + i + 1,
              (j + 1) * (n + 1) + i + 1, (j + 1) * (n + 1) + i);
  return Done(m, tag);
}

TriMesh ThreeLobeBlob(int levels, SurfaceTag tag) {
  std::vector<Vec3> lobes;
  const double tilt = kPi / 4;
  for (int i = 0; i < 3; ++i) {
    const double az = 0.37 + 2 * kPi * i / 3;
    lobes.push_back({std::sin(tilt) * std::cos(az),
                     std::sin(tilt) * std::sin(az), -std::cos(tilt)});
  }
  return StarShaped(
      levels,
      [&](Vec3 u) {
        double r = 1;
        for (const Vec3& d : lobes) r += 1.2 * std::pow(std::max(0.0, Dot(u, d)), 12);
        return r;
      },
      tag);
}

Pair CubeCube() {
  return {Box({0, 0, 0}, {1, 1, 1}, SurfaceTag::A),
          Box({0.5, 0.5, 0.5}, {1.5, 1.5, 1.5}, SurfaceTag::B)};
}

Pair CubeSphere() {
  TriMesh s = Transformed(Sphere(1.2, 3, SurfaceTag::B),
                          Rotation::AxisAngle({0.3, 0.7, 0.2}, 0.41));
  s.Finalize(SurfaceTag::B);
  return {Box({-1, -1, -1}, {1, 1, 1}, SurfaceTag::A), s};
}

Pair CrossedCylinders() {
  Rotation quarter;  // exact quarter turn about z: x -> y
  quarter.m[0][0] = 0;
  quarter.m[0][1] = -1;
  quarter.m[1][0] = 1;
  quarter.m[1][1] = 0;
  TriMesh b = Transformed(CylinderX(1, 3, 22, SurfaceTag::B), quarter);
  b.Finalize(SurfaceTag::B);
  return {CylinderX(1, 3, 22, SurfaceTag::A), b};
}

Pair Tori() {
  TriMesh b = Transformed(Torus(2, 0.6, 48, 20, SurfaceTag::B), Rotation(),
                          {2.1, 0.35, 0.12});
  b.Finalize(SurfaceTag::B);
  return {Torus(2, 0.6, 48, 20, SurfaceTag::A), b};
}

Pair VeeWee() {
  const std::vector<Point3> vee = {{-2.5, 1.5, 0}, {0, -1, 0}, {2.5, 1.5, 0}};
  const std::vector<Point3> wee = {
      {-2.4, 2.0, 0}, {-1.6, -0.2, 0}, {0, 0.8, 0}, {1.6, -0.2, 0}, {2.4, 2.0, 0}};
  return {ExtrudedSheet(vee, -1, 1, 4, SurfaceTag::A),
          ExtrudedSheet(wee, -1, 1, 4, SurfaceTag::B)};
}

Pair BlobPlane() {
  TriMesh plane = Transformed(Plane(3, 0, 17, SurfaceTag::B),
                              Rotation::AxisAngle({1, 0.3, 0}, 0.05),
                              {0.013, -0.021, -1.3});
  plane.Finalize(SurfaceTag::B);
  return {ThreeLobeBlob(4, SurfaceTag::A), plane};
}

Pair RandomConvexPair(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> axis(0.6, 1.4), unit(-1, 1),
      angle(0, 2 * kPi), dist(0.4, 1.1);
  auto one = [&](SurfaceTag tag) {
    TriMesh m = rng() % 2
                    ? Sphere(1, 2, tag)
                    : Box({-1, -1, -1}, {1, 1, 1}, tag);
    const Vec3 s{axis(rng), axis(rng), axis(rng)};
    for (Point3& p : m.vertices) p = {p.x * s.x, p.y * s.y, p.z * s.z};
    return Transformed(m, Rotation::AxisAngle({unit(rng), unit(rng), unit(rng)},
                                              angle(rng)));
  };
  TriMesh a = one(SurfaceTag::A);
  TriMesh b = one(SurfaceTag::B);
  const Vec3 dir = Normalized({unit(rng), unit(rng), unit(rng)});
  b = Transformed(b, Rotation(), dir * dist(rng));
  a.Finalize(SurfaceTag::A);
  b.Finalize(SurfaceTag::B);
  return {a, b};
}

}  // namespace meshbool::fixtures
