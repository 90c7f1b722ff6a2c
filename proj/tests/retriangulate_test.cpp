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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "meshbool/retriangulate.h"

using namespace meshbool;

namespace {

// Shoelace area of a 3D polygon lying in z = const.
double XyArea(const std::vector<int>& ids, const std::vector<Point3>& verts) {
  double s = 0;
  for (size_t i = 0; i < ids.size(); ++i) {
    const Point3 p = verts[ids[i]], q = verts[ids[(i + 1) % ids.size()]];
    s += p.x * q.y - q.x * p.y;
  }
  return s / 2;
}

double TriXyArea(const std::array<int, 3>& t, const std::vector<Point3>& verts) {
  return XyArea({t[0], t[1], t[2]}, verts);
}

double LoopArea(const std::vector<Point2>& loop,
                const std::vector<std::array<int, 3>>& tris) {
  double s = 0;
  for (const auto& t : tris) {
    const Point2 a = loop[t[0]], b = loop[t[1]], c = loop[t[2]];
    s += Cross2(b - a, c - a) / 2;
  }
  return s;
}

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::GeometryError;
}

// Triangle (0,0)-(4,0)-(0,4) with edge points, all in z = 0.
struct Board {
  std::vector<Point3> verts = {{0, 0, 0}, {4, 0, 0}, {0, 4, 0},
                               {2, 0, 0}, {2, 2, 0}, {0, 2, 0}};
};

}  // namespace

TEST(SplitTriangle, NoChordsGivesParent) {
  Board s;
  const std::vector<int> boundary = {0, 1, 2};
  const auto polys = SplitTriangle(boundary, {}, s.verts, 1e-12, 9);
  ASSERT_EQ(polys.size(), 1u);
  EXPECT_EQ(polys[0].boundary.size(), 3u);
  EXPECT_EQ(polys[0].parent_tri, 9);
  EXPECT_NEAR(XyArea(polys[0].boundary, s.verts), 8, 1e-12);
}

TEST(SplitTriangle, OneChordGivesTwoFaces) {
  Board s;
  const std::vector<int> boundary = {0, 3, 1, 2};
  const std::vector<std::pair<int, int>> chords = {{3, 2}};
  const auto polys = SplitTriangle(boundary, chords, s.verts, 1e-12, 0);
  ASSERT_EQ(polys.size(), 2u);
  double total = 0;
  for (const SplitPolygon& p : polys) {
    const double a = XyArea(p.boundary, s.verts);
    EXPECT_GT(a, 0);  // parent winding kept
    EXPECT_NEAR(a, 4, 1e-12);
    total += a;
  }
  EXPECT_NEAR(total, 8, 1e-12);
}

TEST(SplitTriangle, TwoChordsGiveThreeFaces) {
  Board s;
  const std::vector<int> boundary = {0, 3, 1, 4, 2, 5};
  const std::vector<std::pair<int, int>> chords = {{3, 4}, {4, 5}};
  const auto polys = SplitTriangle(boundary, chords, s.verts, 1e-12, 0);
  ASSERT_EQ(polys.size(), 3u);
  double total = 0;
  std::vector<double> areas;
  for (const SplitPolygon& p : polys) {
    areas.push_back(XyArea(p.boundary, s.verts));
    total += areas.back();
  }
  std::sort(areas.begin(), areas.end());
  EXPECT_NEAR(areas[0], 2, 1e-12);
  EXPECT_NEAR(areas[1], 2, 1e-12);
  EXPECT_NEAR(areas[2], 4, 1e-12);
  EXPECT_NEAR(total, 8, 1e-12);
}

TEST(SplitTriangle, InteriorLoopMakesHole) {
  Board s;
  const int base = static_cast<int>(s.verts.size());
  for (Point3 p : {Point3{0.5, 0.5, 0}, Point3{1.5, 0.5, 0}, Point3{0.5, 1.5, 0}})
    s.verts.push_back(p);
  const std::vector<int> boundary = {0, 1, 2};
  const std::vector<std::pair<int, int>> chords = {
      {base, base + 1}, {base + 1, base + 2}, {base + 2, base}};
  const auto polys = SplitTriangle(boundary, chords, s.verts, 1e-12, 0);
  ASSERT_EQ(polys.size(), 2u);
  double total = 0;
  for (const SplitPolygon& p : polys) {
    double a = XyArea(p.boundary, s.verts);
    for (const auto& h : p.holes) a += XyArea(h, s.verts);
    EXPECT_GT(a, 0);
    total += a;
    double tri_sum = 0;
    for (const auto& t : TriangulatePolygon(p, s.verts, {0, 0, 1})) {
      EXPECT_GT(TriXyArea(t, s.verts), 0);
      tri_sum += TriXyArea(t, s.verts);
    }
    EXPECT_NEAR(tri_sum, a, 1e-12);
  }
  EXPECT_NEAR(total, 8, 1e-12);
}

TEST(TriangulatePolygon, ClockwiseParentKeepsWinding) {
  Board s;
  SplitPolygon p;
  p.boundary = {0, 5, 2, 1};  // clockwise seen from +z
  for (const auto& t : TriangulatePolygon(p, s.verts, {0, 0, -1}))
    EXPECT_LT(TriXyArea(t, s.verts), 0);
}

TEST(ToLocalCcw, CcwAndCwSquares) {
  const std::vector<Point3> ccw = {{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  const LocalPolygon a = ToLocalCcw(ccw);
  EXPECT_FALSE(a.reversed);
  EXPECT_NEAR(SignedArea(a.loop), 1, 1e-15);
  std::vector<Point3> cw(ccw.rbegin(), ccw.rend());
  const LocalPolygon b = ToLocalCcw(cw);
  EXPECT_NEAR(SignedArea(b.loop), 1, 1e-15);
  EXPECT_TRUE(b.reversed);
  EXPECT_NEAR(Dot(a.frame.n, b.frame.n), 1, 1e-15);
}

TEST(ToLocalCcw, SkewedPentagonPreservesArea) {
  // Planar pentagon, rotated out of the xy plane.
  const double c = std::cos(0.6), s = std::sin(0.6);
  const std::vector<Point2> flat = {{0, 0}, {2, 0}, {3, 1.5}, {1, 3}, {-1, 1.5}};
  std::vector<Point3> poly;
  for (Point2 p : flat) poly.push_back({p.x, c * p.y, s * p.y + 5});
  const LocalPolygon lp = ToLocalCcw(poly);
  EXPECT_NEAR(SignedArea(lp.loop), SignedArea(flat), 1e-12);
  const LocalFrame& f = lp.frame;
  EXPECT_NEAR(Dot(f.u, f.u), 1, 1e-15);
  EXPECT_NEAR(Dot(f.v, f.v), 1, 1e-15);
  EXPECT_NEAR(Dot(f.u, f.v), 0, 1e-15);
  EXPECT_NEAR(Dot(f.n, f.u), 0, 1e-15);
  EXPECT_NEAR(Norm(Cross(f.u, f.v) - f.n), 0, 1e-15);
}

TEST(ToLocalCcw, CollinearIsDegenerate) {
  const std::vector<Point3> line = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}};
  EXPECT_EQ(KindOf([&] { ToLocalCcw(line); }), ErrorKind::DegeneratePolygon);
}

TEST(EarClip, SmallPolygons) {
  const std::vector<Point2> tri = {{0, 0}, {1, 0}, {0, 1}};
  EXPECT_EQ(EarClip(tri).size(), 1u);
  const std::vector<Point2> quad = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto q = EarClip(quad);
  EXPECT_EQ(q.size(), 2u);
  EXPECT_NEAR(LoopArea(quad, q), 1, 1e-15);
}

TEST(EarClip, RandomStarPolygonsCoverArea) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> radius(0.3, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point2> loop;
    for (int i = 0; i < 10; ++i) {
      const double a = 2 * std::numbers::pi * i / 10, r = radius(rng);
      loop.push_back({r * std::cos(a), r * std::sin(a)});
    }
    const auto tris = EarClip(loop);
    ASSERT_EQ(tris.size(), 8u);
    EXPECT_NEAR(LoopArea(loop, tris), SignedArea(loop), 1e-12);
    for (const auto& t : tris) {
      const Point2 a = loop[t[0]], b = loop[t[1]], c = loop[t[2]];
      EXPECT_GT(Cross2(b - a, c - a), 0);
    }
  }
}

TEST(EarClip, BowtieIsNotSimple) {
  const std::vector<Point2> bowtie = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  EXPECT_EQ(KindOf([&] { EarClip(bowtie); }), ErrorKind::NotSimple);
}

TEST(SplitTriangle, FreeEndedChordBecomesSlit) {
  Board s;
  const int tip = static_cast<int>(s.verts.size());
  s.verts.push_back({1.5, 1, 0});
  const std::vector<int> boundary = {0, 3, 1, 2};
  const std::vector<std::pair<int, int>> chords = {{3, tip}};
  const auto polys = SplitTriangle(boundary, chords, s.verts, 1e-12, 0);
  ASSERT_EQ(polys.size(), 1u);
  const auto tris = TriangulatePolygon(polys[0], s.verts, {0, 0, 1});
  double area = 0;
  bool has_slit = false;
  for (const auto& t : tris) {
    EXPECT_GT(TriXyArea(t, s.verts), 1e-12);
    area += TriXyArea(t, s.verts);
    for (int k = 0; k < 3; ++k)
      has_slit |= std::minmax(t[k], t[(k + 1) % 3]) == std::minmax(3, tip);
  }
  EXPECT_NEAR(area, 8, 1e-12);
  EXPECT_TRUE(has_slit);
}
