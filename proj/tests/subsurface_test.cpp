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

#include <map>
#include <set>

#include "fixtures.h"
#include "meshbool/pipeline.h"
#include "meshbool/subsurface.h"

using namespace meshbool;
using namespace meshbool::fixtures;

namespace {

PipelineState Surfaces(const Pair& p) {
  PipelineOptions opts;
  opts.stop_after_surfaces = true;
  return RunPipeline(p.a, p.b, opts);
}

// Sphere pierced by a thin box: two loops on each surface.
Pair SpherePierced() {
  Pair p;
  p.a = Sphere(1, 3);
  p.b = Transformed(Box({-0.3, -0.27, -2}, {0.31, 0.29, 2}, SurfaceTag::B),
                    Rotation::AxisAngle({0.2, 1, 0.1}, 0.07), {0.013, -0.02, 0});
  return p;
}

std::vector<const SubSurface*> On(const PipelineState& st, SurfaceTag tag) {
  std::vector<const SubSurface*> out;
  for (const SubSurface& sf : st.surfaces)
    if (sf.source == tag) out.push_back(&sf);
  return out;
}

// Directed edges of a triangle set whose reverse is not in the set. Rim
// edges of an open surface (no reverse anywhere on it) are left out.
std::set<std::pair<int, int>> OpenBoundary(const SubSurface& sf,
                                           const MergedState& m) {
  std::set<std::pair<int, int>> directed, whole;
  for (size_t t = 0; t < m.triangles.size(); ++t) {
    if (m.triangles[t].source != sf.source) continue;
    for (int k = 0; k < 3; ++k)
      whole.insert({m.triangles[t].v[k], m.triangles[t].v[(k + 1) % 3]});
  }
  for (int t : sf.triangles)
    for (int k = 0; k < 3; ++k)
      directed.insert({m.triangles[t].v[k], m.triangles[t].v[(k + 1) % 3]});
  std::set<std::pair<int, int>> out;
  for (const auto& [a, b] : directed)
    if (!directed.contains({b, a}) && whole.contains({b, a})) out.insert({a, b});
  return out;
}

}  // namespace

TEST(SubSurfaces, SingleLoopGivesTwoPrivate) {
  const PipelineState st = Surfaces(CubeCube());
  for (SurfaceTag tag : {SurfaceTag::A, SurfaceTag::B}) {
    const auto surfs = On(st, tag);
    ASSERT_EQ(surfs.size(), 2u);
    for (const SubSurface* sf : surfs) {
      EXPECT_FALSE(sf->is_public);
      EXPECT_EQ(sf->owners.size(), 1u);
    }
    EXPECT_NE(surfs[0]->owners[0].sign, surfs[1]->owners[0].sign);
  }
}

TEST(SubSurfaces, TwoLoopsGiveCapsAndBand) {
  const PipelineState st = Surfaces(SpherePierced());
  ASSERT_EQ(st.loops.size(), 2u);
  for (SurfaceTag tag : {SurfaceTag::A, SurfaceTag::B}) {
    const auto surfs = On(st, tag);
    ASSERT_EQ(surfs.size(), 3u);
    int pub = 0, priv = 0;
    for (const SubSurface* sf : surfs) {
      if (sf->is_public) {
        ++pub;
        std::set<int> loops;
        for (const LoopUse& u : sf->owners) loops.insert(u.loop);
        EXPECT_EQ(loops, (std::set<int>{0, 1}));
      } else {
        ++priv;
        EXPECT_EQ(sf->owners.size(), 1u);
      }
    }
    EXPECT_EQ(pub, 1);
    EXPECT_EQ(priv, 2);
  }
}

TEST(SubSurfaces, ReferenceFixtureCounts) {
  for (const Pair& p : {CrossedCylinders(), BlobPlane()}) {
    const PipelineState st = Surfaces(p);
    EXPECT_EQ(On(st, SurfaceTag::A).size(), 4u);
    EXPECT_EQ(On(st, SurfaceTag::B).size(), 4u);
  }
  const PipelineState vw = Surfaces(VeeWee());
  EXPECT_EQ(On(vw, SurfaceTag::A).size(), 5u);
  EXPECT_EQ(On(vw, SurfaceTag::B).size(), 5u);
}

TEST(SubSurfaces, CoverageAndDisjointness) {
  for (const Pair& p : {CubeCube(), CubeSphere(), CrossedCylinders(), Tori(),
                        VeeWee(), BlobPlane(), SpherePierced()}) {
    const PipelineState st = Surfaces(p);
    std::vector<int> hits(st.merged.triangles.size(), 0);
    for (const SubSurface& sf : st.surfaces) {
      EXPECT_TRUE(std::is_sorted(sf.triangles.begin(), sf.triangles.end()));
      for (int t : sf.triangles) {
        ++hits[t];
        EXPECT_EQ(st.merged.triangles[t].source, sf.source);
      }
    }
    for (size_t t = 0; t < hits.size(); ++t) EXPECT_EQ(hits[t], 1) << "triangle " << t;
  }
}

TEST(SubSurfaces, BoundaryReproducesOwnerLoops) {
  for (const Pair& p : {CubeCube(), CubeSphere(), CrossedCylinders(), Tori(),
                        BlobPlane(), SpherePierced()}) {
    const PipelineState st = Surfaces(p);
    for (const SubSurface& sf : st.surfaces) {
      std::set<std::pair<int, int>> expected;
      for (const LoopUse& u : sf.owners) {
        const std::vector<int>& v = st.loops[u.loop].verts;
        for (size_t i = 0; i + 1 < v.size(); ++i)
          expected.insert(u.sign > 0 ? std::pair(v[i], v[i + 1])
                                     : std::pair(v[i + 1], v[i]));
      }
      EXPECT_EQ(OpenBoundary(sf, st.merged), expected) << "sub-surface " << sf.id;
    }
  }
}

TEST(GrowSubSurface, TwoSidesPartitionTheSurface) {
  const PipelineState st = Surfaces(CubeCube());
  const OrientedLoop& loop = st.loops.at(0);
  for (SurfaceTag tag : {SurfaceTag::A, SurfaceTag::B}) {
    const SurfaceAdjacency adj = MakeAdjacency(st.merged, tag, st.merged.edges);
    const SubSurface plus = GrowSubSurface(loop, +1, st.merged, adj);
    const SubSurface minus = GrowSubSurface(loop, -1, st.merged, adj);
    std::set<int> all(plus.triangles.begin(), plus.triangles.end());
    for (int t : minus.triangles) EXPECT_TRUE(all.insert(t).second);
    int on_surface = 0;
    for (const Triangle& t : st.merged.triangles) on_surface += t.source == tag;
    EXPECT_EQ(static_cast<int>(all.size()), on_surface);
  }
}

TEST(ClassifySubSurfaces, CleanFixturesHaveNoIssues) {
  for (const Pair& p : {CubeCube(), CrossedCylinders(), SpherePierced()}) {
    const PipelineState st = Surfaces(p);
    EXPECT_TRUE(ClassifySubSurfaces(st.surfaces).empty());
  }
}
