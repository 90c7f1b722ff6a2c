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

#include <functional>
#include <map>

#include "fixtures.h"
#include "meshbool/blocks.h"
#include "meshbool/pipeline.h"

using namespace meshbool;
using namespace meshbool::fixtures;

namespace {

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::GeometryError;
}

double Volume(const std::vector<TriMesh>& parts) {
  double v = 0;
  for (const TriMesh& m : parts) v += SignedVolume(m);
  return v;
}

// Whether a sub-surface lies inside the other input, decided at the
// centroid of its first triangle.
bool InsideOther(const SubSurface& sf, const MergedState& m, const Pair& p) {
  const Triangle& t = m.triangles[sf.triangles.front()];
  const Point3 c = (m.vertices[t.v[0]] + m.vertices[t.v[1]] + m.vertices[t.v[2]]) / 3;
  return PointInMesh(sf.source == SurfaceTag::A ? p.b : p.a, c);
}

}  // namespace

TEST(Blocks, CubeCubeSetsAndLabels) {
  const Pair p = CubeCube();
  const PipelineState st = RunPipeline(p.a, p.b);
  ASSERT_EQ(st.blocks.size(), 4u);
  // Name the four sub-surfaces by side and inclusion.
  std::map<std::pair<SurfaceTag, bool>, int> id;
  for (const SubSurface& sf : st.surfaces)
    id[{sf.source, InsideOther(sf, st.merged, p)}] = sf.id;
  ASSERT_EQ(id.size(), 4u);
  const int a_out = id[{SurfaceTag::A, false}], a_in = id[{SurfaceTag::A, true}];
  const int b_out = id[{SurfaceTag::B, false}], b_in = id[{SurfaceTag::B, true}];
  auto sorted = [](int x, int y) { return std::vector<int>{std::min(x, y), std::max(x, y)}; };

  std::map<BlockLabel, const SubBlock*> by_label;
  for (const SubBlock& b : st.blocks) {
    EXPECT_TRUE(b.closed);
    by_label[b.label] = &b;
  }
  ASSERT_EQ(by_label.size(), 4u);
  EXPECT_EQ(by_label[BlockLabel::Union]->surfaces, sorted(a_out, b_out));
  EXPECT_EQ(by_label[BlockLabel::Intersection]->surfaces, sorted(a_in, b_in));
  EXPECT_EQ(by_label[BlockLabel::AMinusB]->surfaces, sorted(a_out, b_in));
  EXPECT_EQ(by_label[BlockLabel::BMinusA]->surfaces, sorted(a_in, b_out));
  EXPECT_EQ(by_label[BlockLabel::AMinusB]->reversed, std::vector<int>{b_in});
  EXPECT_EQ(by_label[BlockLabel::BMinusA]->reversed, std::vector<int>{a_in});
  EXPECT_TRUE(by_label[BlockLabel::Union]->reversed.empty());
  EXPECT_EQ(by_label[BlockLabel::Union]->pairing, Pairing::Opposite);
  EXPECT_EQ(by_label[BlockLabel::Intersection]->pairing, Pairing::Opposite);
  EXPECT_EQ(by_label[BlockLabel::AMinusB]->pairing, Pairing::Same);
  EXPECT_EQ(by_label[BlockLabel::BMinusA]->pairing, Pairing::Same);

  for (const SubBlock& b : st.blocks) {
    const double v = SignedVolume(BlockMesh(b, st.surfaces, st.merged));
    const double want = b.label == BlockLabel::Union          ? 1.875
                        : b.label == BlockLabel::Intersection ? 0.125
                                                              : 0.875;
    EXPECT_NEAR(v, want, 1e-12) << BlockLabelName(b.label);
  }
}

TEST(Blocks, PickUnionUsesExtrema) {
  const Pair p = CubeCube();
  PipelineState st = RunPipeline(p.a, p.b);
  std::vector<int> candidates;
  for (size_t i = 0; i < st.blocks.size(); ++i)
    if (st.blocks[i].pairing == Pairing::Opposite) candidates.push_back(static_cast<int>(i));
  ASSERT_EQ(candidates.size(), 2u);
  const UnionPick pick = PickUnion(st.blocks, candidates, st.surfaces, st.merged);
  EXPECT_FALSE(pick.ambiguous);
  ASSERT_GE(pick.union_block, 0);
  EXPECT_EQ(st.blocks[pick.union_block].label, BlockLabel::Union);
  ASSERT_EQ(pick.intersection_blocks.size(), 1u);
  EXPECT_EQ(st.blocks[pick.intersection_blocks[0]].label, BlockLabel::Intersection);
  EXPECT_EQ(KindOf([&] { PickUnion(st.blocks, {}, st.surfaces, st.merged); }),
            ErrorKind::ClassificationError);
}

TEST(Blocks, CylinderSubtractionsConserveVolume) {
  const Pair p = CrossedCylinders();
  const PipelineState st = RunPipeline(p.a, p.b);
  ASSERT_TRUE(st.result);
  const BooleanResult& r = *st.result;
  // Each cylinder is cut in two by the other.
  ASSERT_EQ(r.a_minus_b.size(), 2u);
  ASSERT_EQ(r.b_minus_a.size(), 2u);
  const double va = SignedVolume(p.a), vb = SignedVolume(p.b);
  const double vi = Volume(r.intersections);
  EXPECT_NEAR(Volume(r.a_minus_b), va - vi, 1e-9 * va);
  EXPECT_NEAR(Volume(r.b_minus_a), vb - vi, 1e-9 * vb);
  EXPECT_NEAR(Volume(r.unions), va + vb - vi, 1e-9 * va);
  for (const TriMesh& m : r.a_minus_b) EXPECT_TRUE(IsClosedManifold(m));
}

TEST(Blocks, OpenInputsGiveBlocksButNoResult) {
  const Pair p = BlobPlane();
  const PipelineState st = RunPipeline(p.a, p.b);
  EXPECT_FALSE(st.result);
  EXPECT_EQ(st.blocks.size(), 4u);
}

TEST(TrivialResult, FarApartCubes) {
  const TriMesh a = Box({0, 0, 0}, {1, 1, 1});
  const TriMesh b = Box({5, 5, 5}, {6, 7, 8}, SurfaceTag::B);
  const PipelineState st = RunPipeline(a, b);
  EXPECT_TRUE(st.trivial);
  ASSERT_TRUE(st.result);
  EXPECT_EQ(st.result->unions.size(), 2u);
  EXPECT_NEAR(Volume(st.result->unions), 7, 1e-12);
  EXPECT_TRUE(st.result->intersections.empty());
  EXPECT_NEAR(Volume(st.result->a_minus_b), 1, 1e-12);
  EXPECT_NEAR(Volume(st.result->b_minus_a), 6, 1e-12);
}

TEST(TrivialResult, NestedCubes) {
  const TriMesh a = Box({0, 0, 0}, {4, 4, 4});
  const TriMesh b = Box({1, 1, 1}, {2, 3, 2}, SurfaceTag::B);
  const BooleanResult r = TrivialResult(a, b, 1e-9);
  EXPECT_NEAR(Volume(r.unions), 64, 1e-12);
  EXPECT_NEAR(Volume(r.intersections), 2, 1e-12);
  EXPECT_NEAR(Volume(r.a_minus_b), 62, 1e-12);
  EXPECT_TRUE(r.b_minus_a.empty());
  // Reverse nesting swaps the roles.
  const BooleanResult s = TrivialResult(b, a, 1e-9);
  EXPECT_TRUE(s.a_minus_b.empty());
  EXPECT_NEAR(Volume(s.b_minus_a), 62, 1e-12);
}

TEST(TrivialResult, CoincidentInputsRejected) {
  const TriMesh a = Box({0, 0, 0}, {1, 1, 1});
  const TriMesh b = Box({0, 0, 0}, {1, 1, 1}, SurfaceTag::B);
  EXPECT_EQ(KindOf([&] { RejectCoincident(a, b, 1e-9); }), ErrorKind::CoincidentInput);
  EXPECT_EQ(KindOf([&] { RunPipeline(a, b); }), ErrorKind::CoincidentInput);
}

TEST(BlockLabelName, Names) {
  EXPECT_EQ(BlockLabelName(BlockLabel::Union), "union");
  EXPECT_EQ(BlockLabelName(BlockLabel::AMinusB), "a_minus_b");
}
