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

#include "meshbool/broadphase.h"

#include <algorithm>
#include <unordered_set>

namespace meshbool {

namespace {

Aabb CubeAround(const Aabb& box) {
  const Point3 c = box.Center();
  const double half = 0.5 * box.MaxExtent();
  Aabb cube;
  cube.min = {c.x - half, c.y - half, c.z - half};
  cube.max = {c.x + half, c.y + half, c.z + half};
  return cube;
}

Aabb Octant(const Aabb& box, int i) {
  const Point3 c = box.Center();
  Aabb child;
  child.min = {(i & 1) ? c.x : box.min.x, (i & 2) ? c.y : box.min.y,
               (i & 4) ? c.z : box.min.z};
  child.max = {(i & 1) ? box.max.x : c.x, (i & 2) ? box.max.y : c.y,
               (i & 4) ? box.max.z : c.z};
  return child;
}

void Split(OctreeNode& node, std::vector<int> a, std::vector<int> b,
           const std::vector<Aabb>& boxes_a, const std::vector<Aabb>& boxes_b,
           const OctreeConfig& cfg) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  const bool leaf = node.depth >= cfg.max_depth ||
                    (na <= cfg.leaf_capacity && nb <= cfg.leaf_capacity) ||
                    na == 0 || nb == 0;
  if (leaf) {
    node.tris_a = std::move(a);
    node.tris_b = std::move(b);
    return;
  }
  node.children.resize(8);
  for (int i = 0; i < 8; ++i) {
    OctreeNode& child = node.children[i];
    child.bounds = Octant(node.bounds, i);
    child.depth = node.depth + 1;
    std::vector<int> ca, cb;
    for (int t : a)
      if (boxes_a[t].Overlaps(child.bounds)) ca.push_back(t);
    for (int t : b)
      if (boxes_b[t].Overlaps(child.bounds)) cb.push_back(t);
    Split(child, std::move(ca), std::move(cb), boxes_a, boxes_b, cfg);
  }
}

template <typename Visit>
void ForEachLeaf(const OctreeNode& node, Visit&& visit) {
  if (node.IsLeaf()) {
    visit(node);
    return;
  }
  for (const OctreeNode& child : node.children) ForEachLeaf(child, visit);
}

}  // namespace

std::vector<Aabb> TriangleBoxes(const TriMesh& mesh) {
  std::vector<Aabb> boxes(mesh.triangles.size());
  for (size_t i = 0; i < mesh.triangles.size(); ++i)
    boxes[i] = TriangleAabb(mesh, static_cast<int>(i));
  return boxes;
}

SharedRegion ClipToSharedRegion(const TriMesh& a, const TriMesh& b,
                                const std::vector<Aabb>& boxes_a,
                                const std::vector<Aabb>& boxes_b) {
  SharedRegion region;
  region.shared = AabbIntersection(MeshAabb(a), MeshAabb(b));
  if (region.shared.IsEmpty()) return region;

  Aabb cover = region.shared;
  for (size_t i = 0; i < boxes_a.size(); ++i) {
    if (boxes_a[i].Overlaps(region.shared)) {
      region.a_in.push_back(static_cast<int>(i));
      cover.Include(boxes_a[i]);
    }
  }
  for (size_t i = 0; i < boxes_b.size(); ++i) {
    if (boxes_b[i].Overlaps(region.shared)) {
      region.b_in.push_back(static_cast<int>(i));
      cover.Include(boxes_b[i]);
    }
  }
  // The cube keeps the shared box's center and grows until it also covers
  // every clipped triangle box.
  Aabb cube = CubeAround(region.shared);
  cube.Include(cover);
  cube = CubeAround(cube);
  const double side = cube.MaxExtent();
  const double pad = 1e-9 * (side > 0 ? side : 1.0);
  cube.min = cube.min - Vec3{pad, pad, pad};
  cube.max = cube.max + Vec3{pad, pad, pad};
  region.root_cube = cube;
  return region;
}

OctreeNode BuildOctree(const std::vector<int>& a_in,
                       const std::vector<Aabb>& boxes_a,
                       const std::vector<int>& b_in,
                       const std::vector<Aabb>& boxes_b, const Aabb& root,
                       const OctreeConfig& cfg) {
  if (cfg.max_depth < 1 || cfg.leaf_capacity < 1)
    throw Error(ErrorKind::GeometryError,
                "octree depth and capacity must be positive");
  OctreeNode node;
  node.bounds = root;
  node.depth = 0;
  Split(node, a_in, b_in, boxes_a, boxes_b, cfg);
  return node;
}

std::vector<CandidatePair> CandidatePairs(const OctreeNode& tree) {
  std::unordered_set<uint64_t> seen;
  std::vector<CandidatePair> pairs;
  ForEachLeaf(tree, [&](const OctreeNode& leaf) {
    for (int ta : leaf.tris_a)
      for (int tb : leaf.tris_b)
        if (seen.insert(EdgeKey(ta, tb)).second) pairs.push_back({ta, tb});
  });
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<CandidatePair> CandidatePairs(const OctreeNode& tree,
                                          const std::vector<Aabb>& boxes_a,
                                          const std::vector<Aabb>& boxes_b) {
  std::unordered_set<uint64_t> seen;
  std::vector<CandidatePair> pairs;
  ForEachLeaf(tree, [&](const OctreeNode& leaf) {
    for (int ta : leaf.tris_a) {
      for (int tb : leaf.tris_b) {
        if (!boxes_a[ta].Overlaps(boxes_b[tb])) continue;
        if (seen.insert(EdgeKey(ta, tb)).second) pairs.push_back({ta, tb});
      }
    }
  });
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<CandidatePair> FindCandidatePairs(const TriMesh& a,
                                              const TriMesh& b,
                                              const OctreeConfig& cfg) {
  const std::vector<Aabb> boxes_a = TriangleBoxes(a);
  const std::vector<Aabb> boxes_b = TriangleBoxes(b);
  const SharedRegion region = ClipToSharedRegion(a, b, boxes_a, boxes_b);
  if (region.a_in.empty() || region.b_in.empty()) return {};
  const OctreeNode tree = BuildOctree(region.a_in, boxes_a, region.b_in,
                                      boxes_b, region.root_cube, cfg);
  return CandidatePairs(tree, boxes_a, boxes_b);
}

}  // namespace meshbool
