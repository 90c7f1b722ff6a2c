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
#include <optional>
#include <string>
#include <vector>

#include "meshbool/blocks.h"
#include "meshbool/broadphase.h"
#include "meshbool/loops.h"
#include "meshbool/narrowphase.h"
#include "meshbool/subsurface.h"
#include "meshbool/topology.h"

namespace meshbool {

struct PipelineOptions {
  OctreeConfig octree;
  double merge_tol = 0;  // 0 = 1e-9 of the shared root cube side
  double plane_eps = 0;  // 0 = 1e-12 of the shared root cube side
  int threads = 1;       // 0 = hardware concurrency
  bool strict = false;
  bool stop_after_surfaces = false;
};

inline constexpr std::array<const char*, 6> kStageNames = {
    "broad_phase", "narrow_phase", "retriangulate_merge",
    "loops",       "sub_surfaces", "sub_blocks"};

struct StageTiming {
  std::string name;
  double seconds = 0;
};

struct PipelineState {
  TriMesh a, b;
  std::vector<CandidatePair> pairs;
  std::vector<IntersectionSegment> segments;
  std::vector<CandidatePair> coplanar;
  MergedState merged;
  std::vector<OrientedLoop> loops;  // loop id == index
  std::vector<int> dangling_loops;
  std::vector<SubSurface> surfaces;  // surface id == index
  std::vector<SubBlock> blocks;
  std::optional<BooleanResult> result;
  std::vector<StageTiming> timings;
  std::vector<std::string> warnings;
  double root_side = 0;
  double merge_tol = 0;
  bool trivial = false;  // surfaces do not cross; result from containment
};

/// Runs the six stages on two finalized meshes. Errors propagate as
/// meshbool::Error with the failing stage named in the message.
PipelineState RunPipeline(const TriMesh& a, const TriMesh& b,
                          const PipelineOptions& opts = {});

/// Raw weld and split of the narrow-phase segments, re-triangulation of
/// every cut triangle of both inputs and topology clearing. Exposed for
/// tests; RunPipeline calls it as its third stage.
MergedState RetriangulateAndMerge(const TriMesh& a, const TriMesh& b,
                                  const std::vector<IntersectionSegment>& segs,
                                  double tol);

}  // namespace meshbool
