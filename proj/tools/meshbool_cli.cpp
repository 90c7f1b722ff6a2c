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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "meshbool/mesh_io.h"
#include "meshbool/pipeline.h"

namespace fs = std::filesystem;
using namespace meshbool;

namespace {

const std::vector<std::string> kOps = {"union",        "intersect",
                                       "subtract-ab",  "subtract-ba",
                                       "all",          "split-surfaces",
                                       "intersect-open"};

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput:
    case ErrorKind::ParseError:
    case ErrorKind::IoError:
      return 2;
    case ErrorKind::NotClosed:
    case ErrorKind::DegenerateTriangle:
    case ErrorKind::CoplanarPair:
    case ErrorKind::GeometryError:
    case ErrorKind::DegeneratePolygon:
    case ErrorKind::NotSimple:
      return 3;
    case ErrorKind::TopologyError:
    case ErrorKind::DanglingLoop:
    case ErrorKind::AssemblyError:
      return 4;
    case ErrorKind::ClassificationError:
    case ErrorKind::CoincidentInput:
      return 5;
  }
  return 1;
}

// All components of one result in a single mesh.
TriMesh Concat(const std::vector<TriMesh>& parts) {
  TriMesh out;
  for (const TriMesh& m : parts) {
    const int offset = static_cast<int>(out.vertices.size());
    out.vertices.insert(out.vertices.end(), m.vertices.begin(), m.vertices.end());
    for (Triangle t : m.triangles) {
      for (int& v : t.v) v += offset;
      out.triangles.push_back(t);
    }
  }
  out.Finalize();
  return out;
}

void Save(const TriMesh& mesh, const std::string& path) {
  std::vector<std::string> warnings;
  SaveMesh(mesh, path, &warnings);
  for (const std::string& w : warnings)
    std::fprintf(stderr, "warning: %s\n", w.c_str());
  std::printf("wrote %s (%zu triangles)\n", path.c_str(), mesh.triangles.size());
}

TriMesh Load(const std::string& path, SurfaceTag tag) {
  std::vector<std::string> warnings;
  TriMesh mesh = LoadMesh(path, &warnings);
  for (const std::string& w : warnings)
    std::fprintf(stderr, "warning: %s\n", w.c_str());
  mesh.Finalize(tag);
  return mesh;
}

int Run(const std::string& op, const std::string& pathA,
        const std::string& pathB, const std::string& out,
        const PipelineOptions& opts, const std::string& debugJson) {
  const TriMesh a = Load(pathA, SurfaceTag::A);
  const TriMesh b = Load(pathB, SurfaceTag::B);
  const bool surfacesOnly = op == "split-surfaces" || op == "intersect-open";
  if (op == "intersect-open" && a.closed && b.closed)
    throw Error(ErrorKind::ClassificationError,
                "intersect-open needs at least one open input");

  PipelineOptions run = opts;
  run.stop_after_surfaces = surfacesOnly;
  const PipelineState st = RunPipeline(a, b, run);
  for (const std::string& w : st.warnings)
    std::fprintf(stderr, "warning: %s\n", w.c_str());
  for (const StageTiming& t : st.timings)
    std::fprintf(stderr, "stage %-20s %10.6f s\n", t.name.c_str(), t.seconds);
  if (!debugJson.empty()) DumpDebug(st, debugJson);

  if (surfacesOnly || op == "all") fs::create_directories(out);
  if (surfacesOnly) {
    std::map<SurfaceTag, int> count;
    for (const SubSurface& sf : st.surfaces) {
      SubBlock only;
      only.surfaces = {sf.id};
      const char name = sf.source == SurfaceTag::A ? 'A' : 'B';
      Save(BlockMesh(only, st.surfaces, st.merged),
           (fs::path(out) / ("surface_" + std::string(1, name) + "_" +
                             std::to_string(count[sf.source]++) + ".obj"))
               .string());
    }
    return 0;
  }
  if (!st.result)
    throw Error(ErrorKind::ClassificationError,
                "Boolean results need two closed inputs; try split-surfaces");
  const BooleanResult& r = *st.result;
  const std::vector<std::pair<std::string, const std::vector<TriMesh>*>> all = {
      {"union", &r.unions},
      {"intersect", &r.intersections},
      {"subtract-ab", &r.a_minus_b},
      {"subtract-ba", &r.b_minus_a}};
  const std::map<std::string, std::string> fileName = {
      {"union", "union.stl"},
      {"intersect", "intersection.stl"},
      {"subtract-ab", "a_minus_b.stl"},
      {"subtract-ba", "b_minus_a.stl"}};
  for (const auto& [name, meshes] : all) {
    if (op == "all") {
      if (meshes->empty())
        std::printf("%s is empty\n", fileName.at(name).c_str());
      else
        Save(Concat(*meshes), (fs::path(out) / fileName.at(name)).string());
    } else if (op == name) {
      Save(Concat(*meshes), out);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean operations on triangulated surfaces"};
  std::vector<std::string> positional;
  std::string op = "all", out, debugJson;
  PipelineOptions opts;
  int threads = -1;
  app.add_option("inputs", positional, "[op] meshA meshB (STL or OBJ)")
      ->required()
      ->expected(2, 3);
  app.add_option("--op", op, "Operation")->check(CLI::IsMember(kOps));
  app.add_option("-o,--out", out, "Output file, or directory for all/split-surfaces")
      ->required();
  app.add_option("--merge-tol", opts.merge_tol,
                 "Vertex weld tolerance (default 1e-9 of the shared box)");
  app.add_option("--octree-depth", opts.octree.max_depth, "Octree max depth")
      ->check(CLI::PositiveNumber);
  app.add_option("--octree-capacity", opts.octree.leaf_capacity,
                 "Octree leaf capacity")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads,
                 "Narrow-phase threads, 0 = all cores (env MESHBOOL_THREADS)");
  app.add_flag("--strict", opts.strict, "Treat coplanar pairs and dangling loops as errors");
  app.add_option("--debug-json", debugJson, "Write pipeline arrays as JSON");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (positional.size() == 3) {
    if (std::find(kOps.begin(), kOps.end(), positional[0]) == kOps.end()) {
      std::fprintf(stderr, "error: unknown operation '%s'\n", positional[0].c_str());
      return 1;
    }
    op = positional[0];
    positional.erase(positional.begin());
  }
  if (threads < 0) {
    const char* env = std::getenv("MESHBOOL_THREADS");
    threads = env ? std::atoi(env) : 1;
  }
  opts.threads = std::max(0, threads);

  try {
    return Run(op, positional[0], positional[1], out, opts, debugJson);
  } catch (const Error& e) {
    std::fprintf(stderr, "error [%s]: %s\n",
                 std::string(ErrorKindName(e.kind())).c_str(), e.what());
    return ExitCode(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
