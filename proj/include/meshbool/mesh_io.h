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

#include <string>
#include <vector>

#include "meshbool/geometry.h"
#include "json.hpp"

namespace meshbool {

struct PipelineState;

enum class MeshFormat { StlAscii, StlBinary, Obj };

struct MeshFile {
  MeshFormat format = MeshFormat::StlBinary;
  std::string path;

  /// Infers the format from the extension; for reading, STL files are
  /// additionally sniffed to tell ASCII from binary.
  static MeshFile ForWrite(const std::string& path);
  static MeshFile ForRead(const std::string& path);
};

/// Loads an STL or OBJ file. STL triangle soups are welded on exact
/// coordinate equality. Non-fatal issues are appended to `warnings`.
TriMesh LoadMesh(const MeshFile& file,
                 std::vector<std::string>* warnings = nullptr);
TriMesh LoadMesh(const std::string& path,
                 std::vector<std::string>* warnings = nullptr);

void SaveMesh(const TriMesh& mesh, const MeshFile& file,
              std::vector<std::string>* warnings = nullptr);
void SaveMesh(const TriMesh& mesh, const std::string& path,
              std::vector<std::string>* warnings = nullptr);

inline constexpr int kDebugSchemaVersion = 1;

nlohmann::json DebugJson(const PipelineState& state);
void DumpDebug(const PipelineState& state, const std::string& path);

}  // namespace meshbool
