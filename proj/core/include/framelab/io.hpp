// Copyright 2026 The framelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "framelab/finframe.hpp"
#include "framelab/point.hpp"

namespace framelab::io {

/// Shortest decimal form that round-trips; "nan" / "inf" / "-inf" otherwise.
std::string format_double(double x);

/// One point per row under the header "x1,...,xd".
std::vector<Point> read_points_csv(const std::filesystem::path& path);
void write_points_csv(const std::filesystem::path& path, const std::vector<Point>& points);

/// Rows "re_1,im_1,...,re_n,im_n,weight"; an optional non-numeric header row
/// is skipped. Index points default to (0), (1), ...
finframe::FiniteFrame read_frame_csv(const std::filesystem::path& path);

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

void write_text(const std::filesystem::path& path, std::string_view content);
std::string read_text(const std::filesystem::path& path);

}  // namespace framelab::io
