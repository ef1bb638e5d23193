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

#include "framelab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "framelab/error.hpp"

namespace framelab::io {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    auto field = line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - start);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
      field.remove_suffix(1);
    }
    out.push_back(field);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

std::string location(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  return lines;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::vector<Point> read_points_csv(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw Error(ErrorCode::kIo, path.string() + ": missing header x1,...,xd");
  const auto header = split(lines.front());
  const auto d = header.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (header[i] != "x" + std::to_string(i + 1)) {
      throw Error(ErrorCode::kIo, location(path, 1) + ": header must be x1,...,xd");
    }
  }
  if (d < 1 || d > static_cast<std::size_t>(kMaxDim)) {
    throw Error(ErrorCode::kIo, location(path, 1) + ": dimension must be between 1 and 4");
  }
  std::vector<Point> pts;
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    if (blank(lines[ln])) continue;
    const auto fields = split(lines[ln]);
    if (fields.size() != d) {
      throw Error(ErrorCode::kIo, location(path, ln + 1) + ": expected " + std::to_string(d) + " fields");
    }
    std::vector<double> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (!parse_double(fields[i], c[i])) {
        throw Error(ErrorCode::kIo, location(path, ln + 1) + ": not a finite number");
      }
    }
    pts.emplace_back(std::span<const double>(c));
  }
  return pts;
}

void write_points_csv(const std::filesystem::path& path, const std::vector<Point>& points) {
  const int d = points.empty() ? 1 : points.front().dim();
  std::vector<std::string> header;
  for (int i = 1; i <= d; ++i) header.push_back("x" + std::to_string(i));
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : points) {
    auto& row = rows.emplace_back();
    for (double c : p.coords()) row.push_back(format_double(c));
  }
  write_csv(path, header, rows);
}

finframe::FiniteFrame read_frame_csv(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  std::vector<std::vector<double>> rows;
  std::size_t width = 0;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (blank(lines[ln])) continue;
    const auto fields = split(lines[ln]);
    std::vector<double> v(fields.size());
    bool numeric = true;
    for (std::size_t i = 0; i < fields.size() && numeric; ++i) numeric = parse_double(fields[i], v[i]);
    if (!numeric) {
      if (rows.empty() && width == 0) {
        width = fields.size();  // header row
        continue;
      }
      throw Error(ErrorCode::kIo, location(path, ln + 1) + ": not a finite number");
    }
    if (width == 0) width = v.size();
    if (v.size() != width || width < 3 || width % 2 == 0) {
      throw Error(ErrorCode::kIo, location(path, ln + 1) + ": expected 2n+1 fields (re/im pairs and a weight)");
    }
    rows.push_back(std::move(v));
  }
  if (rows.empty()) throw Error(ErrorCode::kIo, path.string() + ": no frame vectors");
  const std::size_t n = (width - 1) / 2;
  CMatrix vecs(n, rows.size());
  std::vector<double> weights;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) vecs(i, j) = {rows[j][2 * i], rows[j][2 * i + 1]};
    weights.push_back(rows[j][width - 1]);
  }
  return finframe::FiniteFrame(std::move(vecs), std::move(weights));
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) os << ',';
      os << fields[i];
    }
    os << '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  write_text(path, os.str());
}

void write_text(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace framelab::io
