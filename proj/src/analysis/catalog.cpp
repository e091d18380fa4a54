// Copyright 2026 the depeval authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "depeval/analysis/catalog.hpp"

#include <fstream>
#include <sstream>

#include "depeval/core/image.hpp"

namespace depeval {

const std::set<std::string>& dataset_class_hierarchy() {
  static const std::set<std::string> kClasses = {
      "indoor", "outdoor", "closeup", "urban", "nature", "country", "human", "object",
  };
  return kClasses;
}

std::map<std::string, double> frames_per_class(
    const std::vector<DatasetCatalogEntry>& catalog) {
  if (catalog.empty()) raise(Errc::kEmptyCatalog, "catalog has no entries");
  std::map<std::string, double> frames;
  for (const DatasetCatalogEntry& entry : catalog) {
    if (entry.classes.empty()) {
      raise(Errc::kEmptyCatalog, "dataset '" + entry.name + "' lists no classes");
    }
    const double per_class = static_cast<double>(entry.frame_count) /
                             static_cast<double>(entry.classes.size());
    for (const std::string& cls : entry.classes) frames[cls] += per_class;
  }
  return frames;
}

std::map<std::string, double> class_share(const std::map<std::string, double>& frames) {
  double total = 0.0;
  for (const auto& [cls, n] : frames) total += n;
  if (!(total > 0.0)) raise(Errc::kZeroTotal, "total frame mass is not positive");
  std::map<std::string, double> shares;
  for (const auto& [cls, n] : frames) shares[cls] = n / total;
  return shares;
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream stream(s);
  while (std::getline(stream, part, sep)) parts.push_back(part);
  if (!s.empty() && s.back() == sep) parts.push_back("");
  return parts;
}

}  // namespace

std::vector<DatasetCatalogEntry> parse_catalog(const std::string& text) {
  std::vector<DatasetCatalogEntry> catalog;
  std::istringstream stream(text);
  std::string line;
  int lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "catalog line " + std::to_string(lineno);

    const std::vector<std::string> fields = split(line, ';');
    if (fields.size() != 3) {
      raise(Errc::kBadFormat, where + ": expected 'name ; frames ; classes'");
    }
    DatasetCatalogEntry entry;
    entry.name = trim(fields[0]);
    if (entry.name.empty()) raise(Errc::kBadFormat, where + ": empty dataset name");

    const std::string count_text = trim(fields[1]);
    std::size_t used = 0;
    long long count = 0;
    try {
      count = std::stoll(count_text, &used);
    } catch (const std::exception&) {
      raise(Errc::kBadFormat, where + ": bad frame count '" + count_text + "'");
    }
    if (used != count_text.size() || count < 0) {
      raise(Errc::kBadFormat, where + ": bad frame count '" + count_text + "'");
    }
    entry.frame_count = count;

    for (const std::string& raw : split(fields[2], ',')) {
      const std::string cls = lowercase(trim(raw));
      if (cls.empty()) raise(Errc::kBadFormat, where + ": empty class name");
      if (!dataset_class_hierarchy().count(cls)) {
        raise(Errc::kBadFormat, where + ": unknown class '" + cls + "'");
      }
      entry.classes.insert(cls);
    }
    if (entry.classes.empty()) raise(Errc::kBadFormat, where + ": no classes listed");
    catalog.push_back(std::move(entry));
  }
  return catalog;
}

std::vector<DatasetCatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) raise(Errc::kIoError, "cannot open catalog '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  try {
    return parse_catalog(buffer.str());
  } catch (const Error& e) {
    if (e.code() == Errc::kBadFormat) {
      raise(Errc::kBadFormat, path.string() + ": " + e.what());
    }
    throw;
  }
}

}  // namespace depeval
