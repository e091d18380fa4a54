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

#ifndef DEPEVAL_ANALYSIS_CATALOG_HPP_
#define DEPEVAL_ANALYSIS_CATALOG_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "depeval/core/errors.hpp"

namespace depeval {

// One training dataset in a composition catalog: how many frames it has and
// which scenario classes it covers.
struct DatasetCatalogEntry {
  std::string name;
  std::int64_t frame_count = 0;
  std::set<std::string> classes;
};

// Scenario class names accepted by the catalog file parser. High-level
// classes (indoor, outdoor, closeup) plus the mid-level refinements of
// outdoor (urban, nature, country) and closeup (human, object).
const std::set<std::string>& dataset_class_hierarchy();

// Distributes each dataset's frame count equally over its classes and sums
// per class. The result conserves mass: the values add up to the total frame
// count exactly (each entry contributes |F_i|/|C_i| to |C_i| classes).
std::map<std::string, double> frames_per_class(
    const std::vector<DatasetCatalogEntry>& catalog);

// Normalizes a frames-per-class map to shares in [0,1] summing to 1.
std::map<std::string, double> class_share(const std::map<std::string, double>& frames);

// Parses a catalog file. One entry per line:
//
//   name ; frame_count ; class[, class...]
//
// '#' starts a comment, blank lines are skipped, whitespace around fields is
// trimmed. Class names are matched case-insensitively against
// dataset_class_hierarchy() and stored lowercase; unknown names are errors.
std::vector<DatasetCatalogEntry> load_catalog(const std::filesystem::path& path);
std::vector<DatasetCatalogEntry> parse_catalog(const std::string& text);

}  // namespace depeval

#endif  // DEPEVAL_ANALYSIS_CATALOG_HPP_
