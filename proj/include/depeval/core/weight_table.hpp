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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "depeval/core/errors.hpp"

namespace depeval {

// What to do with a labeled class that has no super-class mapping.
enum class UnmappedPolicy { kIgnore, kError, kZeroWeight };

const char* unmapped_policy_name(UnmappedPolicy policy);

struct SuperClass {
  std::string name;
  double weight = 0.0;  // w_class
};

// Safety taxonomy: super-classes with importance weights plus the
// dataset-class -> super-class mapping. Mapping keys and sky names are
// matched case-insensitively.
struct WeightTable {
  std::vector<SuperClass> super_classes;       // declaration order
  std::map<std::string, std::string> mapping;  // lowercase dataset class -> super-class name
  std::set<std::string> sky_classes;           // lowercase names masked before evaluation
  UnmappedPolicy unmapped_policy = UnmappedPolicy::kIgnore;
  bool normalized = true;  // weights expected to sum to ~1

  const SuperClass* find_super(const std::string& name) const;
  // Super-class for a dataset class name, nullptr when unmapped.
  const SuperClass* super_for(const std::string& dataset_class) const;
  double total_weight() const;
  void validate() const;
};

// Table 1 weights with a default mapping for common GOOSE class names.
WeightTable builtin_gidas_table();

// Subtotals of the builtin table by accident main class
// (vehicle / vru / object), used as an integrity check.
std::map<std::string, double> gidas_main_classes();

WeightTable parse_weight_table(std::istream& in);
WeightTable load_weight_table(const std::filesystem::path& path);
std::string format_weight_table(const WeightTable& table);

}  // namespace depeval
