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

#include "depeval/core/weight_table.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "depeval/core/image.hpp"

namespace depeval {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

const char* unmapped_policy_name(UnmappedPolicy policy) {
  switch (policy) {
    case UnmappedPolicy::kIgnore: return "ignore";
    case UnmappedPolicy::kError: return "error";
    case UnmappedPolicy::kZeroWeight: return "zero";
  }
  return "unknown";
}

const SuperClass* WeightTable::find_super(const std::string& name) const {
  const std::string key = lowercase(name);
  for (const auto& sc : super_classes) {
    if (lowercase(sc.name) == key) return &sc;
  }
  return nullptr;
}

const SuperClass* WeightTable::super_for(const std::string& dataset_class) const {
  const auto it = mapping.find(lowercase(dataset_class));
  if (it == mapping.end()) return nullptr;
  return find_super(it->second);
}

double WeightTable::total_weight() const {
  double total = 0.0;
  for (const auto& sc : super_classes) total += sc.weight;
  return total;
}

void WeightTable::validate() const {
  if (super_classes.empty()) {
    raise(Errc::kBadConfig, "weight table declares no super-classes");
  }
  std::set<std::string> seen;
  for (const auto& sc : super_classes) {
    if (!std::isfinite(sc.weight) || sc.weight < 0.0 || sc.weight > 1.0) {
      raise(Errc::kBadConfig, "weight of '" + sc.name + "' is outside [0,1]");
    }
    if (!seen.insert(lowercase(sc.name)).second) {
      raise(Errc::kBadConfig, "duplicate super-class '" + sc.name + "'");
    }
  }
  for (const auto& [cls, super] : mapping) {
    if (find_super(super) == nullptr) {
      raise(Errc::kBadConfig,
            "mapping target '" + super + "' for class '" + cls + "' is not a super-class");
    }
    if (sky_classes.count(cls)) {
      raise(Errc::kBadConfig, "class '" + cls + "' is both mapped and listed as sky");
    }
  }
  if (normalized && std::abs(total_weight() - 1.0) > 0.01) {
    raise(Errc::kBadConfig, "weights marked normalized but sum to " +
                                std::to_string(total_weight()));
  }
}

WeightTable builtin_gidas_table() {
  WeightTable t;
  t.super_classes = {
      {"Car", 0.5004},
      {"Motorcycle", 0.0738},
      {"Truck & Van & Bus", 0.0373},
      {"Trains", 0.0063},
      {"Other Motorized Vehicle", 0.0027},
      {"Bicycles", 0.2195},
      {"Pedestrian", 0.0805},
      {"Pole/tree", 0.0324},
      {"Guardrail", 0.0117},
      {"Ditch/Embankment", 0.0107},
      {"Road/Terrain", 0.0104},
      {"Other Object", 0.0075},
      {"Wall/bridge", 0.0056},
      {"Bush/Fence", 0.0011},
  };
  // Default mapping for common GOOSE class names; users override via file.
  t.mapping = {
      {"car", "Car"},
      {"motorcycle", "Motorcycle"},
      {"truck", "Truck & Van & Bus"},
      {"bus", "Truck & Van & Bus"},
      {"van", "Truck & Van & Bus"},
      {"on_rails", "Trains"},
      {"train", "Trains"},
      {"tram", "Trains"},
      {"heavy_machinery", "Other Motorized Vehicle"},
      {"kick_scooter", "Other Motorized Vehicle"},
      {"military_vehicle", "Other Motorized Vehicle"},
      {"trailer", "Other Motorized Vehicle"},
      {"caravan", "Other Motorized Vehicle"},
      {"bicycle", "Bicycles"},
      {"rider", "Bicycles"},
      {"person", "Pedestrian"},
      {"pedestrian", "Pedestrian"},
      {"pole", "Pole/tree"},
      {"tree_trunk", "Pole/tree"},
      {"tree_crown", "Pole/tree"},
      {"tree_root", "Pole/tree"},
      {"forest", "Pole/tree"},
      {"traffic_sign", "Pole/tree"},
      {"traffic_light", "Pole/tree"},
      {"street_light", "Pole/tree"},
      {"misc_sign", "Pole/tree"},
      {"guard_rail", "Guardrail"},
      {"curb", "Ditch/Embankment"},
      {"ditch", "Ditch/Embankment"},
      {"embankment", "Ditch/Embankment"},
      {"asphalt", "Road/Terrain"},
      {"gravel", "Road/Terrain"},
      {"soil", "Road/Terrain"},
      {"cobble", "Road/Terrain"},
      {"low_grass", "Road/Terrain"},
      {"high_grass", "Road/Terrain"},
      {"sidewalk", "Road/Terrain"},
      {"bikeway", "Road/Terrain"},
      {"road_marking", "Road/Terrain"},
      {"rail_track", "Road/Terrain"},
      {"snow", "Road/Terrain"},
      {"moss", "Road/Terrain"},
      {"obstacle", "Other Object"},
      {"container", "Other Object"},
      {"barrel", "Other Object"},
      {"debris", "Other Object"},
      {"rock", "Other Object"},
      {"traffic_cone", "Other Object"},
      {"boom_barrier", "Other Object"},
      {"road_block", "Other Object"},
      {"wire", "Other Object"},
      {"wall", "Wall/bridge"},
      {"building", "Wall/bridge"},
      {"bridge", "Wall/bridge"},
      {"tunnel", "Wall/bridge"},
      {"bush", "Bush/Fence"},
      {"hedge", "Bush/Fence"},
      {"fence", "Bush/Fence"},
      {"crops", "Bush/Fence"},
      {"leaves", "Bush/Fence"},
      {"scenery_vegetation", "Bush/Fence"},
  };
  t.sky_classes = {"sky"};
  t.unmapped_policy = UnmappedPolicy::kIgnore;
  t.normalized = true;
  t.validate();
  return t;
}

std::map<std::string, double> gidas_main_classes() {
  const WeightTable t = builtin_gidas_table();
  const std::map<std::string, std::string> main_of = {
      {"Car", "vehicle"},
      {"Motorcycle", "vehicle"},
      {"Truck & Van & Bus", "vehicle"},
      {"Trains", "vehicle"},
      {"Other Motorized Vehicle", "vehicle"},
      {"Bicycles", "vru"},
      {"Pedestrian", "vru"},
  };
  std::map<std::string, double> sums = {{"vehicle", 0.0}, {"vru", 0.0}, {"object", 0.0}};
  for (const auto& sc : t.super_classes) {
    const auto it = main_of.find(sc.name);
    sums[it == main_of.end() ? "object" : it->second] += sc.weight;
  }
  return sums;
}

WeightTable parse_weight_table(std::istream& in) {
  WeightTable t;
  t.normalized = true;
  t.unmapped_policy = UnmappedPolicy::kIgnore;

  enum class Section { kHeader, kSuperClasses, kMapping, kSky };
  Section section = Section::kHeader;
  std::set<std::string> super_keys;
  std::set<std::string> header_keys;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto fail = [&](const std::string& msg) {
      raise(Errc::kBadFormat, "weight table line " + std::to_string(line_no) + ": " + msg);
    };

    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      const std::string name = lowercase(trim(line.substr(1, line.size() - 2)));
      if (name == "super_classes") section = Section::kSuperClasses;
      else if (name == "mapping") section = Section::kMapping;
      else if (name == "sky") section = Section::kSky;
      else fail("unknown section '" + name + "'");
      continue;
    }

    if (section == Section::kSky) {
      const std::string cls = lowercase(line);
      if (!t.sky_classes.insert(cls).second) fail("duplicate sky class '" + cls + "'");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) fail("empty key or value");

    switch (section) {
      case Section::kHeader: {
        const std::string lkey = lowercase(key);
        if (!header_keys.insert(lkey).second) fail("duplicate key '" + key + "'");
        if (lkey == "normalized") {
          const std::string v = lowercase(value);
          if (v == "true") t.normalized = true;
          else if (v == "false") t.normalized = false;
          else fail("normalized must be true or false");
        } else if (lkey == "unmapped_policy") {
          const std::string v = lowercase(value);
          if (v == "ignore") t.unmapped_policy = UnmappedPolicy::kIgnore;
          else if (v == "error") t.unmapped_policy = UnmappedPolicy::kError;
          else if (v == "zero") t.unmapped_policy = UnmappedPolicy::kZeroWeight;
          else fail("unmapped_policy must be ignore, error, or zero");
        } else {
          fail("unknown header key '" + key + "'");
        }
        break;
      }
      case Section::kSuperClasses: {
        if (!super_keys.insert(lowercase(key)).second) {
          fail("duplicate super-class '" + key + "'");
        }
        double w = 0.0;
        try {
          std::size_t pos = 0;
          w = std::stod(value, &pos);
          if (pos != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
          fail("weight '" + value + "' is not a number");
        }
        t.super_classes.push_back({key, w});
        break;
      }
      case Section::kMapping: {
        const std::string cls = lowercase(key);
        if (t.mapping.count(cls)) fail("duplicate mapping for '" + key + "'");
        t.mapping[cls] = value;
        break;
      }
      case Section::kSky:
        break;  // handled above
    }
  }

  t.validate();
  return t;
}

WeightTable load_weight_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::kIoError, "cannot open weight table '" + path.string() + "'");
  try {
    return parse_weight_table(in);
  } catch (const Error& e) {
    if (e.code() == Errc::kBadFormat || e.code() == Errc::kBadConfig) {
      raise(e.code(), path.string() + ": " + e.what());
    }
    throw;
  }
}

std::string format_weight_table(const WeightTable& table) {
  std::ostringstream out;
  out << "normalized = " << (table.normalized ? "true" : "false") << "\n";
  out << "unmapped_policy = " << unmapped_policy_name(table.unmapped_policy) << "\n\n";
  out << "[super_classes]\n";
  out.precision(10);
  for (const auto& sc : table.super_classes) {
    out << sc.name << " = " << sc.weight << "\n";
  }
  out << "\n[mapping]\n";
  for (const auto& [cls, super] : table.mapping) {
    out << cls << " = " << super << "\n";
  }
  if (!table.sky_classes.empty()) {
    out << "\n[sky]\n";
    for (const auto& cls : table.sky_classes) out << cls << "\n";
  }
  return out.str();
}

}  // namespace depeval
