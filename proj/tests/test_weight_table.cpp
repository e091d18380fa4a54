#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "depeval/core/weight_table.hpp"
#include "test_helpers.hpp"

using namespace depeval;

TEST_CASE("builtin table carries the published accident weights") {
  const WeightTable t = builtin_gidas_table();
  REQUIRE(t.super_classes.size() == 14);
  CHECK(std::abs(t.total_weight() - 1.0) <= 0.001);

  CHECK(t.find_super("Car")->weight == 0.5004);
  CHECK(t.find_super("Bicycles")->weight == 0.2195);
  CHECK(t.find_super("Pedestrian")->weight == 0.0805);
  CHECK(t.find_super("Pole/tree")->weight == 0.0324);
  CHECK(t.find_super("Bush/Fence")->weight == 0.0011);

  const auto mains = gidas_main_classes();
  CHECK(std::abs(mains.at("vehicle") - 0.6206) <= 0.0002);
  CHECK(std::abs(mains.at("vru") - 0.3000) <= 0.0002);
  CHECK(std::abs(mains.at("object") - 0.0794) <= 0.0002);
}

TEST_CASE("builtin mapping resolves common dataset class names") {
  const WeightTable t = builtin_gidas_table();
  CHECK(t.super_for("car")->name == "Car");
  CHECK(t.super_for("CAR")->name == "Car");  // case-insensitive
  CHECK(t.super_for("rider")->name == "Bicycles");
  CHECK(t.super_for("pedestrian")->name == "Pedestrian");
  // signs and lights sit in the pole/tree bucket
  CHECK(t.super_for("traffic_sign")->name == "Pole/tree");
  CHECK(t.super_for("traffic_light")->name == "Pole/tree");
  CHECK(t.super_for("kick_scooter")->name == "Other Motorized Vehicle");
  CHECK(t.super_for("heavy_machinery")->name == "Other Motorized Vehicle");
  CHECK(t.super_for("snow")->name == "Road/Terrain");
  CHECK(t.super_for("nonexistent_class") == nullptr);
  CHECK(t.sky_classes.count("sky") == 1);
}

TEST_CASE("format and parse round-trip") {
  const WeightTable t = builtin_gidas_table();
  std::istringstream in(format_weight_table(t));
  const WeightTable back = parse_weight_table(in);
  REQUIRE(back.super_classes.size() == t.super_classes.size());
  for (std::size_t i = 0; i < t.super_classes.size(); ++i) {
    CHECK(back.super_classes[i].name == t.super_classes[i].name);
    CHECK(back.super_classes[i].weight == t.super_classes[i].weight);
  }
  CHECK(back.mapping == t.mapping);
  CHECK(back.sky_classes == t.sky_classes);
  CHECK(back.unmapped_policy == t.unmapped_policy);
  CHECK(back.normalized == t.normalized);
}

TEST_CASE("parser accepts comments, headers, and mixed case") {
  std::istringstream in(
      "# demo table\n"
      "normalized = false\n"
      "unmapped_policy = ZERO\n"
      "\n"
      "[super_classes]\n"
      "People = 0.7   # the important one\n"
      "Stuff = 0.1\n"
      "[mapping]\n"
      "Person = people\n"
      "rock = Stuff\n"
      "[sky]\n"
      "Sky\n");
  const WeightTable t = parse_weight_table(in);
  CHECK(t.normalized == false);
  CHECK(t.unmapped_policy == UnmappedPolicy::kZeroWeight);
  REQUIRE(t.super_classes.size() == 2);
  CHECK(t.super_for("PERSON")->name == "People");
  CHECK(t.sky_classes == std::set<std::string>{"sky"});
}

TEST_CASE("parser rejects malformed tables") {
  const auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_weight_table(in), Error);
  };
  reject("[super_classes]\nA = 0.5\nA = 0.5\n");              // duplicate super
  reject("[super_classes]\nA = not-a-number\n");              // bad weight
  reject("[super_classes]\nA = 1.5\n");                       // weight > 1
  reject("[super_classes]\nA = 1.0\n[mapping]\nx = B\n");     // unknown target
  reject("[bogus]\nA = 1.0\n");                               // unknown section
  reject("[super_classes]\nA 0.5\n");                         // missing '='
  reject("stray = x\n[super_classes]\nA = 1.0\n");            // unknown header key
  reject("[super_classes]\nA = 1.0\n[mapping]\nx = A\n[sky]\nx\n");  // sky overlap
  reject("[super_classes]\nA = 0.4\nB = 0.3\n");              // normalized but sum 0.7
  reject("");                                                 // no super-classes
}

TEST_CASE("unnormalized tables may sum to anything in range") {
  std::istringstream in(
      "normalized = false\n[super_classes]\nA = 0.2\nB = 0.1\n");
  const WeightTable t = parse_weight_table(in);
  CHECK(t.total_weight() == doctest::Approx(0.3));
}

TEST_CASE("load_weight_table reports the path on errors") {
  testutil::TempDir tmp;
  const auto path = tmp.path() / "weights.txt";
  CHECK_THROWS_AS(load_weight_table(path), Error);  // missing file

  std::ofstream(path) << "[super_classes]\nA = 2.0\n";
  try {
    load_weight_table(path);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("weights.txt") != std::string::npos);
  }
}
