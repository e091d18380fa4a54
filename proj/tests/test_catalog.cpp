#include <doctest.h>

#include <cmath>
#include <fstream>
#include <functional>
#include <string>

#include "depeval/analysis/catalog.hpp"
#include "test_helpers.hpp"

using namespace depeval;
using testutil::TempDir;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::kBadConfig;
}

DatasetCatalogEntry entry(std::string name, std::int64_t frames,
                          std::set<std::string> classes) {
  DatasetCatalogEntry e;
  e.name = std::move(name);
  e.frame_count = frames;
  e.classes = std::move(classes);
  return e;
}

}  // namespace

TEST_CASE("frames split evenly across a dataset's classes") {
  const auto single = frames_per_class({entry("d1", 100, {"urban"})});
  REQUIRE(single.size() == 1);
  CHECK(single.at("urban") == 100.0);

  const auto split = frames_per_class({entry("d2", 100, {"urban", "nature"})});
  CHECK(split.at("urban") == 50.0);
  CHECK(split.at("nature") == 50.0);
}

TEST_CASE("three-dataset fixture lands on exact counts") {
  const std::vector<DatasetCatalogEntry> catalog = {
      entry("a", 100, {"urban"}),
      entry("b", 60, {"urban", "nature"}),
      entry("c", 30, {"nature", "country"}),
  };
  const auto frames = frames_per_class(catalog);
  REQUIRE(frames.size() == 3);
  CHECK(frames.at("urban") == 130.0);    // 100 + 60/2
  CHECK(frames.at("nature") == 45.0);    // 60/2 + 30/2
  CHECK(frames.at("country") == 15.0);   // 30/2

  // mass conservation: per-class counts sum to the frame total
  double total = 0.0;
  for (const auto& [name, v] : frames) total += v;
  CHECK(total == 190.0);

  const auto shares = class_share(frames);
  CHECK(shares.at("urban") == doctest::Approx(130.0 / 190.0).epsilon(1e-12));
  CHECK(shares.at("nature") == doctest::Approx(45.0 / 190.0).epsilon(1e-12));
  CHECK(shares.at("country") == doctest::Approx(15.0 / 190.0).epsilon(1e-12));
  double share_sum = 0.0;
  for (const auto& [name, v] : shares) share_sum += v;
  CHECK(std::abs(share_sum - 1.0) <= 1e-12);
}

TEST_CASE("catalogs merge additively") {
  const std::vector<DatasetCatalogEntry> first = {entry("a", 100, {"urban"})};
  const std::vector<DatasetCatalogEntry> second = {
      entry("b", 60, {"urban", "nature"}),
      entry("c", 30, {"nature", "country"}),
  };
  std::vector<DatasetCatalogEntry> both = first;
  both.insert(both.end(), second.begin(), second.end());

  const auto fa = frames_per_class(first);
  const auto fb = frames_per_class(second);
  const auto fboth = frames_per_class(both);
  for (const auto& [name, v] : fboth) {
    const double va = fa.count(name) ? fa.at(name) : 0.0;
    const double vb = fb.count(name) ? fb.at(name) : 0.0;
    CHECK(v == va + vb);
  }
}

TEST_CASE("degenerate catalogs are rejected") {
  CHECK(code_of([&] { frames_per_class({}); }) == Errc::kEmptyCatalog);
  CHECK(code_of([&] { frames_per_class({entry("x", 10, {})}); }) == Errc::kEmptyCatalog);
  CHECK(code_of([&] { class_share({{"urban", 0.0}}); }) == Errc::kZeroTotal);
  CHECK(code_of([&] { class_share({}); }) == Errc::kZeroTotal);
}

TEST_CASE("the class hierarchy is closed") {
  const auto& names = dataset_class_hierarchy();
  CHECK(names.count("indoor") == 1);
  CHECK(names.count("outdoor") == 1);
  CHECK(names.count("closeup") == 1);
  CHECK(names.count("urban") == 1);
  CHECK(names.count("nature") == 1);
  CHECK(names.count("country") == 1);
  CHECK(names.count("human") == 1);
  CHECK(names.count("object") == 1);
  CHECK(names.size() == 8);
}

TEST_CASE("catalog text parses names, counts, and class lists") {
  const std::string text =
      "# fleet catalogs\n"
      "\n"
      "city drive ; 100 ; urban\n"
      "mixed tour ; 60 ; Urban, NATURE\n"
      "trail ; 30 ; nature , country\n";
  const auto catalog = parse_catalog(text);
  REQUIRE(catalog.size() == 3);
  CHECK(catalog[0].name == "city drive");
  CHECK(catalog[0].frame_count == 100);
  CHECK(catalog[0].classes == std::set<std::string>{"urban"});
  CHECK(catalog[1].classes == std::set<std::string>{"urban", "nature"});  // case folded
  CHECK(catalog[2].classes == std::set<std::string>{"country", "nature"});

  const auto frames = frames_per_class(catalog);
  CHECK(frames.at("urban") == 130.0);
}

TEST_CASE("catalog parse errors carry the line number") {
  const auto fails = [](const std::string& text) {
    try {
      parse_catalog(text);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kBadFormat);
      return std::string(e.what());
    }
    FAIL("expected an Error");
    return std::string();
  };
  CHECK(fails("x ; ten ; urban\n").find("line 1") != std::string::npos);
  CHECK(fails("ok ; 5 ; urban\nx ; 5 ; klingon\n").find("line 2") != std::string::npos);
  CHECK(fails("x ; 5\n").find("line 1") != std::string::npos);       // missing classes
  CHECK(fails(" ; 5 ; urban\n").find("line 1") != std::string::npos);  // empty name
  CHECK(fails("x ; -4 ; urban\n").find("line 1") != std::string::npos);
  CHECK(fails("x ; 5 ; urban ; extra\n").find("line 1") != std::string::npos);
}

TEST_CASE("catalog files load with path context") {
  TempDir tmp;
  const auto path = tmp.path() / "sets.catalog";
  {
    std::ofstream out(path);
    out << "alpha ; 10 ; indoor\nbeta ; 4 ; closeup, human\n";
  }
  const auto catalog = load_catalog(path);
  REQUIRE(catalog.size() == 2);
  CHECK(catalog[1].frame_count == 4);

  CHECK(code_of([&] { load_catalog(tmp.path() / "missing.catalog"); }) == Errc::kIoError);

  {
    std::ofstream out(path);
    out << "broken ; 1 ; moon\n";
  }
  try {
    load_catalog(path);
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("sets.catalog") != std::string::npos);
  }
}
