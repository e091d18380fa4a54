#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "depeval/report/report.hpp"
#include "test_helpers.hpp"

using namespace depeval;
using testutil::Rng;
using testutil::TempDir;

namespace {

int run_cli(const std::string& args, const std::filesystem::path& capture = {}) {
  std::string cmd = std::string(DEPEVAL_CLI_PATH) + " " + args;
  if (capture.empty()) {
    cmd += " > /dev/null 2>&1";
  } else {
    cmd += " > \"" + capture.string() + "\" 2>&1";
  }
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string quoted(const std::filesystem::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("eval scores a dataset and writes the report") {
  TempDir tmp;
  const auto root = tmp.path() / "data";
  testutil::write_synthetic_dataset(root, 3);
  const auto out = tmp.path() / "out";
  const auto log = tmp.path() / "stdout.txt";

  const int code = run_cli("eval --root " + quoted(root) + " --out " + quoted(out) +
                               " --csv --jobs 2",
                           log);
  CHECK(code == 0);
  CHECK(std::filesystem::exists(out / "report.json"));
  CHECK(std::filesystem::exists(out / "scenes_good.csv"));
  CHECK(std::filesystem::exists(out / "scenes_bad.csv"));

  const std::string text = slurp(log);
  CHECK(text.find("good") != std::string::npos);
  CHECK(text.find("bad") != std::string::npos);
  CHECK(text.find("combined") != std::string::npos);

  const EvaluationReport report = load_report(out / "report.json");
  CHECK(report.samples_total == 3);
  REQUIRE(report.models.size() == 2);
  CHECK(report.models[0].scenes.size() == 3);
}

TEST_CASE("eval reports partial failure with exit code 1") {
  TempDir tmp;
  const auto root = tmp.path() / "data";
  testutil::write_synthetic_dataset(root, 3);
  {
    std::ofstream bad(root / "scene1" / "frame0" / "gt.f32", std::ios::binary);
    bad << "garbage";
  }
  CHECK(run_cli("eval --root " + quoted(root) + " --jobs 1") == 1);
}

TEST_CASE("eval flags override the config file") {
  TempDir tmp;
  const auto root = tmp.path() / "data";
  testutil::write_synthetic_dataset(root, 2);
  const auto out = tmp.path() / "out";

  RunConfig base;
  base.root = root;
  base.gamma = 4.0;
  base.jobs = 1;
  const auto cfg_path = tmp.path() / "run.json";
  {
    std::ofstream f(cfg_path);
    f << run_config_to_json(base).dump(2) << '\n';
  }

  const int code = run_cli("eval --config " + quoted(cfg_path) + " --gamma 1.5 --out " +
                           quoted(out));
  CHECK(code == 0);
  const EvaluationReport report = load_report(out / "report.json");
  CHECK(report.config.at("gamma").get<double>() == 1.5);  // flag beats file
  CHECK(report.config.at("root").get<std::string>() == root.string());
}

TEST_CASE("rank orders scenes from a written report") {
  TempDir tmp;
  const auto root = tmp.path() / "data";
  testutil::write_synthetic_dataset(root, 4);
  const auto out = tmp.path() / "out";
  REQUIRE(run_cli("eval --root " + quoted(root) + " --out " + quoted(out) + " --jobs 1") ==
          0);

  const auto log = tmp.path() / "rank.txt";
  CHECK(run_cli("rank --report " + quoted(out / "report.json") + " --model bad --top 2",
                log) == 0);
  const std::string text = slurp(log);
  CHECK(text.find("model: bad") != std::string::npos);
  CHECK(text.find("divergence") != std::string::npos);
  CHECK(text.find("scene") != std::string::npos);

  // two models in the report: the model choice cannot be implied
  CHECK(run_cli("rank --report " + quoted(out / "report.json")) == 2);
}

TEST_CASE("analyze-datasets prints shares from a catalog") {
  TempDir tmp;
  const auto catalog = tmp.path() / "sets.catalog";
  {
    std::ofstream f(catalog);
    f << "a ; 100 ; urban\n"
         "b ; 60 ; urban, nature\n"
         "c ; 30 ; nature, country\n";
  }
  const auto log = tmp.path() / "table.txt";
  CHECK(run_cli("analyze-datasets --catalog " + quoted(catalog), log) == 0);
  const std::string table = slurp(log);
  CHECK(table.find("urban") != std::string::npos);
  CHECK(table.find("130") != std::string::npos);
  CHECK(table.find("190 frames") != std::string::npos);

  const auto jlog = tmp.path() / "table.json";
  CHECK(run_cli("analyze-datasets --catalog " + quoted(catalog) + " --json", jlog) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(jlog));
  CHECK(j.at("frames").at("urban").get<double>() == 130.0);
  CHECK(j.at("shares").at("country").get<double>() == doctest::Approx(15.0 / 190.0));
}

TEST_CASE("fit-affine recovers scale and shift from files") {
  TempDir tmp;
  Rng rng(3);
  const DepthMap pred = testutil::random_depth(rng, 10, 12, 1.0, 20.0);
  const DepthMap gt = make_dense_depth(2.0 * pred.values + 3.0);
  write_depth_f32(tmp.path() / "pred.f32", pred);
  write_depth_f32(tmp.path() / "gt.f32", gt);

  const auto log = tmp.path() / "fit.json";
  const auto aligned_path = tmp.path() / "aligned.f32";
  const int code = run_cli("fit-affine --pred " + quoted(tmp.path() / "pred.f32") +
                               " --gt " + quoted(tmp.path() / "gt.f32") + " --apply " +
                               quoted(aligned_path) + " --json",
                           log);
  CHECK(code == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(log));
  CHECK(j.at("scale").get<double>() == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(j.at("shift").get<double>() == doctest::Approx(3.0).epsilon(1e-4));
  CHECK(j.at("sample_count").get<std::int64_t>() == 120);

  const DepthMap aligned = read_depth_f32(aligned_path);
  CHECK((aligned.values - gt.values).abs().maxCoeff() <= 1e-4);
}

TEST_CASE("densify fills a sparse container") {
  TempDir tmp;
  GridD values = GridD::Zero(8, 10);
  GridB valid = GridB::Constant(8, 10, false);
  for (int i : {0, 7}) {
    for (int j : {0, 9}) {
      values(i, j) = 4.0 + 0.2 * j + 0.1 * i;
      valid(i, j) = true;
    }
  }
  write_depth_f32(tmp.path() / "sparse.f32", make_depth(values, valid));

  const int code = run_cli("densify --input " + quoted(tmp.path() / "sparse.f32") +
                           " --output " + quoted(tmp.path() / "dense.f32") +
                           " --method linear");
  CHECK(code == 0);
  const DepthMap dense = read_depth_f32(tmp.path() / "dense.f32");
  CHECK(dense.valid.all());
  CHECK(dense.values(4, 5) ==
        doctest::Approx(4.0 + 0.2 * 5 + 0.1 * 4).epsilon(1e-4));
}

TEST_CASE("dump-weights echoes the builtin table") {
  TempDir tmp;
  const auto log = tmp.path() / "weights.txt";
  CHECK(run_cli("dump-weights", log) == 0);
  const std::string text = slurp(log);
  CHECK(text.find("Car") != std::string::npos);
  CHECK(text.find("0.5004") != std::string::npos);
  CHECK(text.find("Bicycles") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  TempDir tmp;
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("eval --root /nonexistent --bogus-flag") == 2);
  CHECK(run_cli("rank") == 2);  // missing --report
  CHECK(run_cli("eval --root " + quoted(tmp.path() / "missing")) == 2);
  CHECK(run_cli("eval") == 2);  // no root at all
}
