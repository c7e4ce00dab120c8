#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "geodlab/error.hpp"
#include "geodlab/geodesics/table_io.hpp"
#include "geodlab/lab/cache.hpp"
#include "geodlab/lab/config.hpp"
#include "geodlab/lab/experiments.hpp"
#include "geodlab/lab/report.hpp"

using namespace geodlab;
using namespace geodlab::lab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig base(Experiment e) {
  ExperimentConfig c;
  c.experiment = e;
  c.workers = 2;
  c.write_files = false;
  return c;
}

}  // namespace

TEST_CASE("experiment names round trip") {
  for (auto e : all_experiments()) CHECK(parse_experiment(experiment_name(e)) == e);
  CHECK_THROWS_AS(parse_experiment("nope"), UsageError);
}

TEST_CASE("config validation names the field") {
  auto expect_field = [](ExperimentConfig c, const std::string& field) {
    try {
      resolve(c);
      FAIL("expected a usage error for " << field);
    } catch (const UsageError& e) {
      CHECK(std::string(e.what()).find(field) != std::string::npos);
    }
  };
  auto c = base(Experiment::enumerate);
  expect_field(c, "--L");
  c.max_word_len = 1000;
  expect_field(c, "--L");

  c = base(Experiment::haar_moments);
  c.trials = 1;
  expect_field(c, "--trials");
  c = base(Experiment::haar_moments);
  c.moments = "a=1;b=x";
  expect_field(c, "--moments");

  c = base(Experiment::weyl_check);
  c.n = 4;
  expect_field(c, "--n");

  c = base(Experiment::eig_gap);
  c.signature = "1,2";
  expect_field(c, "--sig");

  c = base(Experiment::equidist);
  c.surface = "torus";
  expect_field(c, "--surface");

  c = base(Experiment::zeta);
  c.s_points = "0.5";
  expect_field(c, "--s");
  c = base(Experiment::zeta);
  c.chi = "random";
  expect_field(c, "--chi");

  c = base(Experiment::pgt_decay);
  c.t_grid = "3:2:0.5";
  expect_field(c, "--T");
}

TEST_CASE("config defaults and parsers") {
  const auto c = resolve(base(Experiment::haar_moments));
  CHECK(c.n == 6);
  CHECK(c.trials == 200000);
  const auto m = parse_moments("a=1,0;b=0,1");
  CHECK(m.a == std::vector<int>{1, 0});
  CHECK(m.b == std::vector<int>{0, 1});
  const auto padded = parse_moments("a=2;b=0,1");
  CHECK(padded.a == std::vector<int>{2, 0});
  CHECK(parse_int_list("1, 2,3", "--x") == std::vector<int>{1, 2, 3});
  CHECK(parse_double_list("2,2.5", "--s") == std::vector<double>{2.0, 2.5});
  CHECK(parse_grid("4:5:0.5") == std::vector<double>{4.0, 4.5, 5.0});
  CHECK(parse_grid("").empty());

  auto eg = base(Experiment::eig_gap);
  eg.n = 5;
  eg.signature = "2,1";
  CHECK(signature_entries(resolve(eg)) == std::vector<int>{2, 1, 0, 0, 0});
  eg.n = 3;
  eg.signature = "1,0,-1";
  CHECK(signature_entries(resolve(eg)) == std::vector<int>{1, 0, -1});
}

TEST_CASE("report json schema") {
  ExperimentReport r;
  r.config = resolve(base(Experiment::haar_moments));
  r.params["n"] = 6;
  r.metrics.push_back(band_metric("m", 1.01, 1.0, 0.02, 0.004));
  r.metrics.push_back(upper_metric("u", 3.0, 2.0));
  r.metrics.push_back(info_metric("i", 7.0));
  r.table_hash = "abc";
  const auto j = report_json(r);
  CHECK(j["experiment"] == "haar-moments");
  CHECK(j["params"]["n"] == 6);
  REQUIRE(j["metrics"].size() == 3);
  for (const auto& m : j["metrics"]) {
    for (const char* key : {"name", "estimate", "stderr", "target", "tol", "pass"}) {
      CHECK(m.contains(key));
    }
  }
  CHECK(j["metrics"][0]["pass"] == true);
  CHECK(j["metrics"][1]["pass"] == false);
  CHECK(j["metrics"][2]["target"].is_null());
  CHECK(j["provenance"]["master_seed"] == 1);
  CHECK(j["provenance"]["table_hash"] == "abc");
  CHECK(j["provenance"].contains("wall_time_s"));
  CHECK_FALSE(r.all_pass());

  CsvTable t;
  t.columns = {"x", "y"};
  t.add({"1", "2"});
  CHECK_THROWS_AS(t.add({"1"}), ArgumentError);
  std::ostringstream out;
  write_csv(out, t);
  CHECK(out.str() == "x,y\n1,2\n");
}

TEST_CASE("table cache") {
  TempDir dir("geodlab_test_cache");
  const auto first = cache_table("gamma2", 10, dir.path, 2);
  CHECK(first.rebuilt);
  CHECK(first.path == table_cache_path(dir.path, "gamma2", 10));
  CHECK(first.hash.size() == 16);
  const auto second = cache_table("gamma2", 10, dir.path, 2);
  CHECK_FALSE(second.rebuilt);
  CHECK(second.table == first.table);
  CHECK(second.hash == first.hash);

  // A header that disagrees with the request is stale: rebuild.
  std::string text = slurp(first.path);
  const auto pos = text.find("maxlen=10");
  REQUIRE(pos != std::string::npos);
  std::string stale = text;
  stale.replace(pos, 9, "maxlen=11");
  std::ofstream(first.path, std::ios::binary) << stale;
  const auto third = cache_table("gamma2", 10, dir.path, 2);
  CHECK(third.rebuilt);
  CHECK(third.table == first.table);

  // A tampered body under a matching header is an integrity failure.
  std::string bad = slurp(first.path);
  bad.replace(bad.find("\nab;6;"), 6, "\nab;7;");
  std::ofstream(first.path, std::ios::binary) << bad;
  CHECK_THROWS_AS(cache_table("gamma2", 10, dir.path, 2), IntegrityError);
}

TEST_CASE("experiments run and are deterministic") {
  TempDir dir("geodlab_test_runs");
  ::setenv("GEODLAB_CACHE_DIR", (dir.path / "cache").c_str(), 1);

  auto e = base(Experiment::enumerate);
  e.max_word_len = 2;
  const auto rep = run_experiment(resolve(e));
  CHECK(rep.series.rows.size() == 2);
  CHECK(rep.series.columns.front() == "word");

  auto q = base(Experiment::equidist);
  q.max_word_len = 13;
  q.master_seed = 7;
  q.trials = 2;
  q.write_files = true;
  q.out_dir = dir.path / "a";
  const auto r1 = run_experiment(resolve(q));
  write_outputs(r1);
  q.out_dir = dir.path / "b";
  q.workers = 1;
  const auto r2 = run_experiment(resolve(q));
  write_outputs(r2);
  CHECK(slurp(dir.path / "a" / "equidist.csv") == slurp(dir.path / "b" / "equidist.csv"));
  CHECK_FALSE(slurp(dir.path / "a" / "equidist.csv").empty());
  const auto j = nlohmann::json::parse(slurp(dir.path / "a" / "equidist.json"));
  CHECK(j["provenance"]["master_seed"] == 7);
  CHECK(j["provenance"]["table_hash"].get<std::string>().size() == 16);

  auto h = base(Experiment::haar_moments);
  h.trials = 20000;
  h.n = 4;
  const auto hm = run_experiment(resolve(h));
  REQUIRE_FALSE(hm.metrics.empty());
  CHECK(hm.metrics.front().estimate == doctest::Approx(1.0).epsilon(0.05));

  auto w = base(Experiment::weyl_check);
  const auto wr = run_experiment(resolve(w));
  CHECK(wr.all_pass());

  auto z = base(Experiment::zeta);
  z.max_word_len = 16;
  z.chi = "trivial";
  const auto zr = run_experiment(resolve(z));
  CHECK(zr.all_pass());

  auto bad = base(Experiment::pgt_decay);
  bad.max_word_len = 13;
  bad.t_grid = "1,2";
  CHECK_THROWS_AS(run_experiment(resolve(bad)), ArgumentError);
  ::unsetenv("GEODLAB_CACHE_DIR");
}
