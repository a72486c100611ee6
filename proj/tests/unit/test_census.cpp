#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "mdyn/census.hpp"
#include "mdyn/error.hpp"
#include "mdyn/verify.hpp"

using namespace mdyn;
using nlohmann::json;

namespace {

std::multiset<std::string> run_lines(const CensusTask& t) {
  std::multiset<std::string> out;
  run_census(t, [&](const json& r) { out.insert(r.dump()); });
  return out;
}

std::multiset<std::string> file_lines(const std::string& path) {
  std::multiset<std::string> out;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.insert(line);
  return out;
}

CensusTask small_task() {
  CensusTask t;
  t.degree_min = 2;
  t.degree_max = 3;
  t.height = 2;
  t.shards = 8;
  return t;
}

}  // namespace

TEST_CASE("parse_range") {
  Range r = parse_range("3..6");
  CHECK(r.lo == 3);
  CHECK(r.hi == 6);
  r = parse_range("-4..4");
  CHECK(r.lo == -4);
  CHECK(r.hi == 4);
  r = parse_range("5");
  CHECK(r.lo == 5);
  CHECK(r.hi == 5);
  CHECK_THROWS_AS(parse_range("6..3"), Error);
  CHECK_THROWS_AS(parse_range("x"), Error);
}

TEST_CASE("census space and candidates") {
  CensusTask t;
  t.degree_min = t.degree_max = 2;
  t.height = 1;
  // lead 1, two coefficients in {-1, 0, 1}
  CHECK(census_space_size(t) == 9);
  t.unit_only = true;
  t.degree_min = t.degree_max = 4;
  t.height = 4;
  CHECK(census_space_size(t) == 2 * 9 * 9 * 9);
  Coeffs first = census_candidate(t, 0);
  CHECK(first.back() == 1);
  CHECK(abs(first.front()) == 1);
}

TEST_CASE("census records") {
  CensusTask t;
  t.degree_min = t.degree_max = 2;
  t.height = 3;
  // x^2 - x - 1: golden ratio, Pisot fixed point
  json r = census_record(t, {-1, -1, 1});
  REQUIRE(!r.is_null());
  CHECK(r["orbit_size"] == 1);
  CHECK(r["status"] == "FixedPointReached");
  // 2x^2 - 3x - 3: (3+sqrt33)/4 -> (3+sqrt33)/2 -> 6
  r = census_record(t, {-3, -3, 2});
  REQUIRE(!r.is_null());
  CHECK(r["orbit_size"] == 3);
  // reducible and non-canonical inputs give no record
  CHECK(census_record(t, {-1, 0, 1}).is_null());
  CHECK(census_record(t, {1, 1, -1}).is_null());
}

TEST_CASE("monic quadratics have orbit size 1 or 2") {
  CensusTask t;
  t.degree_min = t.degree_max = 2;
  t.height = 3;
  long monic = 0;
  run_census(t, [&](const json& r) {
    if (r["coeffs"].back() != 1) return;
    ++monic;
    CHECK(r["status"] == "FixedPointReached");
    int n = r["orbit_size"];
    CHECK((n == 1 || n == 2));
  });
  CHECK(monic > 0);
}

TEST_CASE("census output does not depend on the job count") {
  CensusTask t = small_task();
  t.jobs = 1;
  auto one = run_lines(t);
  t.jobs = 3;
  auto three = run_lines(t);
  CHECK(one == three);
  CHECK(!one.empty());
}

TEST_CASE("census resumes from a checkpoint") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "mdyn_census_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  CensusTask t = small_task();
  t.jobs = 2;
  t.out_path = (dir / "full.jsonl").string();
  CensusSummary full = run_census(t);
  CHECK(full.complete);

  t.out_path = (dir / "part.jsonl").string();
  t.checkpoint_path = (dir / "ck.json").string();
  t.checkpoint_every = 4;
  t.stop_after = 25;
  CensusSummary first = run_census(t);
  CHECK(!first.complete);
  CHECK(first.records == 25);

  t.stop_after = 0;
  t.jobs = 3;
  CensusSummary second = run_census(t);
  CHECK(second.resumed);
  CHECK(second.complete);
  CHECK(second.total_records == full.total_records);
  CHECK(file_lines((dir / "part.jsonl").string()) == file_lines((dir / "full.jsonl").string()));
  fs::remove_all(dir);
}
