#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include <json.hpp>

#include "mdyn/orbit.hpp"

namespace mdyn {

// Enumeration space: for each degree, coefficient vectors (a_d, ..., a_0)
// in lexicographic order with 1 <= a_d <= height and |a_i| <= height.
// unit_only restricts to a_d = 1, a_0 = +-1. Only canonical irreducible
// candidates produce records.
struct CensusTask {
  int degree_min = 2;
  int degree_max = 2;
  long height = 1;
  bool unit_only = false;
  int jobs = 1;
  int shards = 0;  // 0 picks a default; a checkpoint's value wins on resume
  std::string out_path;         // JSON lines; empty for in-memory runs
  std::string checkpoint_path;  // empty disables checkpointing
  long checkpoint_every = 256;  // records between checkpoint writes
  long stop_after = 0;          // stop (as if killed) after this many records
  OrbitOptions orbit;
};

struct CensusSummary {
  std::uint64_t candidates = 0;  // size of the enumeration space
  long records = 0;              // records written by this run
  long total_records = 0;        // including records from earlier runs
  bool resumed = false;
  bool complete = false;
  std::map<std::string, long> by_status;
};

std::uint64_t census_space_size(const CensusTask& task);
// Coefficients (ascending) of candidate number `index`.
Coeffs census_candidate(const CensusTask& task, std::uint64_t index);
// The record for one polynomial, or null when it is not a canonical
// irreducible candidate of the task.
nlohmann::json census_record(const CensusTask& task, const Coeffs& coeffs);

// on_record runs on the calling thread, in output order.
CensusSummary run_census(const CensusTask& task,
                         const std::function<void(const nlohmann::json&)>& on_record = {});

nlohmann::json to_json(const CensusSummary& s);

}  // namespace mdyn
