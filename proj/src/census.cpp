#include "mdyn/census.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

#include "mdyn/error.hpp"

namespace mdyn {

namespace {

namespace fs = std::filesystem;

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) throw Error(ErrorKind::ParameterOutOfRange, "census space too large");
    r *= b;
  }
  return r;
}

std::uint64_t degree_block(const CensusTask& t, int d) {
  std::uint64_t w = static_cast<std::uint64_t>(2 * t.height + 1);
  if (d == 0) return 0;
  if (t.unit_only) return 2 * ipow(w, d - 1);
  return static_cast<std::uint64_t>(t.height) * ipow(w, d);
}

void validate(const CensusTask& t) {
  if (t.degree_min < 1 || t.degree_max < t.degree_min)
    throw Error(ErrorKind::ParameterOutOfRange, "census degree range must satisfy 1 <= min <= max");
  if (t.height < 1) throw Error(ErrorKind::ParameterOutOfRange, "census height must be >= 1");
  if (t.jobs < 1) throw Error(ErrorKind::ParameterOutOfRange, "census needs at least one job");
}

nlohmann::json task_key(const CensusTask& t, int shards) {
  return {{"degree_min", t.degree_min}, {"degree_max", t.degree_max}, {"height", t.height},
          {"unit_only", t.unit_only},   {"shards", shards}};
}

struct Checkpoint {
  std::vector<std::uint64_t> next;
  std::uintmax_t out_bytes = 0;
  long records = 0;
  std::map<std::string, long> by_status;
};

std::optional<Checkpoint> load_checkpoint(const std::string& path, const nlohmann::json& key) {
  if (path.empty() || !fs::exists(path)) return std::nullopt;
  std::ifstream in(path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.at("task") != key)
    throw Error(ErrorKind::ParameterOutOfRange, "checkpoint " + path + " belongs to a different census task");
  Checkpoint c;
  c.next = j.at("next").get<std::vector<std::uint64_t>>();
  c.out_bytes = j.at("out_bytes").get<std::uintmax_t>();
  c.records = j.at("records").get<long>();
  c.by_status = j.at("by_status").get<std::map<std::string, long>>();
  return c;
}

void save_checkpoint(const std::string& path, const nlohmann::json& key, const Checkpoint& c, bool complete) {
  nlohmann::json j = {{"version", 1},          {"task", key},
                      {"next", c.next},        {"out_bytes", c.out_bytes},
                      {"records", c.records},  {"by_status", c.by_status},
                      {"complete", complete}};
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
  }
  fs::rename(tmp, path);
}

struct Item {
  int shard;
  std::uint64_t index;
  std::optional<nlohmann::json> record;
};

}  // namespace

std::uint64_t census_space_size(const CensusTask& task) {
  validate(task);
  std::uint64_t n = 0;
  for (int d = task.degree_min; d <= task.degree_max; ++d) n += degree_block(task, d);
  return n;
}

Coeffs census_candidate(const CensusTask& task, std::uint64_t index) {
  int d = task.degree_min;
  for (;; ++d) {
    if (d > task.degree_max) throw Error(ErrorKind::ParameterOutOfRange, "candidate index out of range");
    std::uint64_t b = degree_block(task, d);
    if (index < b) break;
    index -= b;
  }
  std::uint64_t w = static_cast<std::uint64_t>(2 * task.height + 1);
  Coeffs c(d + 1);
  // Mixed radix, a_0 least significant.
  if (task.unit_only) {
    c[d] = 1;
    c[0] = (index % 2 == 0) ? -1 : 1;
    index /= 2;
    for (int i = 1; i < d; ++i) {
      c[i] = static_cast<long>(index % w) - task.height;
      index /= w;
    }
  } else {
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<long>(index % w) - task.height;
      index /= w;
    }
    c[d] = static_cast<long>(index) + 1;
  }
  return c;
}

nlohmann::json census_record(const CensusTask& task, const Coeffs& coeffs) {
  IntPolynomial f(coeffs);
  if (f.degree() < 1 || !f.is_canonical() || !is_irreducible(f)) return nullptr;
  bool unit = f.is_monic() && abs(f[0]) == 1;
  if (task.unit_only && !unit) return nullptr;
  nlohmann::json rec;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : coeffs) cs.push_back(c.get_si());
  rec["coeffs"] = cs;
  rec["degree"] = f.degree();
  rec["unit"] = unit;
  try {
    OrbitOptions opt = task.orbit;
    opt.find_square_relations = false;
    OrbitRecord r = iterate(make_algebraic(f, 0, opt.budget), opt);
    rec["status"] = to_string(r.status.tag);
    switch (r.status.tag) {
      case OrbitTag::FixedPointReached:
        rec["orbit_size"] = r.orbit_size();
        rec["class"] = to_string(r.status.fixed_class);
        break;
      case OrbitTag::CertifiedInfinite:
        rec["orbit_size"] = "infinite";
        rec["reason"] = to_string(r.status.reason);
        if (r.deg4) rec["m3_equals_m1_squared"] = r.deg4->square_signature;
        break;
      case OrbitTag::BudgetExhausted:
        rec["orbit_size"] = nullptr;
        rec["limit"] = r.status.limit;
        rec["steps_recorded"] = r.steps.size();
        break;
    }
  } catch (const Error& e) {
    rec["status"] = "Error";
    rec["orbit_size"] = nullptr;
    rec["error"] = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return rec;
}

CensusSummary run_census(const CensusTask& task, const std::function<void(const nlohmann::json&)>& on_record) {
  validate(task);
  CensusSummary sum;
  sum.candidates = census_space_size(task);

  int shards = task.shards > 0 ? task.shards : 64;
  if (!task.checkpoint_path.empty() && fs::exists(task.checkpoint_path)) {
    std::ifstream in(task.checkpoint_path);
    shards = nlohmann::json::parse(in).at("task").at("shards").get<int>();
  }
  shards = static_cast<int>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(shards, sum.candidates)));
  nlohmann::json key = task_key(task, shards);
  std::vector<std::uint64_t> begin(shards + 1);
  for (int s = 0; s <= shards; ++s) begin[s] = sum.candidates * s / shards;

  Checkpoint cp;
  if (auto old = load_checkpoint(task.checkpoint_path, key)) {
    cp = *old;
    sum.resumed = true;
  } else {
    cp.next.assign(begin.begin(), begin.end() - 1);
  }

  std::ofstream out;
  if (!task.out_path.empty()) {
    if (sum.resumed && fs::exists(task.out_path)) {
      // Drop anything written after the last checkpoint.
      fs::resize_file(task.out_path, cp.out_bytes);
      out.open(task.out_path, std::ios::app | std::ios::binary);
    } else {
      out.open(task.out_path, std::ios::trunc | std::ios::binary);
      cp.out_bytes = 0;
    }
    if (!out) throw std::runtime_error("cannot open census output " + task.out_path);
  }

  std::mutex mu;
  std::condition_variable cv;
  std::deque<Item> queue;
  std::atomic<int> next_shard{0};
  std::atomic<bool> stop{false};
  int running = task.jobs;

  auto worker = [&] {
    for (;;) {
      int s = next_shard.fetch_add(1);
      if (s >= shards || stop) break;
      for (std::uint64_t i = cp.next[s]; i < begin[s + 1] && !stop; ++i) {
        Item it{s, i, std::nullopt};
        nlohmann::json r = census_record(task, census_candidate(task, i));
        if (!r.is_null()) it.record = std::move(r);
        std::lock_guard<std::mutex> lk(mu);
        queue.push_back(std::move(it));
        cv.notify_one();
      }
    }
    std::lock_guard<std::mutex> lk(mu);
    --running;
    cv.notify_one();
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < task.jobs; ++j) pool.emplace_back(worker);

  long since = 0;
  auto commit = [&](bool complete) {
    if (out.is_open()) {
      out.flush();
      if (!out) throw std::runtime_error("write failed on " + task.out_path);
    }
    if (!task.checkpoint_path.empty()) save_checkpoint(task.checkpoint_path, key, cp, complete);
    since = 0;
  };
  try {
    for (;;) {
      std::unique_lock<std::mutex> lk(mu);
      cv.wait(lk, [&] { return !queue.empty() || running == 0; });
      if (queue.empty()) break;
      Item it = std::move(queue.front());
      queue.pop_front();
      lk.unlock();
      if (stop) continue;
      cp.next[it.shard] = it.index + 1;
      if (!it.record) continue;
      const nlohmann::json& rec = *it.record;
      if (out.is_open()) {
        std::string line = rec.dump() + '\n';
        out << line;
        cp.out_bytes += line.size();
      }
      ++cp.records;
      ++sum.records;
      ++cp.by_status[rec.at("status").get<std::string>()];
      if (on_record) on_record(rec);
      if (++since >= task.checkpoint_every) commit(false);
      if (task.stop_after > 0 && sum.records >= task.stop_after) stop = true;
    }
  } catch (...) {
    stop = true;
    for (auto& t : pool) t.join();
    throw;
  }
  for (auto& t : pool) t.join();
  sum.complete = !stop;
  commit(sum.complete);
  sum.total_records = cp.records;
  sum.by_status = cp.by_status;
  return sum;
}

nlohmann::json to_json(const CensusSummary& s) {
  return {{"candidates", s.candidates}, {"records", s.records}, {"total_records", s.total_records},
          {"resumed", s.resumed},       {"complete", s.complete}, {"by_status", s.by_status}};
}

}  // namespace mdyn
