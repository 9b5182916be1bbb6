#include "dioph/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "dioph/ntheory.hpp"
#include "dioph/records.hpp"

namespace dioph {

namespace {

// Squares hit 12 classes mod 64 and 16 mod 63; the combined filter passes
// roughly 1 in 21 non-squares. Both tables are filled at first use.
struct ResidueTables {
  std::array<bool, 64> sq64{};
  std::array<bool, 63> sq63{};
  ResidueTables() {
    for (unsigned long r = 0; r < 64; ++r) sq64[(r * r) % 64] = true;
    for (unsigned long r = 0; r < 63; ++r) sq63[(r * r) % 63] = true;
  }
};

const ResidueTables& residue_tables() {
  static const ResidueTables tables;
  return tables;
}

}  // namespace

bool maybe_square(const Natural& s) {
  const auto& t = residue_tables();
  return t.sq64[s.mod_u(64)] && t.sq63[s.mod_u(63)];
}

std::vector<SolutionTriple> enumerate_row(const EquationInstance& inst, std::uint64_t x,
                                          std::uint64_t y_max, bool residue_filter) {
  std::vector<SolutionTriple> out;
  const Natural a_pow = Natural::pow(inst.base1(), x);
  Natural b_pow = 1;
  for (std::uint64_t y = 0; y <= y_max; ++y) {
    const Natural sum = a_pow + b_pow;
    if (!residue_filter || maybe_square(sum)) {
      if (auto z = ntheory::perfect_square_root(sum)) {
        out.push_back(SolutionTriple{x, y, std::move(*z)});
      }
    }
    b_pow *= inst.base2();
  }
  return out;
}

namespace {

// Runs the given x-rows across workers. Rows are claimed through an atomic
// counter; each result lands in a slot indexed by the row's position, so the
// merged output does not depend on scheduling. When cp is non-null, finished
// rows are folded into it under a lock and (if requested) persisted.
std::vector<SolutionTriple> run_rows(const EquationInstance& inst, const SearchBox& box,
                                     const std::vector<std::uint64_t>& rows,
                                     const SearchOptions& opts, Checkpoint* cp) {
  std::vector<std::vector<SolutionTriple>> slots(rows.size());
  unsigned workers = opts.workers != 0 ? opts.workers
                                       : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(rows.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::mutex cp_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&]() {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= rows.size()) return;
        auto found = enumerate_row(inst, rows[i], box.y_max, opts.residue_filter);
        if (cp != nullptr) {
          std::lock_guard<std::mutex> lock(cp_mutex);
          cp->completed_rows.insert(rows[i]);
          cp->found.insert(cp->found.end(), found.begin(), found.end());
          if (opts.checkpoint_path) save_checkpoint(*cp, *opts.checkpoint_path);
        }
        slots[i] = std::move(found);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SolutionTriple> merged;
  for (auto& slot : slots) {
    merged.insert(merged.end(), std::make_move_iterator(slot.begin()),
                  std::make_move_iterator(slot.end()));
  }
  return merged;
}

}  // namespace

std::vector<SolutionTriple> enumerate(const EquationInstance& inst, const SearchBox& box,
                                      const SearchOptions& opts) {
  std::vector<std::uint64_t> rows;
  rows.reserve(box.x_max + 1);
  for (std::uint64_t x = 0; x <= box.x_max; ++x) rows.push_back(x);

  Checkpoint cp{inst, box, {}, {}};
  Checkpoint* cp_ptr = opts.checkpoint_path ? &cp : nullptr;
  auto found = run_rows(inst, box, rows, opts, cp_ptr);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<SolutionTriple> resume(const Checkpoint& cp, const SearchOptions& opts) {
  for (std::uint64_t x : cp.completed_rows) {
    if (x > cp.box.x_max) {
      throw std::invalid_argument("resume: checkpoint row " + std::to_string(x) +
                                  " lies outside the box");
    }
  }
  for (const auto& t : cp.found) {
    if (cp.completed_rows.count(t.x) == 0 || t.y > cp.box.y_max) {
      throw std::invalid_argument("resume: checkpoint triple outside its completed rows");
    }
    if (!verify_triple(cp.instance, t)) {
      throw std::invalid_argument("resume: checkpoint triple fails the equation");
    }
  }
  {
    auto sorted = cp.found;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("resume: checkpoint repeats a triple");
    }
  }

  std::vector<std::uint64_t> remaining;
  for (std::uint64_t x = 0; x <= cp.box.x_max; ++x) {
    if (cp.completed_rows.count(x) == 0) remaining.push_back(x);
  }

  Checkpoint live = cp;
  Checkpoint* cp_ptr = opts.checkpoint_path ? &live : nullptr;
  auto found = run_rows(cp.instance, cp.box, remaining, opts, cp_ptr);
  found.insert(found.end(), cp.found.begin(), cp.found.end());
  std::sort(found.begin(), found.end());
  return found;
}

void save_checkpoint(const Checkpoint& cp, const std::filesystem::path& path) {
  nlohmann::ordered_json doc;
  doc["v"] = 1;
  doc["instance"] = nlohmann::ordered_json::object();
  records::embed_instance(doc["instance"], cp.instance);
  doc["box"] = {{"x_max", cp.box.x_max}, {"y_max", cp.box.y_max}};
  doc["completed_rows"] = cp.completed_rows;
  doc["found"] = nlohmann::ordered_json::array();
  for (const auto& t : cp.found) doc["found"].push_back(records::triple_to_json(t));

  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp.string());
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("checkpoint: cannot open " + path.string());
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw std::invalid_argument("checkpoint: " + path.string() + " is not valid JSON: " +
                                e.what());
  }
  try {
    if (doc.at("v").get<int>() != 1) {
      throw std::invalid_argument("checkpoint: unsupported version");
    }
    Checkpoint cp{records::instance_from_json(doc.at("instance")),
                  SearchBox{doc.at("box").at("x_max").get<std::uint64_t>(),
                            doc.at("box").at("y_max").get<std::uint64_t>()},
                  {},
                  {}};
    for (const auto& row : doc.at("completed_rows")) {
      cp.completed_rows.insert(row.get<std::uint64_t>());
    }
    for (const auto& item : doc.at("found")) {
      cp.found.push_back(records::triple_from_json(item));
    }
    return cp;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw std::invalid_argument("checkpoint: " + path.string() + " is malformed: " + e.what());
  }
}

}  // namespace dioph
