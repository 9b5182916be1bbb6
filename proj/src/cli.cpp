#include "dioph/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "dioph/cache.hpp"
#include "dioph/records.hpp"
#include "dioph/validate.hpp"

namespace dioph::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint64_t require_n(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("missing --n");
  if (*cfg.n == 0) throw UsageError("--n must be at least 1");
  return *cfg.n;
}

const Natural& require_p(const RunConfig& cfg) {
  if (!cfg.p) throw UsageError("missing --p");
  return *cfg.p;
}

// Sweep primes come either from an explicit list or from a bound; the bound
// is expanded here so both spellings share one canonical request.
std::vector<Natural> sweep_primes(const RunConfig& cfg) {
  if (!cfg.p_list.empty() && cfg.p_max) {
    throw UsageError("give either --p or --p-max, not both");
  }
  if (!cfg.p_list.empty()) return cfg.p_list;
  if (!cfg.p_max) throw UsageError("sweep needs --p or --p-max");
  std::vector<Natural> primes;
  for (Natural c = 3; c <= *cfg.p_max; c += 2) {
    if (ntheory::is_prime(c)) primes.push_back(c);
  }
  return primes;
}

EquationInstance search_instance(const RunConfig& cfg) {
  const bool generic = cfg.a.has_value() || cfg.b.has_value();
  const bool family = cfg.n.has_value() || cfg.p.has_value();
  if (generic && family) throw UsageError("give either --n/--p or --a/--b, not both");
  if (generic) {
    if (!cfg.a || !cfg.b) throw UsageError("generic search needs both --a and --b");
    return EquationInstance::generic(*cfg.a, *cfg.b);
  }
  return EquationInstance::family_four_n(require_n(cfg), require_p(cfg));
}

json canonical_request_json(const RunConfig& cfg) {
  json req;
  switch (cfg.command) {
    case Command::Classify:
      req["command"] = "classify";
      req["n"] = require_n(cfg);
      req["p"] = require_p(cfg).str();
      req["max_family_exponent"] = cfg.max_family_exponent;
      break;
    case Command::Search: {
      req["command"] = "search";
      records::embed_instance(req, search_instance(cfg));
      req["x_max"] = cfg.x_max;
      req["y_max"] = cfg.y_max;
      break;
    }
    case Command::Sweep: {
      if (cfg.n_values.empty()) throw UsageError("sweep needs --n");
      req["command"] = "sweep";
      req["n"] = cfg.n_values;
      json primes = json::array();
      for (const auto& p : sweep_primes(cfg)) primes.push_back(p.str());
      req["p"] = std::move(primes);
      req["x_max"] = cfg.x_max;
      req["y_max"] = cfg.y_max;
      req["max_power_bits"] = cfg.max_power_bits;
      break;
    }
    case Command::FamilyPrimes:
      req["command"] = "family-primes";
      req["n"] = require_n(cfg);
      req["k_max"] = cfg.k_max;
      break;
    case Command::Catalan:
      req["command"] = "catalan";
      req["max_base"] = cfg.max_base.str();
      req["max_exp"] = cfg.max_exp;
      break;
    case Command::Frenicle:
      req["command"] = "frenicle";
      req["p"] = require_p(cfg).str();
      if (!cfg.max_value) throw UsageError("frenicle needs --max-value");
      req["max_value"] = cfg.max_value->str();
      break;
  }
  return req;
}

std::vector<json> execute(const RunConfig& cfg) {
  std::vector<json> out;
  switch (cfg.command) {
    case Command::Classify: {
      ClassifyOptions opts;
      opts.max_family_exponent = cfg.max_family_exponent;
      auto result = classify(require_n(cfg), require_p(cfg), opts);
      const auto& desc = result.description;
      for (const auto& t : desc.sporadic) out.push_back(records::solution(desc.instance, t));
      for (const auto& fam : desc.families) out.push_back(records::family_descriptor(fam));
      out.push_back(records::completeness(desc.completeness));
      for (const auto& text : desc.notes) out.push_back(records::note(text));
      break;
    }
    case Command::Search: {
      auto inst = search_instance(cfg);
      const SearchBox box{cfg.x_max, cfg.y_max};
      SearchOptions opts;
      opts.workers = cfg.workers;
      opts.residue_filter = cfg.residue_filter;
      opts.checkpoint_path = cfg.checkpoint_path;
      std::vector<SolutionTriple> found;
      if (cfg.resume_from_checkpoint) {
        if (!cfg.checkpoint_path) throw UsageError("--resume needs --checkpoint");
        auto cp = load_checkpoint(*cfg.checkpoint_path);
        if (!(cp.instance == inst) || !(cp.box == box)) {
          throw UsageError("checkpoint does not match the requested instance and box");
        }
        found = resume(cp, opts);
      } else {
        found = enumerate(inst, box, opts);
      }
      for (const auto& t : found) out.push_back(records::solution(inst, t));
      break;
    }
    case Command::Sweep: {
      ValidateOptions opts;
      opts.workers = cfg.workers;
      opts.max_power_bits = cfg.max_power_bits;
      auto reports = sweep(cfg.n_values, sweep_primes(cfg), SearchBox{cfg.x_max, cfg.y_max},
                           opts);
      for (const auto& r : reports) out.push_back(records::report(r));
      break;
    }
    case Command::FamilyPrimes: {
      const std::uint64_t n = require_n(cfg);
      for (const auto& row : family_prime_scan(n, cfg.k_max)) {
        out.push_back(records::family_prime(n, row));
      }
      break;
    }
    case Command::Catalan: {
      CatalanBox box{cfg.max_base, cfg.max_base, cfg.max_exp, cfg.max_exp};
      for (const auto& w : catalan_box_search(box)) {
        out.push_back(records::catalan_witness(w));
      }
      break;
    }
    case Command::Frenicle: {
      const Natural& p = require_p(cfg);
      for (const auto& hit : frenicle_box_search(p, *cfg.max_value)) {
        out.push_back(records::frenicle_witness(p, hit));
      }
      break;
    }
  }
  return out;
}

void emit(const std::vector<json>& recs, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Jsonl:
      for (const auto& r : recs) out << r.dump() << '\n';
      break;
    case OutputFormat::Csv:
      out << records::csv_header() << '\n';
      for (const auto& r : recs) out << records::to_csv_row(r) << '\n';
      break;
    case OutputFormat::Human:
      if (recs.empty()) {
        out << "(no records)" << '\n';
      } else {
        for (const auto& r : recs) out << records::to_human(r) << '\n';
      }
      break;
  }
}

int exit_status(const std::vector<json>& recs) {
  for (const auto& r : recs) {
    if (r.value("type", "") == "report" && r.value("verdict", "") == "disagree") {
      return kDisagree;
    }
  }
  return kOk;
}

}  // namespace

std::optional<std::filesystem::path> env_cache_path() {
  const char* value = std::getenv("DIOPH_CACHE");
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::filesystem::path(value);
}

std::string canonical_request(const RunConfig& config) {
  return canonical_request_json(config).dump();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string request = canonical_request(config);

    std::optional<ResultCache> cache;
    if (!config.no_cache) {
      auto path = config.cache_path ? config.cache_path : env_cache_path();
      if (path) {
        cache.emplace(*path);
        for (const auto& warning : cache->warnings()) err << "warning: " << warning << '\n';
      }
    }

    std::vector<json> recs;
    if (cache) {
      if (auto lines = cache->lookup(request)) {
        for (const auto& line : *lines) {
          auto r = json::parse(line);
          r["cached"] = true;
          recs.push_back(std::move(r));
        }
        emit(recs, config.format, out);
        return exit_status(recs);
      }
    }

    recs = execute(config);
    if (cache) {
      std::vector<std::string> lines;
      lines.reserve(recs.size());
      for (const auto& r : recs) lines.push_back(r.dump());
      cache->store(request, lines);
    }
    emit(recs, config.format, out);
    return exit_status(recs);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace dioph::cli
