#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dioph/cli.hpp"

namespace {

using dioph::Natural;

// "3", "1,2,4", or "1..4" (inclusive range); combinations like "1..3,5" work.
std::vector<std::uint64_t> parse_range_list(const std::string& text) {
  std::vector<std::uint64_t> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token.empty()) throw std::invalid_argument("empty entry in \"" + text + "\"");
    const std::size_t dots = token.find("..");
    if (dots == std::string::npos) {
      values.push_back(std::stoull(token));
    } else {
      const std::uint64_t lo = std::stoull(token.substr(0, dots));
      const std::uint64_t hi = std::stoull(token.substr(dots + 2));
      if (lo > hi) throw std::invalid_argument("descending range \"" + token + "\"");
      for (std::uint64_t v = lo; v <= hi; ++v) values.push_back(v);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.empty()) throw std::invalid_argument("no values in \"" + text + "\"");
  return values;
}

std::vector<Natural> parse_natural_list(const std::string& text) {
  std::vector<Natural> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    values.push_back(Natural::from_decimal(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

dioph::cli::OutputFormat parse_format(const std::string& name) {
  if (name == "jsonl") return dioph::cli::OutputFormat::Jsonl;
  if (name == "csv") return dioph::cli::OutputFormat::Csv;
  if (name == "human") return dioph::cli::OutputFormat::Human;
  throw std::invalid_argument("unknown format \"" + name + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solutions of (4^n)^x + p^y = z^2, classified and cross-checked"};
  app.require_subcommand(1);

  std::string format = "jsonl";
  std::string cache;
  bool no_cache = false;
  unsigned workers = 0;
  app.add_option("--format", format, "output format: jsonl, csv, or human")
      ->capture_default_str();
  app.add_option("--cache", cache, "result cache file (default: $DIOPH_CACHE)");
  app.add_flag("--no-cache", no_cache, "run without the result cache");
  app.add_option("--workers", workers, "worker threads (0 = one per core)");

  std::uint64_t n = 0;
  std::string p, a, b;
  std::uint64_t x_max = 0, y_max = 0;
  bool no_filter = false;
  std::string checkpoint;
  bool resume = false;
  std::string n_list, p_list, p_max;
  std::uint64_t max_power_bits = 4096;
  std::uint64_t k_max = 0;
  std::uint64_t m_limit = 1'000'000;
  std::string max_base = "2";
  std::uint64_t max_exp = 2;
  std::string max_value;

  auto* cmd_classify = app.add_subcommand("classify", "closed-form solution set of one (n, p)");
  cmd_classify->add_option("--n", n, "family exponent n >= 1")->required();
  cmd_classify->add_option("--p", p, "odd prime p")->required();
  cmd_classify->add_option("--m-limit", m_limit,
                           "largest exponent m tried in p - 1 = 2^m before giving up");

  auto* cmd_search = app.add_subcommand("search", "brute-force enumeration over a box");
  cmd_search->add_option("--n", n, "family exponent n >= 1");
  cmd_search->add_option("--p", p, "odd prime p");
  cmd_search->add_option("--a", a, "generic base a >= 2");
  cmd_search->add_option("--b", b, "generic base b >= 2");
  cmd_search->add_option("--x-max", x_max, "largest x")->required();
  cmd_search->add_option("--y-max", y_max, "largest y")->required();
  cmd_search->add_flag("--no-filter", no_filter, "disable the quadratic-residue prefilter");
  cmd_search->add_option("--checkpoint", checkpoint, "checkpoint file to write (and resume from)");
  cmd_search->add_flag("--resume", resume, "continue from the checkpoint file");

  auto* cmd_sweep = app.add_subcommand("sweep", "classifier vs oracle over many (n, p) pairs");
  cmd_sweep->add_option("--n", n_list, "n values, e.g. 2, 1,3 or 1..4")->required();
  cmd_sweep->add_option("--p", p_list, "comma-separated odd primes");
  cmd_sweep->add_option("--p-max", p_max, "all odd primes up to this bound");
  cmd_sweep->add_option("--x-max", x_max, "largest x")->required();
  cmd_sweep->add_option("--y-max", y_max, "largest y")->required();
  cmd_sweep->add_option("--max-power-bits", max_power_bits,
                        "clamp y so p^y stays under this many bits");

  auto* cmd_family = app.add_subcommand("family-primes",
                                        "primality of 1 + 2^(nk+1) for k = 0..k_max");
  cmd_family->add_option("--n", n, "family exponent n >= 1")->required();
  cmd_family->add_option("--k-max", k_max, "largest k")->required();

  auto* cmd_catalan = app.add_subcommand("catalan",
                                         "witnesses of a^x - b^y = 1 with everything >= 2");
  cmd_catalan->add_option("--max-base", max_base, "largest base tried")->required();
  cmd_catalan->add_option("--max-exp", max_exp, "largest exponent tried")->required();

  auto* cmd_frenicle = app.add_subcommand("frenicle",
                                          "witnesses of x^2 - 1 = p^e with e >= 2");
  cmd_frenicle->add_option("--p", p, "odd prime p")->required();
  cmd_frenicle->add_option("--max-value", max_value, "largest p^e tried")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dioph::cli::kUsageError;
  }

  dioph::cli::RunConfig config;
  try {
    config.format = parse_format(format);
    if (!cache.empty()) config.cache_path = cache;
    config.no_cache = no_cache;
    config.workers = workers;

    if (cmd_classify->parsed()) {
      config.command = dioph::cli::Command::Classify;
      config.n = n;
      config.p = Natural::from_decimal(p);
      config.max_family_exponent = m_limit;
    } else if (cmd_search->parsed()) {
      config.command = dioph::cli::Command::Search;
      if (cmd_search->count("--n") != 0) config.n = n;
      if (!p.empty()) config.p = Natural::from_decimal(p);
      if (!a.empty()) config.a = Natural::from_decimal(a);
      if (!b.empty()) config.b = Natural::from_decimal(b);
      config.x_max = x_max;
      config.y_max = y_max;
      config.residue_filter = !no_filter;
      if (!checkpoint.empty()) config.checkpoint_path = checkpoint;
      config.resume_from_checkpoint = resume;
    } else if (cmd_sweep->parsed()) {
      config.command = dioph::cli::Command::Sweep;
      config.n_values = parse_range_list(n_list);
      if (!p_list.empty()) config.p_list = parse_natural_list(p_list);
      if (!p_max.empty()) config.p_max = Natural::from_decimal(p_max);
      config.x_max = x_max;
      config.y_max = y_max;
      config.max_power_bits = max_power_bits;
    } else if (cmd_family->parsed()) {
      config.command = dioph::cli::Command::FamilyPrimes;
      config.n = n;
      config.k_max = k_max;
    } else if (cmd_catalan->parsed()) {
      config.command = dioph::cli::Command::Catalan;
      config.max_base = Natural::from_decimal(max_base);
      config.max_exp = max_exp;
    } else if (cmd_frenicle->parsed()) {
      config.command = dioph::cli::Command::Frenicle;
      config.p = Natural::from_decimal(p);
      config.max_value = Natural::from_decimal(max_value);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dioph::cli::kUsageError;
  }

  return dioph::cli::run(config, std::cout, std::cerr);
}
