#include "dioph/cache.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace dioph {

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ResultCache::ResultCache(std::filesystem::path file) : file_(std::move(file)) {
  {
    std::ifstream in(file_);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        auto doc = nlohmann::ordered_json::parse(line);
        if (doc.at("v").get<int>() != 1) throw std::runtime_error("unsupported version");
        Entry entry{doc.at("digest").get<std::string>(), doc.at("request").get<std::string>(),
                    doc.at("records").get<std::vector<std::string>>()};
        entries_.push_back(std::move(entry));
      } catch (const std::exception&) {
        warnings_.push_back("cache: skipping corrupt line " + std::to_string(line_no) +
                            " in " + file_.string());
      }
    }
  }
  // Probe writability now so a doomed run fails before doing any work.
  std::ofstream probe(file_, std::ios::app);
  if (!probe) throw std::invalid_argument("cache: cannot open " + file_.string() +
                                          " for append");
}

std::optional<std::vector<std::string>> ResultCache::lookup(
    std::string_view canonical_request) const {
  const std::string digest = fnv1a_digest(canonical_request);
  for (const auto& entry : entries_) {
    if (entry.digest == digest && entry.request == canonical_request) return entry.records;
  }
  return std::nullopt;
}

void ResultCache::store(std::string_view canonical_request,
                        const std::vector<std::string>& record_lines) {
  nlohmann::ordered_json doc;
  doc["v"] = 1;
  doc["digest"] = fnv1a_digest(canonical_request);
  doc["request"] = std::string(canonical_request);
  doc["records"] = record_lines;

  std::ofstream out(file_, std::ios::app);
  if (!out) throw std::runtime_error("cache: cannot append to " + file_.string());
  out << doc.dump() << '\n';
  if (!out) throw std::runtime_error("cache: write to " + file_.string() + " failed");

  entries_.push_back(Entry{doc["digest"].get<std::string>(), std::string(canonical_request),
                           record_lines});
}

}  // namespace dioph
