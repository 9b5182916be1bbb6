#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "dioph/validate.hpp"

// One record per result, schema tagged with "type" and "v". Big integers
// travel as decimal strings so no consumer ever rounds them; the exponents
// x and y are plain numbers. Parsers ignore unknown fields.
namespace dioph::records {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Low-level codec shared with checkpoint files.
json triple_to_json(const SolutionTriple& t);
SolutionTriple triple_from_json(const json& j);
void embed_instance(json& j, const EquationInstance& inst);
EquationInstance instance_from_json(const json& j);

// Record builders.
json solution(const EquationInstance& inst, const SolutionTriple& t);
json family_descriptor(const SolutionFamily& fam);
json family_prime(std::uint64_t n, const FamilyPrimeRow& row);
json catalan_witness(const CatalanWitness& w);
json frenicle_witness(const Natural& p, const FrenicleHit& hit);
json report(const ValidationReport& r);
json completeness(Completeness c);
json note(std::string_view text);

// Parsers, lossless inverses of the builders above. Throw std::invalid_argument
// on anything malformed.
std::pair<EquationInstance, SolutionTriple> parse_solution(const json& j);
SolutionFamily parse_family_descriptor(const json& j);
std::pair<std::uint64_t, FamilyPrimeRow> parse_family_prime(const json& j);
CatalanWitness parse_catalan_witness(const json& j);
ValidationReport parse_report(const json& j);
Completeness parse_completeness(const json& j);

// Output renderings. CSV uses one fixed column set for every record type;
// list-valued fields are joined with ';' inside the cell.
std::string csv_header();
std::string to_csv_row(const json& record);
std::string to_human(const json& record);

}  // namespace dioph::records
