#include "dioph/records.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace dioph::records {

namespace {

Natural natural_field(const json& j, const char* key) {
  const auto& field = j.at(key);
  if (!field.is_string()) {
    throw std::invalid_argument(std::string("record: field \"") + key +
                                "\" must be a decimal string");
  }
  return Natural::from_decimal(field.get<std::string>());
}

json stamp(const char* type) {
  json j;
  j["type"] = type;
  j["v"] = kSchemaVersion;
  return j;
}

void check_stamp(const json& j, const char* type) {
  if (!j.is_object() || j.value("type", "") != type ||
      j.value("v", -1) != kSchemaVersion) {
    throw std::invalid_argument(std::string("record: expected a v1 \"") + type + "\" record");
  }
}

json triples_to_json(const std::vector<SolutionTriple>& ts) {
  json arr = json::array();
  for (const auto& t : ts) arr.push_back(triple_to_json(t));
  return arr;
}

std::vector<SolutionTriple> triples_from_json(const json& arr) {
  std::vector<SolutionTriple> ts;
  for (const auto& item : arr) ts.push_back(triple_from_json(item));
  return ts;
}

}  // namespace

json triple_to_json(const SolutionTriple& t) {
  json j;
  j["x"] = t.x;
  j["y"] = t.y;
  j["z"] = t.z.str();
  return j;
}

SolutionTriple triple_from_json(const json& j) {
  return SolutionTriple{j.at("x").get<std::uint64_t>(), j.at("y").get<std::uint64_t>(),
                        natural_field(j, "z")};
}

void embed_instance(json& j, const EquationInstance& inst) {
  if (inst.is_family()) {
    j["n"] = inst.family().n;
    j["p"] = inst.family().p.str();
  } else {
    j["a"] = inst.generic_eq().a.str();
    j["b"] = inst.generic_eq().b.str();
  }
}

EquationInstance instance_from_json(const json& j) {
  if (j.contains("n")) {
    return EquationInstance::family_four_n(j.at("n").get<std::uint64_t>(),
                                           natural_field(j, "p"));
  }
  if (j.contains("a")) {
    return EquationInstance::generic(natural_field(j, "a"), natural_field(j, "b"));
  }
  throw std::invalid_argument("record: no instance fields (need n/p or a/b)");
}

json solution(const EquationInstance& inst, const SolutionTriple& t) {
  json j = stamp("solution");
  embed_instance(j, inst);
  j["x"] = t.x;
  j["y"] = t.y;
  j["z"] = t.z.str();
  return j;
}

std::pair<EquationInstance, SolutionTriple> parse_solution(const json& j) {
  check_stamp(j, "solution");
  return {instance_from_json(j), triple_from_json(j)};
}

json family_descriptor(const SolutionFamily& fam) {
  json j = stamp("family");
  j["n"] = fam.n;
  j["p"] = fam.p.str();
  j["parameter"] = fam.parameter_name;
  j["x_of_k"] = fam.x_of_k();
  j["y_of_k"] = fam.y_of_k();
  j["z_of_k"] = fam.z_of_k();
  j["admissible_when"] = fam.admissibility();
  return j;
}

SolutionFamily parse_family_descriptor(const json& j) {
  check_stamp(j, "family");
  if (!j.contains("parameter")) {
    throw std::invalid_argument("record: family record has no parameter field");
  }
  return SolutionFamily{j.at("n").get<std::uint64_t>(), natural_field(j, "p"),
                        j.at("parameter").get<std::string>()};
}

json family_prime(std::uint64_t n, const FamilyPrimeRow& row) {
  json j = stamp("family");
  j["n"] = n;
  j["k"] = row.k;
  j["p"] = row.p.str();
  j["is_prime"] = row.is_prime;
  j["probabilistic"] = row.probabilistic;
  return j;
}

std::pair<std::uint64_t, FamilyPrimeRow> parse_family_prime(const json& j) {
  check_stamp(j, "family");
  if (!j.contains("k")) {
    throw std::invalid_argument("record: family prime record has no k field");
  }
  return {j.at("n").get<std::uint64_t>(),
          FamilyPrimeRow{j.at("k").get<std::uint64_t>(), natural_field(j, "p"),
                         j.at("is_prime").get<bool>(), j.at("probabilistic").get<bool>()}};
}

json catalan_witness(const CatalanWitness& w) {
  json j = stamp("witness");
  j["kind"] = "consecutive_powers";
  j["a"] = w.a.str();
  j["b"] = w.b.str();
  j["x"] = w.x;
  j["y"] = w.y;
  return j;
}

CatalanWitness parse_catalan_witness(const json& j) {
  check_stamp(j, "witness");
  if (j.value("kind", "") != "consecutive_powers") {
    throw std::invalid_argument("record: witness is not a consecutive-powers witness");
  }
  return CatalanWitness{natural_field(j, "a"), natural_field(j, "b"),
                        j.at("x").get<std::uint64_t>(), j.at("y").get<std::uint64_t>()};
}

json frenicle_witness(const Natural& p, const FrenicleHit& hit) {
  json j = stamp("witness");
  j["kind"] = "square_minus_one";
  j["p"] = p.str();
  j["x"] = hit.x.str();
  j["exponent"] = hit.exponent;
  return j;
}

json report(const ValidationReport& r) {
  json j = stamp("report");
  embed_instance(j, r.instance);
  j["x_max"] = r.box.x_max;
  j["y_max"] = r.box.y_max;
  j["verdict"] = r.verdict == Verdict::Agree ? "agree" : "disagree";
  j["classifier_in_box"] = triples_to_json(r.classifier_in_box);
  j["oracle"] = triples_to_json(r.oracle);
  j["missing_from_classifier"] = triples_to_json(r.missing_from_classifier);
  j["extra_in_classifier"] = triples_to_json(r.extra_in_classifier);
  return j;
}

ValidationReport parse_report(const json& j) {
  check_stamp(j, "report");
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict != "agree" && verdict != "disagree") {
    throw std::invalid_argument("record: unknown verdict \"" + verdict + "\"");
  }
  return ValidationReport{
      instance_from_json(j),
      SearchBox{j.at("x_max").get<std::uint64_t>(), j.at("y_max").get<std::uint64_t>()},
      triples_from_json(j.at("classifier_in_box")),
      triples_from_json(j.at("oracle")),
      triples_from_json(j.at("missing_from_classifier")),
      triples_from_json(j.at("extra_in_classifier")),
      verdict == "agree" ? Verdict::Agree : Verdict::Disagree};
}

json completeness(Completeness c) {
  json j = stamp("note");
  j["kind"] = "completeness";
  j["completeness"] = c == Completeness::CompleteByTheorem ? "complete_by_theorem" : "box_only";
  return j;
}

Completeness parse_completeness(const json& j) {
  check_stamp(j, "note");
  const std::string value = j.value("completeness", "");
  if (value == "complete_by_theorem") return Completeness::CompleteByTheorem;
  if (value == "box_only") return Completeness::BoxOnly;
  throw std::invalid_argument("record: unknown completeness \"" + value + "\"");
}

json note(std::string_view text) {
  json j = stamp("note");
  j["note"] = std::string(text);
  return j;
}

namespace {

// Every record type is flattened onto one fixed column set; absent fields
// stay empty so rows from mixed record streams align.
const std::vector<const char*>& csv_columns() {
  static const std::vector<const char*> columns = {
      "type",       "v",
      "cached",     "n",
      "p",          "a",
      "b",          "k",
      "x",          "y",
      "z",          "exponent",
      "kind",       "parameter",
      "x_of_k",     "y_of_k",
      "z_of_k",     "admissible_when",
      "is_prime",   "probabilistic",
      "x_max",      "y_max",
      "verdict",    "classifier_in_box",
      "oracle",     "missing_from_classifier",
      "extra_in_classifier",
      "completeness", "note"};
  return columns;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string triple_list_cell(const json& arr) {
  std::string cell;
  for (const auto& item : arr) {
    if (!cell.empty()) cell += ';';
    cell += std::to_string(item.at("x").get<std::uint64_t>()) + ":" +
            std::to_string(item.at("y").get<std::uint64_t>()) + ":" +
            item.at("z").get<std::string>();
  }
  return cell;
}

std::string csv_cell(const json& record, const char* column) {
  if (!record.contains(column)) return "";
  const auto& field = record.at(column);
  if (field.is_string()) return csv_escape(field.get<std::string>());
  if (field.is_boolean()) return field.get<bool>() ? "true" : "false";
  if (field.is_number()) return field.dump();
  if (field.is_array()) return csv_escape(triple_list_cell(field));
  return csv_escape(field.dump());
}

std::string power_str(const Natural& base, std::uint64_t e) {
  return Natural::pow(base, e).str();
}

std::string human_solution(const json& j) {
  auto [inst, t] = parse_solution(j);
  std::ostringstream os;
  os << "solution (x, y, z) = (" << t.x << ", " << t.y << ", " << t.z.str() << "): "
     << power_str(inst.base1(), t.x) << " + " << power_str(inst.base2(), t.y) << " = "
     << square(t.z).str() << " = " << t.z.str() << "^2";
  return os.str();
}

std::string human_family(const json& j) {
  std::ostringstream os;
  if (j.contains("k")) {
    auto [n, row] = parse_family_prime(j);
    os << "n = " << n << ", k = " << row.k << ": 1 + 2^(" << n << "*" << row.k
       << "+1) = " << row.p.str() << " is "
       << (row.is_prime ? (row.probabilistic ? "probably prime" : "prime") : "composite");
  } else {
    os << "family x = " << j.at("x_of_k").get<std::string>() << ", y = "
       << j.at("y_of_k").get<std::string>() << ", z = " << j.at("z_of_k").get<std::string>()
       << ", admissible when " << j.at("admissible_when").get<std::string>();
  }
  return os.str();
}

std::string human_witness(const json& j) {
  std::ostringstream os;
  if (j.value("kind", "") == "consecutive_powers") {
    os << "witness " << j.at("a").get<std::string>() << "^" << j.at("x").get<std::uint64_t>()
       << " - " << j.at("b").get<std::string>() << "^" << j.at("y").get<std::uint64_t>()
       << " = 1";
  } else {
    os << "witness " << j.at("x").get<std::string>() << "^2 - 1 = "
       << j.at("p").get<std::string>() << "^" << j.at("exponent").get<std::uint64_t>();
  }
  return os.str();
}

std::string human_report(const json& j) {
  std::ostringstream os;
  if (j.contains("n")) {
    os << "n = " << j.at("n").get<std::uint64_t>() << ", p = " << j.at("p").get<std::string>();
  } else {
    os << "a = " << j.at("a").get<std::string>() << ", b = " << j.at("b").get<std::string>();
  }
  os << ", box x <= " << j.at("x_max").get<std::uint64_t>() << ", y <= "
     << j.at("y_max").get<std::uint64_t>() << ": ";
  if (j.at("verdict").get<std::string>() == "agree") {
    os << "agree (" << j.at("oracle").size() << " solution"
       << (j.at("oracle").size() == 1 ? "" : "s") << ")";
  } else {
    os << "DISAGREE, missing from classifier [" << triple_list_cell(j.at("missing_from_classifier"))
       << "], extra in classifier [" << triple_list_cell(j.at("extra_in_classifier")) << "]";
  }
  return os.str();
}

std::string human_note(const json& j) {
  if (j.value("kind", "") == "completeness") {
    return j.at("completeness").get<std::string>() == "complete_by_theorem"
               ? "completeness: complete, backed by the case analysis"
               : "completeness: verified inside the box only";
  }
  return "note: " + j.value("note", "");
}

}  // namespace

std::string csv_header() {
  std::string header;
  for (const char* column : csv_columns()) {
    if (!header.empty()) header += ',';
    header += column;
  }
  return header;
}

std::string to_csv_row(const json& record) {
  std::string row;
  bool first = true;
  for (const char* column : csv_columns()) {
    if (!first) row += ',';
    first = false;
    row += csv_cell(record, column);
  }
  return row;
}

std::string to_human(const json& record) {
  if (!record.is_object() || !record.contains("type")) {
    throw std::invalid_argument("record: not a typed record");
  }
  const std::string type = record.at("type").get<std::string>();
  std::string line;
  if (type == "solution") {
    line = human_solution(record);
  } else if (type == "family") {
    line = human_family(record);
  } else if (type == "witness") {
    line = human_witness(record);
  } else if (type == "report") {
    line = human_report(record);
  } else if (type == "note") {
    line = human_note(record);
  } else {
    throw std::invalid_argument("record: unknown type \"" + type + "\"");
  }
  if (record.value("cached", false)) line += "  [cached]";
  return line;
}

}  // namespace dioph::records
