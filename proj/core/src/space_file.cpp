#include "gbt/space_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gbt {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& what) { throw Error(Errc::schema_violation, what); }

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) schema(where + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

SetFamily family_from(const json& j, const GroundSet& ground, const std::string& field) {
  if (!j.is_array()) schema("'" + field + "' must be an array of subsets");
  std::vector<Subset> members{ground.empty_set()};
  for (const auto& entry : j) {
    auto labels = string_list(entry, "each subset in '" + field + "'");
    members.push_back(ground.parse_subset(labels));
  }
  return SetFamily(ground.size(), std::move(members));
}

std::vector<Subset> added_sets(const SetFamily& before, const SetFamily& after) {
  std::vector<Subset> out;
  for (const auto& s : after)
    if (!before.contains(s)) out.push_back(s);
  return out;
}

nlohmann::ordered_json family_json(const GroundSet& ground, const GeneralizedTopology& t) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& s : t.opens()) out.push_back(ground.labels_of(s));
  return out;
}

}  // namespace

ParsedSpace parse_space_file(std::string_view text, const SpaceFileOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema("space file must be a JSON object");
  for (const char* field : {"points", "mu1", "mu2"})
    if (!doc.contains(field)) schema(std::string("missing field '") + field + "'");
  for (const auto& item : doc.items())
    if (item.key() != "points" && item.key() != "mu1" && item.key() != "mu2")
      schema("unexpected field '" + item.key() + "'");

  GroundSet ground(string_list(doc["points"], "'points'"));
  SetFamily f1 = family_from(doc["mu1"], ground, "mu1");
  SetFamily f2 = family_from(doc["mu2"], ground, "mu2");

  std::vector<Subset> added1, added2;
  if (options.complete_unions) {
    SetFamily c1 = complete_unions(f1), c2 = complete_unions(f2);
    added1 = added_sets(f1, c1);
    added2 = added_sets(f2, c2);
    f1 = std::move(c1);
    f2 = std::move(c2);
  }
  return ParsedSpace{make_space(ground, std::move(f1), std::move(f2)), std::move(added1),
                     std::move(added2)};
}

ParsedSpace read_space_file(const std::filesystem::path& path, const SpaceFileOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_failure, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space_file(buf.str(), options);
}

std::string write_space_file(const GbtSpace& s) {
  std::string out = "{\n";
  out += "  \"points\": " + json(s.ground().names()).dump() + ",\n";
  out += "  \"mu1\": " + family_json(s.ground(), s.mu1()).dump() + ",\n";
  out += "  \"mu2\": " + family_json(s.ground(), s.mu2()).dump() + "\n";
  out += "}\n";
  return out;
}

std::string space_json_compact(const GbtSpace& s) {
  nlohmann::ordered_json j;
  j["points"] = s.ground().names();
  j["mu1"] = family_json(s.ground(), s.mu1());
  j["mu2"] = family_json(s.ground(), s.mu2());
  return j.dump();
}

}  // namespace gbt
