#include "koszul/report.hpp"

namespace koszul {

namespace {

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ";";
      s += cell(e);
    }
    return s;
  }
  return v.dump();
}

std::string quoted(std::string s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

const std::vector<std::pair<std::string, std::string>> kColumns = {
    {"instance", "seed"},      {"instance", "path"},      {"instance", "p"},
    {"instance", "vars"},      {"instance", "gens"},      {"instance", "D"},
    {"algebra", "length"},     {"algebra", "embdim"},     {"algebra", "cid_pres"},
    {"algebra", "cid_dev"},    {"koszul", "n"},           {"koszul", "h_dims"},
    {"koszul", "h_nus"},       {"koszul", "euler"},       {"theorem", "bound"},
    {"theorem", "slack"},      {"conjecture10", "met"},   {"conjecture10", "slack"},
    {"tor", "len_ideal"},      {"tor", "nu_ideal"},       {"tor", "len_diag"},
    {"tor", "nu_diag"},        {"tor", "agree"},          {"tor", "c9_slack"},
    {"checks", "dd_zero"},     {"checks", "prop7"},       {"checks", "remark8"},
    {"checks", "disc11"},      {"checks", "lift"},
};

}  // namespace

std::string report_to_csv(const Json& run_report) {
  std::string out;
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    if (i) out += ",";
    out += kColumns[i].first + "." + kColumns[i].second;
  }
  out += "\n";
  if (!run_report.contains("instances")) return out;
  for (const auto& inst : run_report.at("instances")) {
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
      if (i) out += ",";
      const auto& [sec, key] = kColumns[i];
      if (inst.contains(sec) && inst.at(sec).contains(key))
        out += quoted(cell(inst.at(sec).at(key)));
    }
    out += "\n";
  }
  return out;
}

}  // namespace koszul
