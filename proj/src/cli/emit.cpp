#include <sstream>

#include "parageo/cli/experiment.hpp"

namespace parageo {

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, x] : v.items()) {
      if (!s.empty()) s += " + ";
      const std::string c = x.get<std::string>();
      s += (c == "1" ? "" : "(" + c + ")") + k;
    }
    return s.empty() ? "0" : s;
  }
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + cell(v[i]);
    return s + ")";
  }
  return v.dump();
}

void table(std::ostream& os, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  os << "|";
  for (const auto& h : head) os << " " << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < head.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) {
    os << "|";
    for (const auto& c : r) os << " " << c << " |";
    os << "\n";
  }
}

void markdown_body(std::ostream& os, const std::string& command, const Json& r) {
  std::vector<std::vector<std::string>> rows;
  if (command == "catalog") {
    for (const auto& f : r["families"]) {
      std::string grades;
      for (const auto& g : f["grades"]) grades += (grades.empty() ? "" : " ") + std::to_string(g["dim"].get<int>());
      rows.push_back({cell(f["family"]), cell(f["name"]), f["dim"].dump(), f["depth"].dump(), grades});
    }
    table(os, {"family", "example", "dim", "depth", "grade dims"}, rows);
  } else if (command == "verify") {
    for (const auto& s : r["suites"])
      for (const auto& t : s["identities"])
        rows.push_back({cell(s["suite"]), cell(t["name"]), t["samples"].dump(), t["violations"].dump()});
    table(os, {"suite", "identity", "samples", "violations"}, rows);
  } else if (command == "jets") {
    os << "type " << cell(r["type"]) << ", X = " << cell(r["x"]) << ", grid " << r["grid"].dump() << ": "
       << r["admissible"].dump() << " admissible of " << r["grid_points"].dump() << ", " << r["coinciding"].dump()
       << " coinciding\n\n";
    for (const auto& v : r["verdicts"]) {
      const auto& ce = v["counterexample"];
      rows.push_back({v["order"].dump(), v["equal_jet_pairs"].dump(), ce.is_null() ? "none" : "Z = " + cell(ce["z"])});
    }
    table(os, {"order", "equal-jet pairs", "counterexample"}, rows);
    os << "\nproved bound " << r["claimed_bound"].dump() << ", sharp order on the grid " << r["observed_order"].dump()
       << "\n";
    if (r.contains("partial_sum_claim")) {
      const auto& cl = r["partial_sum_claim"];
      os << "\npartial-sum claim: " << cl["applicable"].dump() << " applicable, " << cl["violations"].size()
         << " violations\n";
    }
  } else if (command == "fiber") {
    for (const auto& p : r["pairs"]) rows.push_back({cell(p["x"]), cell(p["z"]), cell(p["second"])});
    table(os, {"X", "Z", "[X,[X,Z]]"}, rows);
  } else if (command == "family") {
    const std::string dim = r["dimension_lo"] == r["dimension_hi"]
                                ? r["dimension_lo"].dump()
                                : r["dimension_lo"].dump() + ".." + r["dimension_hi"].dump();
    table(os, {"stratum", "family"}, {{cell(r["stratum"]), "dim " + dim}});
    os << "\n";
    table(os, {"X", "admissible", "hull", "K points", "K basis", "K linear"},
          {{cell(r["x"]), r["admissible"].dump(), r["admissible_dimension"].dump(), r["k_points"].dump(),
            cell(r["k_basis"]), r["k_linear"].dump()}});
  } else if (command == "reparam") {
    for (const auto& e : r["entries"])
      rows.push_back({cell(e["z"]), e["exists"].dump(),
                      e["map"].is_null() ? cell(e["failure_reason"]) : cell(e["map"]["text"]), e["verified"].dump()});
    table(os, {"Z", "related", "phi", "verified"}, rows);
  } else if (command == "classify") {
    if (r.contains("stratum")) {
      table(os, {"X", "stratum"}, {{cell(r["x"]), cell(r["stratum"])}});
    } else {
      for (const auto& [label, n] : r["counts"].items()) rows.push_back({label, n.dump()});
      table(os, {"stratum", "members"}, rows);
    }
  }
}

}  // namespace

std::string emit(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format != "md") throw Error(ErrorCode::Usage, "format must be json or md");
  std::ostringstream os;
  const std::string command = report.value("command", "");
  os << "# parageo " << command;
  if (!report["algebra"].is_null()) os << " " << report["algebra"]["name"].get<std::string>();
  os << "\n\n";
  if (report.contains("results") && !report["results"].is_null()) markdown_body(os, command, report["results"]);
  const auto& s = report["summary"];
  os << "\n" << (s["passed"].get<bool>() ? "PASS" : "FAIL") << " (" << s["checks"].dump() << " checks)\n";
  for (const auto& f : s["failures"]) os << "- FAIL " << f.get<std::string>() << "\n";
  return os.str();
}

}  // namespace parageo
