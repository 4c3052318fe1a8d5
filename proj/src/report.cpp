#include <json.hpp>
#include <sstream>

#include "ghw/cli.hpp"
#include "ghw/error.hpp"

namespace ghw {

using nlohmann::json;

std::string to_json(const RunReport& r) {
  json j;
  j["q"] = r.q;
  j["e"] = r.e;
  j["m"] = r.m;
  j["sets"] = r.sets;
  j["complement"] = r.complement;
  j["n"] = r.n;
  j["k"] = r.k;
  j["hierarchy"] = r.hierarchy;
  j["provenance"] = r.provenance;
  j["method"] = r.method;
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.witnesses) j["witnesses"] = *r.witnesses;
  return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunReport r;
    r.q = j.at("q").get<std::uint32_t>();
    r.e = j.at("e").get<std::uint32_t>();
    r.m = j.at("m").get<int>();
    r.sets = j.at("sets").get<std::string>();
    r.complement = j.at("complement").get<bool>();
    r.n = j.at("n").get<std::int64_t>();
    r.k = j.at("k").get<int>();
    r.hierarchy = j.at("hierarchy").get<std::vector<std::int64_t>>();
    r.provenance = j.at("provenance").get<std::vector<std::string>>();
    r.method = j.at("method").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    if (j.contains("witnesses")) r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad report: ") + e.what());
  }
}

std::string to_csv(const RunReport& r) {
  std::ostringstream os;
  os << "r,d_r,provenance,method\n";
  for (std::size_t i = 0; i < r.hierarchy.size(); ++i) {
    os << i + 1 << ',' << r.hierarchy[i] << ',' << r.provenance[i] << ',' << r.method << '\n';
  }
  return os.str();
}

std::string to_text(const RunReport& r) {
  std::ostringstream os;
  os << "GF(" << r.q << ") m=" << r.m << " sets=" << r.sets << (r.complement ? " complement" : "") << '\n';
  os << "[n, k, d] = [" << r.n << ", " << r.k << ", " << (r.hierarchy.empty() ? 0 : r.hierarchy.front()) << "]\n";
  os << "method: " << r.method << '\n';
  for (std::size_t i = 0; i < r.hierarchy.size(); ++i) {
    os << "d_" << i + 1 << " = " << r.hierarchy[i] << "  (" << r.provenance[i] << ")";
    if (r.witnesses && i < r.witnesses->size()) os << "  H = " << (*r.witnesses)[i];
    os << '\n';
  }
  os << "elapsed_ms: " << r.elapsed_ms << '\n';
  return os.str();
}

const std::vector<GoldenExample>& golden_examples() {
  static const std::vector<GoldenExample> list = {
      {"thm1", 2, 4, "1,2,3,4", false, 16, 4, {8, 12, 14, 15}, "T1"},
      {"thm2", 2, 5, "1,2,3;3,4,5", false, 14, 5, {4, 6, 10, 12, 13}, "T2/Table1"},
      {"thm3a", 2, 6, "1,2;1,3,4;2,3,5,6", false, 23, 6, {4, 7, 15, 19, 21, 22}, "T3/Table2"},
      {"thm3b", 3, 5, "1,2;1,3,4;2,3,4,5", false, 103, 5, {22, 76, 94, 100, 102}, "T3/Table2"},
      {"thm4", 3, 6, "1;2;3,4;5,6", false, 21, 6, {2, 4, 10, 12, 18, 20}, "T4/Table4"},
      {"thm5", 2, 5, "2,3,4", true, 24, 5, {12, 18, 21, 23, 24}, "T5/Table5"},
      {"thm6", 2, 6, "1,2;2,3,4", true, 54, 6, {26, 40, 47, 51, 53, 54}, "T6/Table6"},
      {"thm7", 3, 5, "1;2;3;4,5", true, 228, 5, {150, 202, 220, 226, 228}, "T7/Table7"},
      {"app-t8", 2, 6, "1,2;2,3,4,5;1,3,4,6", false, 29, 6, {8, 13, 21, 25, 27, 28}, "A-Table8"},
      {"app-t9", 2, 7, "1,2,3;1,2,4,5;3,4,6,7", false, 33, 7, {8, 12, 17, 25, 29, 31, 32}, "A-Table9"},
      {"app-t10", 2, 5, "1,2,3;3,4,5;1,2,4", false, 17, 5, {4, 9, 13, 15, 16}, "A-Table10"},
      {"app-t11", 2, 6, "1,2,3,5;1,2,4,5;3,4,5,6", false, 34, 6, {8, 18, 26, 30, 32, 33}, "A-Table11"},
      {"ex1", 2, 4, "1,2;2,3", false, 6, 3, {2, 4, 5}, ""},
  };
  return list;
}

}  // namespace ghw
