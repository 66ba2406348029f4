#include "nowhere/report_json.hpp"

#include <array>
#include <string>

namespace nowhere {

using nlohmann::ordered_json;

namespace {

constexpr std::array kKinds{WitnessKind::oscillation,   WitnessKind::non_extremum,
                            WitnessKind::non_monotone,  WitnessKind::local_min,
                            WitnessKind::quotient_bound, WitnessKind::structure,
                            WitnessKind::integral_crosscheck, WitnessKind::darboux};
constexpr std::array kRelations{Relation::lt, Relation::le, Relation::eq, Relation::ge, Relation::gt};
constexpr std::array kQuantities{Quantity::partial_sum, Quantity::iterate, Quantity::antiderivative};

template <typename Enum, std::size_t N>
Enum enum_from(const std::array<Enum, N>& all, const std::string& name, const char* what) {
  for (Enum e : all) {
    if (name == to_string(e)) return e;
  }
  throw ParseError(std::string("unknown ") + what + ": " + name);
}

Rat rat_at(const ordered_json& j, const char* key) { return Rat::parse(j.at(key).get<std::string>()); }

}  // namespace

ordered_json to_json(const WitnessReport& report) {
  ordered_json out;
  out["kind"] = to_string(report.kind);
  out["inputs"] = ordered_json::object();
  for (const auto& [key, value] : report.inputs) out["inputs"][key] = value;
  out["verdict"] = to_string(report.verdict);
  if (!report.diagnostic.empty()) out["diagnostic"] = report.diagnostic;
  out["points"] = ordered_json::array();
  for (const auto& p : report.points) {
    out["points"].push_back({{"label", p.label},
                             {"x", p.x.str()},
                             {"quantity", to_string(p.quantity)},
                             {"index", p.index},
                             {"value", p.value.str()}});
  }
  out["certificate"] = ordered_json::array();
  for (const auto& c : report.certificate) {
    out["certificate"].push_back({{"label", c.label},
                                  {"lhs", c.lhs.str()},
                                  {"rel", to_string(c.rel)},
                                  {"rhs", c.rhs.str()},
                                  {"holds", c.holds()}});
  }
  return out;
}

ordered_json to_json(const SuiteReport& report) {
  ordered_json out;
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  out["parameters"] = ordered_json::object();
  for (const auto& [key, value] : report.parameters) out["parameters"][key] = value;
  out["cases"] = ordered_json::array();
  for (const auto& c : report.cases) out["cases"].push_back(to_json(c));
  out["summary"] = {{"pass", report.passed()}, {"fail", report.failed()}};
  return out;
}

WitnessReport witness_from_json(const ordered_json& j) {
  try {
    WitnessReport r;
    r.kind = enum_from(kKinds, j.at("kind").get<std::string>(), "kind");
    for (const auto& [key, value] : j.at("inputs").items()) r.inputs[key] = value.get<std::string>();
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail") throw ParseError("unknown verdict: " + verdict);
    r.verdict = verdict == "pass" ? Verdict::pass : Verdict::fail;
    if (j.contains("diagnostic")) r.diagnostic = j.at("diagnostic").get<std::string>();
    for (const auto& p : j.at("points")) {
      r.points.push_back(WitnessPoint{p.at("label").get<std::string>(), rat_at(p, "x"),
                                      enum_from(kQuantities, p.at("quantity").get<std::string>(), "quantity"),
                                      p.at("index").get<int>(), rat_at(p, "value")});
    }
    for (const auto& c : j.at("certificate")) {
      r.certificate.push_back(Inequality{c.at("label").get<std::string>(), rat_at(c, "lhs"),
                                         enum_from(kRelations, c.at("rel").get<std::string>(), "relation"),
                                         rat_at(c, "rhs")});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace nowhere
