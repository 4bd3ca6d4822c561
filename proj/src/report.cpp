#include "twistordef/report.hpp"

#include <regex>
#include <sstream>

namespace twistordef {

using nlohmann::json;

const char* const kSubgroupCsvHeader = "n,p,q,k_label,fixed_dim,excess,moduli_dim,semifree,lebrun";

json weight_rep_json(const WeightRep& rep) {
  json out = json::array();
  for (const auto& [w, mult] : rep.entries()) out.push_back(json::array({w.to_string(), mult}));
  return out;
}

json subgroup_json(const SubgroupReport& r) {
  return json{
      {"p", r.direction.p()},
      {"q", r.direction.q()},
      {"k_label", r.k_label ? json(*r.k_label) : json(nullptr)},
      {"fixed_dim", r.fixed_dim},
      {"excess", r.is_excess},
      {"moduli_dim", r.moduli_dim ? json(*r.moduli_dim) : json(nullptr)},
      {"semifree", r.classification.semifree},
      {"lebrun", r.classification.lebrun_compatible},
  };
}

json report_json(int n, const AssembledRep& rep, const std::vector<SubgroupReport>& subgroups) {
  json doc;
  doc["n"] = n;
  doc["rep"] = {{"rep1", weight_rep_json(rep.rep1)},
                {"rep2", weight_rep_json(rep.rep2)},
                {"rep3", weight_rep_json(rep.rep3)}};
  doc["dims"] = {{"rep1", rep.rep1.dimension()},
                 {"rep2", rep.rep2.dimension()},
                 {"rep3", rep.rep3.dimension()},
                 {"total", rep.dimension()}};
  doc["subgroups"] = json::array();
  for (const auto& r : subgroups) doc["subgroups"].push_back(subgroup_json(r));
  return doc;
}

namespace {

class SchemaChecker {
 public:
  void require(const json& obj, const std::string& path, const std::string& key,
               bool (json::*is_type)() const noexcept, const char* type_name, bool nullable = false) {
    if (!obj.is_object() || !obj.contains(key)) {
      errors_.push_back(path + "." + key + ": missing");
      return;
    }
    const json& v = obj.at(key);
    if (nullable && v.is_null()) return;
    if (!(v.*is_type)()) errors_.push_back(path + "." + key + ": expected " + type_name);
  }

  void weight_list(const json& v, const std::string& path) {
    if (!v.is_array()) {
      errors_.push_back(path + ": expected array");
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      const json& e = v[i];
      const std::string at = path + "[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer()) {
        errors_.push_back(at + ": expected [\"(m,n)\", multiplicity]");
        continue;
      }
      static const std::regex weight_pattern(R"(\((-?\d+),(-?\d+)\))");
      const std::string s = e[0].get<std::string>();
      if (!std::regex_match(s, weight_pattern)) errors_.push_back(at + ": malformed weight '" + s + "'");
      if (e[1].get<long>() < 1) errors_.push_back(at + ": multiplicity must be positive");
    }
  }

  std::vector<std::string> take() { return std::move(errors_); }

 private:
  std::vector<std::string> errors_;
};

}  // namespace

std::vector<std::string> validate_report_schema(const json& doc) {
  SchemaChecker c;
  if (!doc.is_object()) return {"$: expected object"};
  c.require(doc, "$", "n", &json::is_number_integer, "integer");
  c.require(doc, "$", "rep", &json::is_object, "object");
  c.require(doc, "$", "dims", &json::is_object, "object");
  c.require(doc, "$", "subgroups", &json::is_array, "array");

  for (const char* key : {"rep1", "rep2", "rep3"}) {
    if (doc.contains("rep") && doc["rep"].is_object()) {
      c.require(doc["rep"], "$.rep", key, &json::is_array, "array");
      if (doc["rep"].contains(key)) c.weight_list(doc["rep"][key], std::string("$.rep.") + key);
    }
  }
  if (doc.contains("dims") && doc["dims"].is_object())
    for (const char* key : {"rep1", "rep2", "rep3", "total"})
      c.require(doc["dims"], "$.dims", key, &json::is_number_integer, "integer");

  if (doc.contains("subgroups") && doc["subgroups"].is_array()) {
    const json& subs = doc["subgroups"];
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const std::string path = "$.subgroups[" + std::to_string(i) + "]";
      if (!subs[i].is_object()) {
        c.require(subs[i], path, "p", &json::is_number_integer, "integer");
        continue;
      }
      c.require(subs[i], path, "p", &json::is_number_integer, "integer");
      c.require(subs[i], path, "q", &json::is_number_integer, "integer");
      c.require(subs[i], path, "k_label", &json::is_string, "string or null", true);
      c.require(subs[i], path, "fixed_dim", &json::is_number_integer, "integer");
      c.require(subs[i], path, "excess", &json::is_boolean, "boolean");
      c.require(subs[i], path, "moduli_dim", &json::is_number_integer, "integer or null", true);
      c.require(subs[i], path, "semifree", &json::is_boolean, "boolean");
      c.require(subs[i], path, "lebrun", &json::is_boolean, "boolean");
    }
  }
  return c.take();
}

json cycle_json(const CycleModel& cycle, std::optional<SubgroupDirection> k) {
  json curves = json::array();
  for (const auto& curve : cycle.curves()) {
    const SubgroupDirection stab = pointwise_stabilizer(curve);
    json entry{
        {"label", curve.label.to_string()},
        {"coordinate_name", curve.coordinate_name},
        {"tangent_character", curve.tangent_character.to_string()},
        {"stabilizer", stab.to_string()},
    };
    if (k) entry["isotropy_weight"] = isotropy_weight(curve, *k);
    curves.push_back(std::move(entry));
  }
  json doc{{"n", cycle.n()}, {"curves", std::move(curves)}};
  if (k) {
    const Classification cls = classify_subgroup(cycle.n(), *k);
    const auto label = k_label(cycle.n(), *k);
    doc["subgroup"] = {
        {"p", k->p()},
        {"q", k->q()},
        {"k_label", label ? json(*label) : json(nullptr)},
        {"max_abs_isotropy", cls.max_abs_isotropy},
        {"witness", cls.witness.to_string()},
        {"semifree", cls.semifree},
        {"lebrun", cls.lebrun_compatible},
    };
  }
  return doc;
}

json audit_json(const AuditReport& audit) {
  json checks = json::array();
  for (const auto& c : audit.checks)
    checks.push_back({{"name", c.name},
                      {"statement", c.statement},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"passed", c.passed}});
  return {{"n", audit.n}, {"all_passed", audit.all_passed()}, {"checks", std::move(checks)}};
}

std::string subgroups_csv(int n, const std::vector<SubgroupReport>& subgroups) {
  std::ostringstream os;
  os << kSubgroupCsvHeader << '\n';
  for (const auto& r : subgroups) {
    os << n << ',' << r.direction.p() << ',' << r.direction.q() << ',' << r.k_label.value_or("") << ','
       << r.fixed_dim << ',' << (r.is_excess ? "true" : "false") << ',';
    if (r.moduli_dim) os << *r.moduli_dim;
    os << ',' << (r.classification.semifree ? "true" : "false") << ','
       << (r.classification.lebrun_compatible ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace twistordef
