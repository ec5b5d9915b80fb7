#include "equistrata/report.hpp"

#include <sstream>

namespace equistrata {

namespace {

Json words_of(const FiniteGroup& g, const std::vector<Element>& xs) {
  Json out = Json::array();
  for (Element x : xs) out.push_back(element_word(g, x));
  return out;
}

Json cycles_of(const FiniteGroup& g, const std::vector<Element>& xs) {
  Json out = Json::array();
  for (Element x : xs) out.push_back(g.format_cycles(x));
  return out;
}

Json header(const char* kind) { return Json{{"kind", kind}, {"version", 1}}; }

Json check_json(const Check& c) {
  return {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
}

Json subgroup_json(const SubgroupInfo& s) {
  return {{"generators", s.generators}, {"order", s.order}, {"conjugates", s.conjugates}};
}

std::string cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + cell(j[i]);
    return out;
  }
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  return j.dump();
}

std::string pretty(const Json& sig) { return Signature::parse(sig.get<std::string>()).pretty(); }

void table(std::ostringstream& md, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  md << "|";
  for (const auto& h : head) md << " " << h << " |";
  md << "\n|";
  for (std::size_t i = 0; i < head.size(); ++i) md << "---|";
  md << "\n";
  for (const auto& r : rows) {
    md << "|";
    for (const auto& c : r) md << " " << c << " |";
    md << "\n";
  }
  md << "\n";
}

void caveats(std::ostringstream& md, const Json& cs) {
  if (cs.empty()) return;
  md << "Caveats:\n\n";
  for (const auto& c : cs) md << "- " << c.get<std::string>() << "\n";
  md << "\n";
}

void stratum_md(std::ostringstream& md, const Json& r) {
  const auto& a = r["ambient"];
  const auto& in = r["induced"];
  md << "### " << in["group"].get<std::string>() << " " << pretty(in["signature"]) << ": "
     << (r["verdict"] == "witness_found" ? "non-normal" : "no witness") << "\n\n";
  table(md, {"", "group", "signature", "genus", "dimension", "class"},
        {{"ambient", cell(a["group"]), pretty(a["signature"]), cell(a["genus"]), cell(a["dimension"]), cell(a["class_id"])},
         {"induced", cell(in["group"]), pretty(in["signature"]), cell(in["genus"]), cell(in["dimension"]),
          cell(in["class_id"])}});
  if (!r["witness_pairs"].empty()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& w : r["witness_pairs"]) {
      std::string iso;
      for (const auto& m : w["isomorphism"])
        iso += (iso.empty() ? "" : ", ") + m["from"].get<std::string>() + " -> " + m["to"].get<std::string>();
      rows.push_back({"<" + cell(w["first"]["generators"]) + ">", "<" + cell(w["second"]["generators"]) + ">", iso,
                      cell(w["shared_class"]), cell(w["determined"]), cell(w["non_conjugate_verified"]),
                      cell(w["replay_verified"])});
    }
    table(md, {"H1", "H2", "H2 -> H1", "shared class", "determined", "non-conjugate", "replayed"}, rows);
  }
  caveats(md, r["caveats"]);
}

}  // namespace

Json vector_json(const GeneratingVector& v, const std::string& group_spec) {
  const FiniteGroup& g = *v.group;
  return {{"group", group_spec},
          {"signature", v.signature.str()},
          {"handles", cycles_of(g, v.handles)},
          {"elliptic", cycles_of(g, v.elliptic)},
          {"words", words_of(g, v.entries())}};
}

Json class_json(const TopologicalClass& c, const std::string& group_spec) {
  return {{"class_id", c.id()}, {"orbit_size", c.orbit_size}, {"representative", vector_json(c.representative, group_spec)}};
}

Json descriptor_json(const StratumDescriptor& d) {
  return {{"group", d.group},
          {"order", d.order},
          {"signature", d.signature.str()},
          {"genus", d.genus},
          {"dimension", d.dimension},
          {"class_id", d.class_id.empty() ? Json(nullptr) : Json(d.class_id)},
          {"representative", d.representative}};
}

Json stratum_json(const StratumReport& r) {
  Json pairs = Json::array();
  for (const auto& w : r.witness_pairs) {
    Json iso = Json::array();
    for (const auto& [from, to] : w.isomorphism) iso.push_back({{"from", from}, {"to", to}});
    pairs.push_back({{"first", subgroup_json(w.first)},
                     {"second", subgroup_json(w.second)},
                     {"isomorphism", iso},
                     {"shared_class", w.shared_class},
                     {"determined", w.determined},
                     {"non_conjugate_verified", w.non_conjugate_verified},
                     {"replay_verified", w.replay_verified}});
  }
  return {{"ambient", descriptor_json(r.ambient)},
          {"subgroup_type", r.subgroup_type},
          {"subgroup_classes", r.subgroup_classes},
          {"induced", descriptor_json(r.induced)},
          {"verdict", r.verdict == Verdict::witness_found ? "witness_found" : "no_witness"},
          {"witness_pairs", pairs},
          {"caveats", r.caveats}};
}

Json enumerate_report(const std::string& group_spec, const Signature& s, const std::vector<GeneratingVector>& vs) {
  Json out = header("enumerate");
  out["group"] = group_spec;
  out["signature"] = s.str();
  out["count"] = vs.size();
  Json list = Json::array();
  for (const auto& v : vs) list.push_back(vector_json(v, group_spec));
  out["vectors"] = list;
  return out;
}

Json classes_report(const std::string& group_spec, const Signature& s, const std::vector<TopologicalClass>& cs) {
  Json out = header("classes");
  out["group"] = group_spec;
  out["signature"] = s.str();
  out["count"] = cs.size();
  Json list = Json::array();
  for (const auto& c : cs) list.push_back(class_json(c, group_spec));
  out["classes"] = list;
  return out;
}

Json restriction_report(const std::string& group_spec, const std::vector<std::string>& subgroup,
                        const GeneratingVector& v, const InducedClasses& ic) {
  const FiniteGroup& g = *v.group;
  Json out = header("restrict");
  out["group"] = group_spec;
  out["subgroup"] = subgroup;
  out["subgroup_order"] = ic.data.subgroup.count();
  out["index"] = ic.data.index;
  out["vector"] = vector_json(v, group_spec);
  out["induced_signature"] = ic.data.induced_signature.str();
  out["induced_genus"] = ic.data.induced_genus;
  Json branches = Json::array();
  for (const auto& b : ic.data.branch_data) {
    Json cycles = Json::array();
    for (const auto& c : b.cycles)
      cycles.push_back({{"length", c.cycle_length}, {"period", c.period}, {"generator", element_word(g, c.generator)}});
    branches.push_back({{"position", b.position}, {"image", element_word(g, b.image)}, {"period", b.period}, {"cycles", cycles}});
  }
  out["branch_data"] = branches;
  Json rotation = Json::array();
  for (Element x : ic.data.rotation_vector()) rotation.push_back(element_word(g, ic.data.subgroup_group->parent_index()[x]));
  out["rotation"] = rotation;
  Json ids = Json::array();
  for (const auto& c : ic.classes) ids.push_back(c.id());
  out["induced_classes"] = ids;
  out["determined"] = ic.determined;
  return out;
}

Json detect_report(const std::string& group_spec, const GeneratingVector& v, const std::vector<StratumReport>& rs) {
  Json out = header("detect");
  out["group"] = group_spec;
  out["vector"] = vector_json(v, group_spec);
  Json list = Json::array();
  for (const auto& r : rs) list.push_back(stratum_json(r));
  out["reports"] = list;
  return out;
}

Json scan_report(const ScanReport& s) {
  Json out = header("scan");
  out["genus"] = s.genus;
  out["flagged"] = s.flagged();
  Json strata = Json::array();
  for (const auto& st : s.strata) {
    Json ambients = Json::array();
    for (const auto& a : st.ambients)
      ambients.push_back({{"case", a.case_label},
                          {"class_index", a.class_index},
                          {"group", a.group},
                          {"id", {a.id.first, a.id.second}},
                          {"witness_pairs", a.witness_pairs}});
    strata.push_back({{"case", st.case_label},
                      {"class_index", st.class_index},
                      {"id", {st.id.first, st.id.second}},
                      {"stratum", descriptor_json(st.stratum)},
                      {"flagged", st.flagged},
                      {"ambients", ambients}});
  }
  out["strata"] = strata;
  out["caveats"] = s.caveats;
  return out;
}

Json family_report(const FamilyReport& f) {
  Json out = header("family");
  out["family"] = f.family;
  Json params = Json::object();
  for (const auto& [k, v] : f.params) params[k] = v;
  out["params"] = params;
  out["pass"] = f.pass;
  Json checks = Json::array();
  for (const auto& c : f.checks) checks.push_back(check_json(c));
  out["checks"] = checks;
  out["report"] = stratum_json(f.report);
  return out;
}

Json catalog_report(const CatalogVerification& c) {
  Json out = header("catalog-verify");
  out["pass"] = c.pass;
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    Json checks = Json::array();
    for (const auto& k : e.checks) checks.push_back(check_json(k));
    entries.push_back({{"entry", e.entry},
                       {"genus", e.genus},
                       {"case", e.case_label},
                       {"signature", e.signature},
                       {"id", {e.id.first, e.id.second}},
                       {"order", e.order},
                       {"vectors", e.vectors},
                       {"classes", e.classes},
                       {"pass", e.pass},
                       {"checks", checks}});
  }
  out["entries"] = entries;
  return out;
}

std::string to_markdown(const Json& r) {
  std::ostringstream md;
  const std::string kind = r.at("kind");
  if (kind == "enumerate") {
    md << "## Generating vectors of " << cell(r["group"]) << " with signature " << pretty(r["signature"]) << "\n\n";
    md << "Count: " << r["count"] << "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : r["vectors"]) rows.push_back({cell(v["words"]), cell(v["handles"]) + " " + cell(v["elliptic"])});
    table(md, {"words", "cycles"}, rows);
  } else if (kind == "classes") {
    md << "## Topological classes of " << cell(r["group"]) << " with signature " << pretty(r["signature"]) << "\n\n";
    md << "Count: " << r["count"] << "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : r["classes"])
      rows.push_back({cell(c["class_id"]), cell(c["representative"]["words"]), cell(c["orbit_size"])});
    table(md, {"class", "representative", "orbit size"}, rows);
  } else if (kind == "restrict") {
    md << "## Restriction of " << cell(r["group"]) << " to <" << cell(r["subgroup"]) << ">\n\n";
    table(md, {"vector", "index", "induced signature", "induced genus", "rotation", "classes", "determined"},
          {{cell(r["vector"]["words"]), cell(r["index"]), pretty(r["induced_signature"]), cell(r["induced_genus"]),
            cell(r["rotation"]), cell(r["induced_classes"]), cell(r["determined"])}});
    std::vector<std::vector<std::string>> rows;
    for (const auto& b : r["branch_data"]) {
      std::string cyc;
      for (const auto& c : b["cycles"])
        cyc += (cyc.empty() ? "" : "; ") + std::to_string(c["length"].get<int>()) + ": " + c["generator"].get<std::string>();
      rows.push_back({cell(b["position"]), cell(b["image"]), cell(b["period"]), cyc});
    }
    table(md, {"entry", "image", "period", "cycle length: generator"}, rows);
  } else if (kind == "detect") {
    md << "## Detector on " << cell(r["group"]) << " acting by " << cell(r["vector"]["words"]) << "\n\n";
    if (r["reports"].empty()) md << "No isomorphic non-conjugate subgroups with matching actions.\n\n";
    for (const auto& s : r["reports"]) stratum_md(md, s);
  } else if (kind == "scan") {
    md << "## Genus " << r["genus"] << ", non-normal strata: " << r["flagged"] << "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& st : r["strata"]) {
      std::string ambients;
      for (const auto& a : st["ambients"])
        ambients += (ambients.empty() ? "" : ", ") + std::string("case ") + std::to_string(a["case"].get<int>()) +
                    " (" + std::to_string(a["id"][0].get<int>()) + "," + std::to_string(a["id"][1].get<int>()) + ")";
      rows.push_back({cell(st["case"]) + "." + cell(st["class_index"]), cell(st["stratum"]["group"]),
                      "(" + cell(st["id"][0]) + "," + cell(st["id"][1]) + ")", pretty(st["stratum"]["signature"]),
                      cell(st["stratum"]["dimension"]), st["flagged"].get<bool>() ? "non-normal" : "-", ambients});
    }
    table(md, {"case", "group", "id", "signature", "dimension", "verdict", "non-normal points from"}, rows);
    caveats(md, r["caveats"]);
  } else if (kind == "family") {
    md << "## Family " << cell(r["family"]) << " " << r["params"].dump() << ": " << (r["pass"].get<bool>() ? "pass" : "FAIL")
       << "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : r["checks"])
      rows.push_back({cell(c["name"]), cell(c["expected"]), cell(c["actual"]), c["pass"].get<bool>() ? "ok" : "FAIL"});
    table(md, {"check", "expected", "actual", ""}, rows);
    stratum_md(md, r["report"]);
  } else if (kind == "catalog-verify") {
    md << "## Catalog verification: " << (r["pass"].get<bool>() ? "pass" : "FAIL") << "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : r["entries"]) {
      std::string failed;
      for (const auto& c : e["checks"])
        if (!c["pass"].get<bool>())
          failed += (failed.empty() ? "" : "; ") + c["name"].get<std::string>() + ": " + c["actual"].get<std::string>();
      rows.push_back({cell(e["genus"]), cell(e["case"]), "(" + cell(e["id"][0]) + "," + cell(e["id"][1]) + ")",
                      pretty(e["signature"]), cell(e["vectors"]), cell(e["classes"]),
                      e["pass"].get<bool>() ? "ok" : "FAIL " + failed});
    }
    table(md, {"genus", "case", "id", "signature", "vectors", "classes", "status"}, rows);
  } else {
    throw Error("unknown report kind " + kind);
  }
  return md.str();
}

}  // namespace equistrata
