// SPDX-License-Identifier: MIT
#include "tropfan/io.hpp"

namespace tropfan {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  fail(ErrorKind::InputError, msg);
}

void check_schema(const Json& j) {
  if (!j.is_object()) bad("expected a JSON object");
  if (!j.contains("schema") || j["schema"] != 1)
    bad("missing or unsupported \"schema\" (expected 1)");
}

}  // namespace

Rat parse_rat(const Json& j) {
  try {
    if (j.is_number_integer()) return Rat((long)j.get<std::int64_t>());
    if (j.is_string()) {
      Rat r(j.get<std::string>());
      if (r.get_den() == 0) bad("zero denominator");
      r.canonicalize();
      return r;
    }
  } catch (const std::exception&) {
  }
  bad("expected an integer or a \"p/q\" string");
}

Int parse_int(const Json& j) {
  try {
    if (j.is_number_integer()) return Int((long)j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
  } catch (const std::exception&) {
  }
  bad("expected an integer");
}

Vec parse_vec(const Json& j) {
  if (!j.is_array() || j.empty()) bad("expected a nonempty integer array");
  Vec v;
  for (const auto& x : j) v.push_back(parse_int(x));
  return v;
}

std::string rat_to_string(const Rat& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

PlaneFan parse_plane(const Json& j) {
  check_schema(j);
  LineArrangement arr = [&] {
    if (j.contains("lines")) {
      std::vector<ProjLine> lines;
      for (const auto& lj : j["lines"]) {
        if (!lj.is_array() || lj.size() != 3)
          bad("each line needs 3 coefficients");
        QVec abc;
        for (const auto& x : lj) abc.push_back(parse_rat(x));
        lines.push_back(ProjLine::from_rationals(abc));
      }
      return LineArrangement::from_lines(lines);
    }
    if (j.contains("incidence")) {
      const Json& inc = j["incidence"];
      if (!inc.is_object() || !inc.contains("n_lines"))
        bad("incidence needs \"n_lines\"");
      int n = (int)parse_int(inc["n_lines"]).get_si();
      std::vector<std::vector<int>> sets;
      if (inc.contains("points")) {
        for (const auto& pj : inc["points"]) {
          std::vector<int> s;
          for (const auto& x : pj) s.push_back((int)parse_int(x).get_si());
          sets.push_back(s);
        }
      }
      return LineArrangement::from_incidence(n, sets);
    }
    bad("plane needs either \"lines\" or \"incidence\"");
  }();
  if (!j.contains("simplex")) bad("plane needs a \"simplex\"");
  LatticeSimplexN s;
  for (const auto& vj : j["simplex"]) s.vertices.push_back(parse_vec(vj));
  std::vector<int> binding;
  if (j.contains("binding"))
    for (const auto& x : j["binding"])
      binding.push_back((int)parse_int(x).get_si());
  DegreeOneFrame frame = DegreeOneFrame::from_simplex(std::move(s), binding);
  return PlaneFan::build(std::move(arr), std::move(frame));
}

namespace {

std::vector<Ray> parse_rays(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) bad(std::string("missing \"") + key + "\" array");
  std::vector<Ray> rays;
  for (const auto& rj : j[key]) {
    if (!rj.is_object() || !rj.contains("w") || !rj.contains("v"))
      bad("each entry needs \"w\" and \"v\"");
    rays.push_back(Ray{parse_int(rj["w"]), parse_vec(rj["v"])});
  }
  return rays;
}

}  // namespace

FanCurve parse_curve(const Json& j) {
  check_schema(j);
  return make_fan_curve(parse_rays(j, "rays"));
}

FanMorphism parse_morphism(const Json& j) {
  check_schema(j);
  FanMorphism m;
  m.edges = parse_rays(j, "edges");
  for (const Ray& e : m.edges)
    if (e.weight <= 0) bad("edge weights must be positive");
  return m;
}

Triangulation3 parse_triangulation(const Json& j) {
  check_schema(j);
  if (!j.contains("d")) bad("triangulation needs \"d\"");
  Int d = parse_int(j["d"]);
  if (j.contains("cells")) {
    std::vector<LatticeSimplexN> cells;
    for (const auto& cj : j["cells"]) {
      LatticeSimplexN c;
      for (const auto& vj : cj) c.vertices.push_back(parse_vec(vj));
      cells.push_back(std::move(c));
    }
    return make_triangulation(d, std::move(cells));
  }
  if (j.contains("lifts")) {
    std::vector<std::pair<Vec, Rat>> lifts;
    for (const auto& lj : j["lifts"]) {
      if (!lj.is_object() || !lj.contains("p") || !lj.contains("h"))
        bad("each lift needs \"p\" and \"h\"");
      lifts.push_back({parse_vec(lj["p"]), parse_rat(lj["h"])});
    }
    return regular_subdivision(d, lifts);
  }
  bad("triangulation needs \"cells\" or \"lifts\"");
}

Json curve_to_json(const FanCurve& c) {
  Json j;
  j["schema"] = 1;
  j["rays"] = Json::array();
  for (const Ray& r : c.rays) {
    Json rj;
    rj["w"] = r.weight.get_str();
    rj["v"] = Json::array();
    for (const Int& x : r.direction) rj["v"].push_back(x.get_str());
    j["rays"].push_back(rj);
  }
  return j;
}

Json report_to_json(const ObstructionReport& r) {
  Json j;
  j["schema"] = 1;
  switch (r.kind) {
    case ObstructionKind::Adjunction: j["kind"] = "adjunction"; break;
    case ObstructionKind::Hessian: j["kind"] = "hessian"; break;
    case ObstructionKind::RiemannHurwitz: j["kind"] = "riemann-hurwitz"; break;
  }
  j["value"] = r.lhs_value.get_str();
  if (r.genus_bound) j["genus_bound"] = r.genus_bound->get_str();
  j["verdict"] =
      r.verdict == Verdict::Obstructed ? "Obstructed" : "NotObstructed";
  if (r.kind == ObstructionKind::Adjunction) j["odd_parity"] = r.odd_parity;
  j["degree"] = r.degree.get_str();
  return j;
}

Json verdict_to_json(const ClassificationVerdict& v) {
  Json j;
  j["schema"] = 1;
  j["status"] = class_status_name(v.status);
  j["case"] = case_tag_name(v.case_tag);
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (!v.reasons.empty()) j["reasons"] = v.reasons;
  return j;
}

Json triangulation_to_json(const Triangulation3& t) {
  Json j;
  j["schema"] = 1;
  j["d"] = t.d.get_str();
  j["unimodular"] = t.unimodular();
  j["cells"] = Json::array();
  for (const auto& c : t.cells) {
    Json cj = Json::array();
    for (const Vec& v : c.vertices) {
      Json vj = Json::array();
      for (const Int& x : v) vj.push_back(x.get_str());
      cj.push_back(vj);
    }
    j["cells"].push_back(cj);
  }
  return j;
}

}  // namespace tropfan
