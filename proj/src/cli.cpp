// SPDX-License-Identifier: MIT
#include "tropfan/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tropfan/io.hpp"

namespace tropfan {

namespace {

constexpr const char* kUsage = R"(usage: tropfan <command> [flags]

commands:
  intersect          --plane F --a F --b F        intersection number
  self-intersect     --plane F --curve F          self-intersection
  degree             --plane F --curve F [--index I]
  adjunction         --plane F --curve F          adjunction bound report
  hessian            --plane F --morphism F       Hessian bound report
  rh                 --d D --k K --l L [--genus G] Riemann-Hurwitz bound
  classify           --plane F --curve F          approximability verdict
  surface-scan       --triangulation F            pathological cells and verdicts
  surface-subdivide  --triangulation F            regular subdivision cells

flags:
  --json             machine-readable output
  --help             this text
)";

struct Flags {
  std::map<std::string, std::string> values;
  bool json = false;

  const std::string& need(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end())
      fail(ErrorKind::InputError, "missing required flag --" + key);
    return it->second;
  }
  std::optional<std::string> get(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }
};

Flags parse_flags(const std::vector<std::string>& args, std::size_t start) {
  Flags f;
  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json") {
      f.json = true;
      continue;
    }
    if (a.rfind("--", 0) != 0)
      fail(ErrorKind::InputError, "unexpected argument: " + a);
    if (i + 1 >= args.size())
      fail(ErrorKind::InputError, "flag " + a + " needs a value");
    f.values[a.substr(2)] = args[++i];
  }
  return f;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InputError, "cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    fail(ErrorKind::InputError, "JSON parse error in " + path + ": " + e.what());
  }
}

Int flag_int(const Flags& f, const std::string& key) {
  const std::string& s = f.need(key);
  try {
    return Int(s);
  } catch (const std::exception&) {
    fail(ErrorKind::InputError, "flag --" + key + " needs an integer");
  }
}

void emit(std::ostream& out, const Flags& f, const Json& machine,
          const std::string& human) {
  if (f.json)
    out << machine.dump(2) << "\n";
  else
    out << human << "\n";
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  const std::string& cmd = args[0];
  Flags flags = parse_flags(args, 1);

  if (cmd == "intersect") {
    PlaneFan fan = parse_plane(load_json(flags.need("plane")));
    FanCurve a = parse_curve(load_json(flags.need("a")));
    FanCurve b = parse_curve(load_json(flags.need("b")));
    Int v = intersection_number(a, b, fan);
    Json j{{"schema", 1}, {"intersection", v.get_str()}};
    emit(out, flags, j, "C1.C2 = " + v.get_str());
    return 0;
  }
  if (cmd == "self-intersect") {
    PlaneFan fan = parse_plane(load_json(flags.need("plane")));
    FanCurve c = parse_curve(load_json(flags.need("curve")));
    Int v = self_intersection(c, fan);
    Json j{{"schema", 1}, {"self_intersection", v.get_str()}};
    emit(out, flags, j, "C^2 = " + v.get_str());
    return 0;
  }
  if (cmd == "degree") {
    PlaneFan fan = parse_plane(load_json(flags.need("plane")));
    FanCurve c = parse_curve(load_json(flags.need("curve")));
    int idx = 0;
    if (auto s = flags.get("index")) idx = (int)Int(*s).get_si();
    Int v = degree(c, fan, idx);
    Json j{{"schema", 1}, {"degree", v.get_str()}};
    emit(out, flags, j, "deg = " + v.get_str());
    return 0;
  }
  if (cmd == "adjunction") {
    PlaneFan fan = parse_plane(load_json(flags.need("plane")));
    FanCurve c = parse_curve(load_json(flags.need("curve")));
    ObstructionReport r = adjunction_bound(c, fan);
    std::string human =
        "B = " + r.lhs_value.get_str() + ", genus bound " +
        r.genus_bound->get_str() + ", " +
        (r.verdict == Verdict::Obstructed ? "Obstructed" : "NotObstructed");
    emit(out, flags, report_to_json(r), human);
    return 0;
  }
  if (cmd == "hessian") {
    PlaneFan fan = parse_plane(load_json(flags.need("plane")));
    FanMorphism m = parse_morphism(load_json(flags.need("morphism")));
    ObstructionReport r = hessian_bound(m, fan);
    std::string human =
        "H = " + r.lhs_value.get_str() + ", " +
        (r.verdict == Verdict::Obstructed ? "Obstructed" : "NotObstructed");
    emit(out, flags, report_to_json(r), human);
    return 0;
  }
  if (cmd == "rh") {
    Int d = flag_int(flags, "d"), k = flag_int(flags, "k"),
        l = flag_int(flags, "l");
    Int g = 0;
    if (auto s = flags.get("genus")) g = Int(*s);
    ObstructionReport r = rh_bound(d, k, l, g);
    std::string human =
        "genus bound " + r.genus_bound->get_str() + ", " +
        (r.verdict == Verdict::Obstructed ? "Obstructed" : "NotObstructed") +
        " at target genus " + g.get_str();
    emit(out, flags, report_to_json(r), human);
    return 0;
  }
  if (cmd == "classify") {
    PlaneFan fan = parse_plane(load_json(flags.need("plane")));
    FanCurve c = parse_curve(load_json(flags.need("curve")));
    ClassificationVerdict v = classify_trivalent(c, fan);
    std::ostringstream human;
    human << class_status_name(v.status) << " (" << case_tag_name(v.case_tag)
          << ")";
    if (!v.witness.empty()) human << ": " << v.witness;
    for (const auto& r : v.reasons) human << "; " << r;
    emit(out, flags, verdict_to_json(v), human.str());
    return 0;
  }
  if (cmd == "surface-scan") {
    Triangulation3 t = parse_triangulation(load_json(flags.need("triangulation")));
    auto simplices = find_pathological_simplices(t);
    auto pairs = find_pathological_pairs(t);
    auto verdicts = line_verdicts(t);
    Json j{{"schema", 1}, {"d", t.d.get_str()}, {"unimodular", t.unimodular()}};
    j["pathological_simplices"] = Json::array();
    for (const auto& s : simplices)
      j["pathological_simplices"].push_back(
          Json{{"d", s.d.get_str()},
               {"alpha", s.alpha.get_str()},
               {"beta", s.beta.get_str()},
               {"gamma", s.gamma.get_str()}});
    j["pathological_pairs"] = Json::array();
    for (const auto& p : pairs)
      j["pathological_pairs"].push_back(
          Json{{"type", p.kind == PairKind::TypeI ? "I" : "II"},
               {"cells", Json::array({p.cell_a, p.cell_b})}});
    j["line_verdicts"] = Json::array();
    int approximable = 0;
    for (const auto& v : verdicts) {
      j["line_verdicts"].push_back(
          Json{{"kind", v.is_family ? "family" : "isolated"},
               {"l", rat_to_string(v.l)},
               {"status", v.approximable ? "Approximable" : "NotApproximable"},
               {"anchor", v.anchor}});
      if (v.approximable) ++approximable;
    }
    std::ostringstream human;
    human << simplices.size() << " pathological simplices, " << pairs.size()
          << " pathological pairs, " << verdicts.size() << " line verdicts ("
          << approximable << " approximable)";
    if (!t.unimodular()) {
      j["verdicts_applicable"] = false;
      human << " [non-unimodular triangulation: verdicts not applicable]";
    }
    emit(out, flags, j, human.str());
    return 0;
  }
  if (cmd == "surface-subdivide") {
    Triangulation3 t = parse_triangulation(load_json(flags.need("triangulation")));
    std::ostringstream human;
    human << t.cells.size() << " cells, "
          << (t.unimodular() ? "unimodular" : "not unimodular");
    emit(out, flags, triangulation_to_json(t), human.str());
    return 0;
  }
  fail(ErrorKind::InputError, "unknown command: " + cmd);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  if (args.empty() || args[0] == "--help" || args[0] == "help") {
    out << kUsage;
    return args.empty() ? 2 : 0;
  }
  try {
    return dispatch(args, out);
  } catch (const TropError& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tropfan
