// JSON serialization for planes, curves, morphisms and triangulations.
// All schemas carry a "schema": 1 field; rationals travel as "p/q" strings.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <json.hpp>

#include "tropfan/classify.hpp"
#include "tropfan/obstruction.hpp"
#include "tropfan/surface.hpp"

namespace tropfan {

using Json = nlohmann::ordered_json;

Rat parse_rat(const Json& j);
Int parse_int(const Json& j);
Vec parse_vec(const Json& j);

std::string rat_to_string(const Rat& r);

// plane: {"schema":1, "lines":[["a","b","c"],...] | "incidence":{"n_lines":n,
//         "points":[[i,...],...]}, "simplex":[[int,...],...],
//         "binding":[int,...]?}
PlaneFan parse_plane(const Json& j);

// curve: {"schema":1, "rays":[{"w":int, "v":[int,...]}, ...]}
FanCurve parse_curve(const Json& j);

// morphism: {"schema":1, "edges":[{"w":int, "v":[int,...]}, ...]}
FanMorphism parse_morphism(const Json& j);

// triangulation: {"schema":1, "d":int, "cells":[[[int x3] x4],...]
//                 | "lifts":[{"p":[x,y,z], "h":"p/q"},...]}
Triangulation3 parse_triangulation(const Json& j);

Json curve_to_json(const FanCurve& c);
Json report_to_json(const ObstructionReport& r);
Json verdict_to_json(const ClassificationVerdict& v);
Json triangulation_to_json(const Triangulation3& t);

}  // namespace tropfan
