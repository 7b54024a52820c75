// Classification of 2- and 3-valent fan tropical curves finely approximable
// in a plane, with case-traceable verdicts.
//
// SPDX-License-Identifier: MIT
#pragma once

#include "tropfan/intersection.hpp"

namespace tropfan {

enum class ClassStatus {
  FinelyApproximable,
  NotApproximable,
  ConditionallyApproximable,  // combinatorial mode; geometric condition open
  OutOfClassification,
};

enum class CaseTag {
  None,
  DegreeOneLine,
  ExceptionalConic1,
  ExceptionalConic2,
  ExceptionalConic3,
  NonUniformR3,
  StableIntersection,
  ConicChain,
  PlaneCyclesRule,
};

const char* class_status_name(ClassStatus s);
const char* case_tag_name(CaseTag t);

struct ClassificationVerdict {
  ClassStatus status = ClassStatus::OutOfClassification;
  CaseTag case_tag = CaseTag::None;
  std::string witness;               // approximating curve, when known
  std::vector<std::string> reasons;  // failed conditions otherwise
};

// Degree-1 curves: match rays to skeleton and corner directions; check the
// collinearity of the matched corners in coordinate mode.
// Errors: DegreeNotOne.
ClassificationVerdict classify_line(const FanCurve& line, const PlaneFan& fan);

// Full decision tree for irreducible 2/3-valent curves.
// Errors: NotTrivalent, ReducibleCurve.
ClassificationVerdict classify_trivalent(const FanCurve& curve,
                                         const PlaneFan& fan);

// Fast necessary/sufficient screen from the self-intersection rules alone.
ClassificationVerdict plane_cycles_check(const FanCurve& curve,
                                         const PlaneFan& fan);

// N = 3 uniform normal-form match.  Returns (case, d, alpha, beta) for the
// lexicographically minimal match over ray relabelings, if any:
//   case 1: d u_0 + a u_1, b u_1 + d u_2, (d-a-b) u_1 + d u_3   (C^2 = 0)
//   case 2: d u_0 + a u_1, (d-a) u_1 + (d-b) u_2, b u_2 + d u_3 (C^2 = -ab)
//   case 3: a u_0 + b u_1, (d-a) u_0 + (d-b) u_1, d u_2 + d u_3
//           (C^2 = -d^2 + bd - ab)
struct LemmaListMatch {
  int pattern;
  Int d, alpha, beta;
};
std::optional<LemmaListMatch> match_lemma_list(const FanCurve& curve,
                                               const PlaneFan& fan);

}  // namespace tropfan
