#pragma once

#include "flowcalc/graph.hpp"
#include "flowcalc/shift.hpp"

namespace fixture {

inline flowcalc::EdgeShift full_shift(std::initializer_list<const char*> labels = {"a", "b"}) {
  flowcalc::GraphBuilder b;
  b.vertex("s");
  for (const char* l : labels) b.edge(l, "s", "s");
  return flowcalc::EdgeShift(b.build());
}

// a: u->v, a': v->u, b: u->u
inline flowcalc::EdgeShift golden_mean() {
  flowcalc::GraphBuilder b;
  b.vertex("u").vertex("v").edge("a", "u", "v").edge("a'", "v", "u").edge("b", "u", "u");
  return flowcalc::EdgeShift(b.build());
}

// a1: P->Q, a2: Q->P, b: P->P
inline flowcalc::EdgeShift paired() {
  flowcalc::GraphBuilder b;
  b.vertex("P").vertex("Q").edge("a1", "P", "Q").edge("a2", "Q", "P").edge("b", "P", "P");
  return flowcalc::EdgeShift(b.build());
}

inline flowcalc::Word word(const flowcalc::EdgeShift& x, const char* text) {
  return flowcalc::parse_word(x.graph(), text);
}

}  // namespace fixture
