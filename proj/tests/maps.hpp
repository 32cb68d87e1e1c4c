#pragma once

#include "module_helpers.hpp"
#include "ramify/differentials.hpp"

// The example morphisms shared by several suites.
namespace th {

inline ramify::MorphismDecl a3_fold() {
  auto Rx = ring({"x1", "x2", "x3"});
  auto Ry = ring({"y1", "y2", "y3"});
  return {"pi", decl(Ry, {}, "Y"), decl(Rx, {}, "X"), {P(Rx, "x2*x3 - x1"), P(Rx, "x2"), P(Rx, "x1*x3")}};
}

inline ramify::MorphismDecl whitney() {
  auto Rx = ring({"s", "t"});
  auto Ry = ring({"a", "b", "c"});
  return {"w", decl(Ry, {"a*c - b^2"}, "Y"), decl(Rx, {}, "X"), {P(Rx, "s^2"), P(Rx, "s*t"), P(Rx, "t^2")}};
}

inline ramify::MorphismDecl h_map() {
  auto Rx = ring({"y1", "y2", "y3"});
  auto Ry = ring({"x1", "x2", "x3", "x4"});
  return {"h", decl(Ry, {"x1*x2 - x3*x4"}, "Yp"), decl(Rx, {}, "X"),
          {P(Rx, "y1"), P(Rx, "y2*y3"), P(Rx, "y2"), P(Rx, "y1*y3")}};
}

inline ramify::MorphismDecl identity1() {
  auto Rx = ring({"x"});
  auto Ry = ring({"y"});
  return {"id", decl(Ry, {}, "Y"), decl(Rx, {}, "X"), {P(Rx, "x")}};
}

inline ramify::MorphismDecl cusp_chart() {
  auto Rb = ring({"xp", "yp"});
  auto Ra = ring({"x", "y"});
  return {"c", decl(Ra, {"x^2 + y^3"}, "A"), decl(Rb, {"xp^2 + yp"}, "B"), {P(Rb, "xp*yp"), P(Rb, "yp")}};
}

inline ramify::MorphismDecl cusp_projection() {
  auto Rx = ring({"x", "y"});
  auto Ry = ring({"u"});
  return {"p", decl(Ry, {}, "Y"), decl(Rx, {"x^2 + y^3"}, "X"), {P(Rx, "y")}};
}

inline ramify::MorphismDecl plane_projection() {
  auto Rx = ring({"x", "y"});
  auto Ry = ring({"u"});
  return {"p", decl(Ry, {}, "Y"), decl(Rx, {}, "X"), {P(Rx, "x")}};
}

}  // namespace th
