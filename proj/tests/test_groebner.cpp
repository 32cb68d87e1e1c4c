#include "doctest.h"
#include "helpers.hpp"
#include "ramify/budget.hpp"
#include "ramify/error.hpp"

using namespace ramify;
using th::P;

TEST_CASE("principal ideal is its own basis") {
  auto R = th::ring({"x1", "x2", "x3"});
  auto I = th::ideal(R, {"x1 + x2*x3"});
  REQUIRE(I.groebner().size() == 1);
  CHECK(I.groebner()[0] == P(R, "x2*x3 + x1"));
  CHECK(I.reduce(P(R, "x1 + x2*x3")).is_zero());
  CHECK(I.reduce(P(R, "x2")) == P(R, "x2"));
}

TEST_CASE("lex basis of x^2 - y, y^2 - x") {
  auto R = th::ring({"x", "y"}, MonomialOrder::lex());
  auto I = th::ideal(R, {"x^2 - y", "y^2 - x"});
  const auto& G = I.groebner();
  REQUIRE(G.size() == 2);
  CHECK(G[0] == P(R, "y^4 - y"));
  CHECK(G[1] == P(R, "x - y^2"));
  CHECK(I.contains(P(R, "x^2 - y")));
  CHECK(I.contains(P(R, "y^2 - x")));
  // Manual division: x^2 -> y, then x -> y^2.
  CHECK(I.reduce(P(R, "x^2 + x")) == P(R, "y^2 + y"));
}

TEST_CASE("membership") {
  auto R = th::ring({"x", "y"});
  CHECK(th::ideal(R, {"x^2+y^3"}).contains(P(R, "x^2+y^3")));
  CHECK_FALSE(th::ideal(R, {"x", "y"}).contains(P(R, "1")));
  auto C = th::ring({"x'", "y'"});
  CHECK(th::ideal(C, {"x'^2 + y'"}).contains(P(C, "x'^2*y'^2 + y'^3")));
}

TEST_CASE("elimination") {
  auto R = th::ring({"s", "t", "a", "b", "c"});
  auto I = th::ideal(R, {"s^2 - a", "s*t - b", "t^2 - c"});
  Ideal E = eliminate(I, {0, 1});
  CHECK(E == th::ideal(R, {"a*c - b^2"}));
  // Substitution oracle: a=s^2, b=st, c=t^2 kills every generator.
  auto S = th::ring({"s", "t"});
  for (const auto& g : E.gens()) {
    Poly img = g.substitute({P(S, "s"), P(S, "t"), P(S, "s^2"), P(S, "s*t"), P(S, "t^2")});
    CHECK(img.is_zero());
  }
  auto T = th::ring({"t", "x", "y"});
  CHECK(eliminate(th::ideal(T, {"x - t", "y - t^2"}), {0}) == th::ideal(T, {"y - x^2"}));
  auto U = th::ring({"x1", "x2", "x3"});
  CHECK(eliminate(th::ideal(U, {"x1+x2*x3"}), {}) == th::ideal(U, {"x1+x2*x3"}));
}

TEST_CASE("saturation and quotient") {
  auto R = th::ring({"x", "y"});
  CHECK(saturate(th::ideal(R, {"x*y"}), P(R, "x")) == th::ideal(R, {"y"}));
  // (x^2, xy) = x(x,y): saturating by x leaves (x,y)? no: x is invertible, so (x,y)·unit = (1).
  Ideal s = saturate(th::ideal(R, {"x^2", "x*y"}), P(R, "x"));
  CHECK(s.is_unit());
  Ideal I = th::ideal(R, {"x^2", "y"});
  CHECK(saturate(I, P(R, "1")) == I);
  CHECK(saturate(saturate(th::ideal(R, {"x^3*y", "x*y^2"}), P(R, "x")), P(R, "x")) ==
        saturate(th::ideal(R, {"x^3*y", "x*y^2"}), P(R, "x")));
  CHECK(quotient(th::ideal(R, {"x^2", "x*y"}), P(R, "x")) == th::ideal(R, {"x", "y"}));
  CHECK(intersect(th::ideal(R, {"x"}), th::ideal(R, {"y"})) == th::ideal(R, {"x*y"}));
}

TEST_CASE("radical membership") {
  auto R = th::ring({"x", "y"});
  CHECK(radical_membership(P(R, "x"), th::ideal(R, {"x^2"})));
  CHECK_FALSE(radical_membership(P(R, "y"), th::ideal(R, {"x^2"})));
  auto S = th::ring({"s", "t"});
  CHECK(radical_membership(P(S, "s"), th::ideal(S, {"s^2", "s*t", "t^2"})));
}

TEST_CASE("krull dimension and codimension") {
  auto R = th::ring({"x1", "x2", "x3"});
  CHECK(krull_dim(th::ideal(R, {"x1+x2*x3"})) == 2);
  CHECK(krull_dim(th::ideal(R, {"x1", "x2"})) == 1);
  CHECK(krull_dim(th::ideal(R, {"1"})) == -1);
  CHECK(krull_dim(Ideal::zero(R)) == 3);
  auto C = th::ring({"a", "b", "c"});
  CHECK(krull_dim(th::ideal(C, {"a*c-b^2"})) == 2);
  CHECK(codim_in(Ideal::zero(R), th::ideal(R, {"x1+x2*x3"})) == 1);
  auto Y = th::ring({"y1", "y2", "y3"});
  CHECK(codim_in(Ideal::zero(Y), th::ideal(Y, {"y1", "y2"})) == 2);
  CHECK(codim_in(th::ideal(C, {"a*c-b^2"}), th::ideal(C, {"a", "b", "c"})) == 2);
  CHECK_FALSE(codim_in(Ideal::zero(Y), th::ideal(Y, {"1"})).has_value());
}

TEST_CASE("dimension does not depend on the order") {
  for (auto ord : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(2)}) {
    auto R = th::ring({"s", "t", "a", "b", "c"}, ord);
    CHECK(krull_dim(th::ideal(R, {"s^2 - a", "s*t - b", "t^2 - c"})) == 2);
  }
}

TEST_CASE("budget exceeded is explicit") {
  auto R = th::ring({"x", "y", "z"});
  Budget b;
  b.max_degree = 2;
  BudgetScope scope(b);
  CHECK_THROWS_AS(groebner(std::vector<Poly>{P(R, "x^3 - y*z"), P(R, "y^3 - x*z"), P(R, "z^3-x*y")}), BudgetExceeded);
}

TEST_CASE("module basis in position-over-term order") {
  auto R = th::ring({"x", "y"});
  std::vector<Vec> gens = {{P(R, "x"), P(R, "1")}, {P(R, "y"), P(R, "0")}};
  auto G = module_groebner(gens, 2, ModuleOrder::PositionOverTerm);
  // y*(x,1) - x*(y,0) = (0,y): the e1-only part is generated by y.
  int e1_only = 0;
  for (const auto& g : G)
    if (g[0].is_zero()) {
      ++e1_only;
      CHECK(g[1] == P(R, "y"));
    }
  CHECK(e1_only == 1);
  CHECK(module_normal_form({P(R, "x*y"), P(R, "y")}, G, ModuleOrder::PositionOverTerm)[0].is_zero());
}
