#include <doctest.h>

#include "module_helpers.hpp"
#include "ramify/differentials.hpp"
#include "ramify/error.hpp"

using namespace ramify;
using th::P;

namespace {

MorphismDecl a3_fold() {
  auto Rx = th::ring({"x1", "x2", "x3"});
  auto Ry = th::ring({"y1", "y2", "y3"});
  return MorphismDecl("pi", th::decl(Ry, {}, "Y"), th::decl(Rx, {}, "X"),
                      {P(Rx, "x2*x3 - x1"), P(Rx, "x2"), P(Rx, "x1*x3")});
}

MorphismDecl whitney() {
  auto Rx = th::ring({"s", "t"});
  auto Ry = th::ring({"a", "b", "c"});
  return MorphismDecl("w", th::decl(Ry, {"a*c - b^2"}, "Y"), th::decl(Rx, {}, "X"),
                      {P(Rx, "s^2"), P(Rx, "s*t"), P(Rx, "t^2")});
}

MorphismDecl identity1() {
  auto Rx = th::ring({"x"});
  auto Ry = th::ring({"y"});
  return MorphismDecl("id", th::decl(Ry, {}, "Y"), th::decl(Rx, {}, "X"), {P(Rx, "x")});
}

MorphismDecl cusp_chart() {
  auto Rb = th::ring({"xp", "yp"});
  auto Ra = th::ring({"x", "y"});
  return MorphismDecl("c", th::decl(Ra, {"x^2 + y^3"}, "A"), th::decl(Rb, {"xp^2 + yp"}, "B"),
                      {P(Rb, "xp*yp"), P(Rb, "yp")});
}

// Fitting ideal oracle: F_0 of a square matrix is its determinant.
Poly det3(const Matrix& m) {
  auto a = [&](int r, int c) { return m.at(r, c); };
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

TEST_CASE("kaehler presentations are gradient columns") {
  auto R = th::ring({"x1", "x2", "x3"});
  auto free3 = kaehler(th::decl(R));
  CHECK(free3.rank() == 3);
  CHECK(free3.simplified().relations().cols() == 0);

  auto C = th::ring({"a", "b", "c"});
  auto om = kaehler(th::decl(C, {"a*c - b^2"}));
  REQUIRE(om.relations().cols() == 1);
  CHECK(om.relations().column(0) == th::vec(C, {"c", "-2*b", "a"}));

  auto K = th::ring({"x", "y"});
  auto cusp = kaehler(th::decl(K, {"x^2 + y^3"}));
  REQUIRE(cusp.relations().cols() == 1);
  CHECK(cusp.relations().column(0) == th::vec(K, {"2*x", "3*y^2"}));
}

TEST_CASE("relative differentials") {
  auto m = a3_fold();
  auto om = relative_kaehler(m);
  CHECK(om.relations().cols() == 3);
  Ideal f0 = fitting_ideal(om, 0);
  CHECK(f0 == th::ideal(m.target().ring(), {"x1 + x2*x3"}));
  // Oracle: the determinant of the Jacobian.
  CHECK(f0 == Ideal(m.target().ring(), {det3(m.jacobian())}));

  auto w = whitney();
  CHECK(th::same_span(w.jacobian(), th::mat(w.target().ring(), {{"2*s", "t", "0"}, {"0", "s", "2*t"}}), w.target()));
  CHECK(relative_kaehler(identity1()).is_zero());
}

TEST_CASE("ill-defined maps name the generator") {
  auto Rx = th::ring({"s", "t"});
  auto Ry = th::ring({"a", "b", "c"});
  try {
    MorphismDecl("bad", th::decl(Ry, {"a*c - b^2"}, "Y"), th::decl(Rx, {}, "X"),
                 {P(Rx, "s^2"), P(Rx, "s*t"), P(Rx, "t^3")});
    FAIL("expected an error");
  } catch (const Error& e) {
    std::string msg = e.what();
    CHECK(msg.find("bad") != std::string::npos);
    CHECK(msg.find(P(Ry, "a*c - b^2").str()) != std::string::npos);
  }
  CHECK_THROWS_AS(MorphismDecl("short", th::decl(Ry, {}, "Y"), th::decl(Rx, {}, "X"), {P(Rx, "s")}), Error);
}

TEST_CASE("imperfection module") {
  CHECK(imperfection(a3_fold()).is_zero());
  CHECK(imperfection(identity1()).is_zero());
  CHECK(imperfection(whitney()).is_zero());

  auto c = cusp_chart();
  auto gamma = imperfection(c);
  CHECK_FALSE(gamma.is_zero());
  REQUIRE(gamma.embedding());
  const RingDecl& B = c.target();
  auto Rb = B.ring();
  // Inside pi^*(Omega_A) = B^2 / (pulled-back gradient).
  auto pulled = pullback_omega(c);
  Matrix g = th::mat(Rb, {{"2*yp"}, {"-3*xp*yp"}});
  Matrix v = th::mat(Rb, {{"-2"}, {"3*xp"}});
  Matrix gamma_gens = gamma.embedding()->hcat(pulled.relations());
  CHECK(SpanTester(gamma_gens, B).contains_all(g));
  CHECK(SpanTester(gamma_gens, B).contains_all(v));
  CHECK(SpanTester(v.hcat(pulled.relations()), B).contains_all(*gamma.embedding()));
  // The pullback of 2y dx - 3x dy spans a strictly smaller submodule.
  CHECK_FALSE(SpanTester(g.hcat(pulled.relations()), B).contains_all(v));
}

TEST_CASE("tangent modules") {
  auto R = th::ring({"x1", "x2", "x3"});
  auto t = tangent(th::decl(R));
  CHECK(generic_rank(t) == 3);
  CHECK(fitting_ideal(t, 3).is_unit());
  CHECK(fitting_ideal(t, 2).is_zero());

  auto C = th::ring({"a", "b", "c"});
  auto cone = th::decl(C, {"a*c - b^2"});
  auto tc = tangent(cone);
  REQUIRE(tc.embedding());
  // Every generator annihilates the gradient; Euler vector is a member.
  for (const auto& col : tc.embedding()->columns()) {
    Poly pairing = col[0] * P(C, "c") - col[1] * P(C, "2*b") + col[2] * P(C, "a");
    CHECK(cone.is_zero(pairing));
  }
  CHECK(SpanTester(*tc.embedding(), cone).contains(th::vec(C, {"a", "b", "c"})));
  // Completeness: same span as the syzygies of the gradient row.
  Matrix row = th::mat(C, {{"c", "-2*b", "a"}});
  Matrix row_with_i = row.hcat(th::mat(C, {{"a*c - b^2"}}));
  Matrix syz = syzygy(row_with_i, th::decl(C)).row_range(0, 3);
  CHECK(th::same_span(*tc.embedding(), syz, cone));

  auto K = th::ring({"x", "y"});
  auto cusp = th::decl(K, {"x^2 + y^3"});
  auto tk = tangent(cusp);
  REQUIRE(tk.embedding());
  CHECK(th::same_span(*tk.embedding(), th::mat(K, {{"3*x", "3*y^2"}, {"2*y", "-2*x"}}), cusp));
}

TEST_CASE("tangent along and critical module") {
  auto m = a3_fold();
  auto ta = tangent_along(m);
  CHECK(ta.module.simplified().relations().cols() == 0);
  CHECK(ta.dpi.rows() == 3);
  CHECK(ta.dpi.cols() == 3);
  CHECK(fitting_ideal(critical_module(m), 0) == th::ideal(m.target().ring(), {"x1 + x2*x3"}));

  auto w = whitney();
  auto tw = tangent_along(w);
  REQUIRE(tw.module.embedding());
  auto Rx = w.target().ring();
  for (const auto& col : tw.module.embedding()->columns()) {
    Poly pairing = P(Rx, "t^2") * col[0] - P(Rx, "2*s*t") * col[1] + P(Rx, "s^2") * col[2];
    CHECK(pairing.is_zero());
  }
  SpanTester tt(*tw.module.embedding(), w.target());
  CHECK(tt.contains(th::vec(Rx, {"2*s", "t", "0"})));
  CHECK(tt.contains(th::vec(Rx, {"0", "s", "2*t"})));
  CHECK(tw.dpi.column(0) == th::vec(Rx, {"2*s", "t", "0"}));
  CHECK(tw.dpi.column(1) == th::vec(Rx, {"0", "s", "2*t"}));
  CHECK(fitting_ideal(critical_module(w), 0).is_unit());

  auto id = identity1();
  CHECK(tangent_along(id).dpi.at(0, 0) == P(id.target().ring(), "1"));
  CHECK(critical_module(id).is_zero());
}

TEST_CASE("image of the tangent morphism") {
  CHECK(generic_rank(image_tangent(identity1())) == 1);
  CHECK(fitting_ideal(image_tangent(identity1()), 1).is_unit());
  CHECK(generic_rank(image_tangent(a3_fold())) == 3);
  CHECK(generic_rank(image_tangent(whitney())) == 2);
}

TEST_CASE("relative dimension and smoothness") {
  CHECK(relative_dimension(a3_fold()) == 0);
  CHECK(relative_dimension(whitney()) == 0);
  auto Rx = th::ring({"x", "y"});
  auto Ry = th::ring({"u"});
  MorphismDecl proj("p", th::decl(Ry, {}, "Y"), th::decl(Rx, {}, "X"), {P(Rx, "x")});
  CHECK(relative_dimension(proj) == 1);
  CHECK(generically_smooth(proj));
  CHECK(generically_smooth(a3_fold()));
  CHECK(generically_smooth(cusp_chart()));

  // Frobenius-type map in char 3 is not separable.
  auto Fx = th::ring({"x"}, MonomialOrder::grevlex(), Field::prime(3));
  auto Fy = th::ring({"y"}, MonomialOrder::grevlex(), Field::prime(3));
  MorphismDecl frob("f", th::decl(Fy, {}, "Y"), th::decl(Fx, {}, "X"), {P(Fx, "x^3")});
  CHECK(relative_dimension(frob) == 1);
  CHECK_FALSE(generically_smooth(frob));

  CHECK(is_smooth(th::decl(Rx)));
  CHECK_FALSE(is_smooth(th::decl(Rx, {"x^2 + y^3"})));
  CHECK(is_smooth(th::decl(Rx, {"x^2 + y"})));
}

TEST_CASE("rank additivity along the first fundamental sequence") {
  for (auto m : {a3_fold(), whitney(), cusp_chart(), identity1()}) {
    std::size_t om_x = generic_rank(kaehler(m.target()));
    std::size_t v = generic_rank(image_in_omega(m));
    std::size_t rel = generic_rank(relative_kaehler(m));
    std::size_t pulled = generic_rank(pullback_omega(m));
    std::size_t gam = generic_rank(imperfection(m));
    CHECK(om_x == v + rel);
    CHECK(pulled == gam + v);
    // Generically smooth maps have generically vanishing imperfection.
    if (generically_smooth(m)) CHECK(gam == 0);
  }
}
