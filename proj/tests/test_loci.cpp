#include <doctest.h>

#include "module_helpers.hpp"
#include "ramify/factor.hpp"
#include "ramify/loci.hpp"

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

MorphismDecl h_map() {
  auto Rx = th::ring({"y1", "y2", "y3"});
  auto Ry = th::ring({"x1", "x2", "x3", "x4"});
  return MorphismDecl("h", th::decl(Ry, {"x1*x2 - x3*x4"}, "Yp"), th::decl(Rx, {}, "X"),
                      {P(Rx, "y1"), P(Rx, "y2*y3"), P(Rx, "y2"), P(Rx, "y1*y3")});
}

MorphismDecl identity1() {
  auto Rx = th::ring({"x"});
  auto Ry = th::ring({"y"});
  return MorphismDecl("id", th::decl(Ry, {}, "Y"), th::decl(Rx, {}, "X"), {P(Rx, "x")});
}

}  // namespace

TEST_CASE("factorization") {
  auto R = th::ring({"x", "y"});
  auto f = factor(P(R, "x^3*y - x*y^3"));
  CHECK(f.certified);
  CHECK(f.factors.size() == 4);
  auto g = factor(P(R, "x^4 - 1"));
  CHECK(g.certified);
  CHECK(g.factors.size() == 3);
  CHECK(certified_irreducible(P(R, "x^2 + y^3")));
  CHECK(certified_irreducible(P(R, "x*y - 1")));
  CHECK_FALSE(certified_irreducible(P(R, "x^2 - y^2")));
  auto sq = factor(P(R, "(x + y)^2*(x - 2)"));
  REQUIRE(sq.factors.size() == 2);
  int mult = 0;
  for (const auto& [h, k] : sq.factors) mult += k;
  CHECK(mult == 3);
  // Product reassembles.
  Poly prod = Poly::constant(R, sq.unit);
  for (const auto& [h, k] : sq.factors) prod = prod * h.pow(k);
  CHECK(prod == P(R, "(x + y)^2*(x - 2)"));
}

TEST_CASE("codim reports") {
  auto R = th::ring({"x1", "x2", "x3"});
  auto r1 = codim_report(th::decl(R), th::ideal(R, {"x1 + x2*x3"}));
  CHECK(r1.codim_lower == 1);
  REQUIRE(r1.codim_upper);
  CHECK(*r1.codim_upper == 1);
  CHECK(r1.certified);

  auto Y = th::ring({"y1", "y2", "y3"});
  auto r2 = codim_report(th::decl(Y), th::ideal(Y, {"y1", "y2"}));
  CHECK(r2.codim_lower == 2);
  CHECK(r2.codim_upper == 2);

  auto S = th::ring({"s", "t"});
  auto r3 = codim_report(th::decl(S), th::ideal(S, {"s^2", "s*t", "t^2"}));
  CHECK(r3.codim_lower == 2);
  CHECK(r3.codim_upper == 2);
  REQUIRE(r3.radical);
  CHECK(*r3.radical == th::ideal(S, {"s", "t"}));

  // Mixed dimension: a line and a point.
  auto r4 = codim_report(th::decl(Y), th::ideal(Y, {"y1*y2", "y1*y3"}));
  CHECK(r4.codim_lower == 1);
  CHECK(r4.codim_upper == 2);
  CHECK(r4.components.size() == 2);

  auto r5 = codim_report(th::decl(Y), th::ideal(Y, {"1"}));
  CHECK(r5.empty);
}

TEST_CASE("branch schemes") {
  auto m = a3_fold();
  auto b = branch_scheme(m, 0);
  CHECK(b.ideal == th::ideal(m.target().ring(), {"x1 + x2*x3"}));
  CHECK(b.codim_upper == 1);

  auto w = whitney();
  auto bw = branch_scheme(w, 0);
  CHECK(bw.ideal == th::ideal(w.target().ring(), {"s^2", "s*t", "t^2"}));
  REQUIRE(bw.radical);
  CHECK(*bw.radical == th::ideal(w.target().ring(), {"s", "t"}));
  CHECK(bw.codim_upper == 2);

  auto h = h_map();
  auto bh = branch_scheme(h, 0);
  REQUIRE(bh.radical);
  CHECK(*bh.radical == th::ideal(h.target().ring(), {"y1", "y2"}));
  CHECK(bh.codim_upper == 2);
  CHECK(bh.codim_lower == 2);

  // Filtration: F_{d+i} inside F_{d+i+1}.
  for (auto mm : {a3_fold(), whitney(), h_map()})
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(branch_scheme(mm, i + 1).ideal.contains(branch_scheme(mm, i).ideal));
}

TEST_CASE("critical schemes") {
  auto m = a3_fold();
  auto c = critical_scheme(m, 0);
  CHECK(c.ideal == th::ideal(m.target().ring(), {"x1 + x2*x3"}));
  CHECK(critical_scheme(whitney(), 0).empty);
  CHECK(critical_scheme(h_map(), 0).empty);
  CHECK(critical_scheme(identity1(), 0).empty);
}

TEST_CASE("smoothness loci") {
  auto R = th::ring({"x1", "x2", "x3"});
  CHECK(smoothness_locus(th::decl(R)).empty);
  auto C = th::ring({"a", "b", "c"});
  auto sc = smoothness_locus(th::decl(C, {"a*c - b^2"}));
  REQUIRE(sc.radical);
  CHECK(*sc.radical == th::ideal(C, {"a", "b", "c"}));
  auto K = th::ring({"x", "y"});
  auto sk = smoothness_locus(th::decl(K, {"x^2 + y^3"}));
  REQUIRE(sk.radical);
  CHECK(*sk.radical == th::ideal(K, {"x", "y"}));
}

TEST_CASE("discriminants") {
  CHECK(discriminant(identity1()).is_unit());

  auto w = whitney();
  auto dw = discriminant(w);
  CHECK(radical_membership(P(w.source().ring(), "a"), dw));
  CHECK(radical_membership(P(w.source().ring(), "b"), dw));
  CHECK(radical_membership(P(w.source().ring(), "c"), dw));

  auto m = a3_fold();
  auto d = discriminant(m);
  auto Ry = m.source().ring();
  // Pinned by elimination; substitution oracle: the generator vanishes on pi(B).
  CHECK(d == th::ideal(Ry, {"y1^2 + 4*y2*y3"}));
  REQUIRE(d.groebner().size() == 1);
  Poly g = d.groebner()[0];
  auto Rx = m.target().ring();
  // Parametrize B: x1 = -x2*x3.
  std::vector<Poly> img{P(Rx, "2*x2*x3"), P(Rx, "x2"), P(Rx, "-x2*x3^2")};
  CHECK(g.substitute(img).is_zero());
  CHECK(g.total_degree() > 0);
  // Pulls back into the radical of the branch ideal.
  Poly pulled = g.substitute(m.images());
  CHECK(radical_membership(pulled, branch_scheme(m, 0).ideal));
}

TEST_CASE("heights at the origin") {
  auto Y = th::ring({"y1", "y2", "y3"});
  auto h1 = height_at_origin(th::decl(Y), th::ideal(Y, {"y1*y2", "y1*y3"}));
  CHECK(h1.exact());
  CHECK(h1.lower == 1);
  auto h2 = height_at_origin(th::decl(Y), th::ideal(Y, {"y1 - 1"}));
  CHECK_FALSE(h2.through_origin);
  // Component through the origin has larger codim than one missing it.
  auto h3 = height_at_origin(th::decl(Y), th::ideal(Y, {"(y1 - 1)*y2", "(y1 - 1)*y3"}));
  CHECK(h3.exact());
  CHECK(h3.lower == 2);
}
