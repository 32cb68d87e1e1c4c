#include <doctest.h>

#include "module_helpers.hpp"
#include "ramify/properties.hpp"

using namespace ramify;

namespace {

constexpr std::uint64_t kSeed = 20261017;
constexpr std::size_t kCases = 150;

void expect_clean(const PropertyResult& r) {
  CAPTURE(r.name);
  CAPTURE(r.first_failure);
  CHECK(r.cases >= 100);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("koszul depth oracle on known modules") {
  auto R = th::ring({"x", "y"});
  auto B = th::decl(R);
  CHECK(koszul_depth_plane(PresentedModule(B, th::mat(R, {{"x", "y"}}))) == 0);
  CHECK(koszul_depth_plane(PresentedModule(B, Matrix(R, 1, 0))) == 2);
  CHECK(koszul_depth_plane(PresentedModule(B, th::mat(R, {{"x"}}))) == 1);
  CHECK(koszul_depth_plane(PresentedModule(B, th::mat(R, {{"x^2", "x*y"}}))) == 0);
  CHECK(koszul_depth_plane(PresentedModule(B, th::mat(R, {{"x", "0"}, {"0", "y"}}))) == 1);
}

TEST_CASE("dual fitting identity") { expect_clean(prop_dual_fitting(kSeed, kCases)); }
TEST_CASE("fitting chain") { expect_clean(prop_fitting_chain(kSeed + 1, kCases)); }
TEST_CASE("auslander-buchsbaum") { expect_clean(prop_auslander_buchsbaum(kSeed + 2, kCases)); }
TEST_CASE("eagon-northcott bound") { expect_clean(prop_eagon_northcott(kSeed + 3, kCases)); }
TEST_CASE("groebner determinism") { expect_clean(prop_groebner(kSeed + 4, kCases)); }
TEST_CASE("parse/print round trip") { expect_clean(prop_roundtrip(kSeed + 5, kCases)); }

TEST_CASE("suites are reproducible") {
  auto a = prop_auslander_buchsbaum(7, 100);
  auto b = prop_auslander_buchsbaum(7, 100);
  CHECK(a.cases == b.cases);
  CHECK(a.skipped == b.skipped);
}
