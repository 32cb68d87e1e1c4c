#pragma once

#include "helpers.hpp"
#include "ramify/module.hpp"

namespace th {

inline ramify::RingDecl decl(const ramify::RingPtr& R, std::vector<std::string> gens = {}, std::string name = "R") {
  std::vector<ramify::Poly> g;
  for (const auto& s : gens) g.push_back(P(R, s));
  return ramify::RingDecl(std::move(name), R, std::move(g));
}

// Rows given as strings, e.g. {{"2*s","t","0"},{"0","s","2*t"}}.
inline ramify::Matrix mat(const ramify::RingPtr& R, std::vector<std::vector<std::string>> rows, std::size_t ncols = 0) {
  std::size_t nr = rows.size(), nc = nr ? rows[0].size() : ncols;
  ramify::Matrix m(R, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = P(R, rows[r][c]);
  return m;
}

inline ramify::Vec vec(const ramify::RingPtr& R, std::vector<std::string> entries) {
  ramify::Vec v;
  for (const auto& s : entries) v.push_back(P(R, s));
  return v;
}

// Same submodule of B^n modulo I (both inclusions).
inline bool same_span(const ramify::Matrix& a, const ramify::Matrix& b, const ramify::RingDecl& B) {
  return ramify::SpanTester(a, B).contains_all(b) && ramify::SpanTester(b, B).contains_all(a);
}

inline bool complex_ok(const ramify::Resolution& res) {
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i)
    if (!(res.maps[i] * res.maps[i + 1]).reduced(res.ring).is_zero()) return false;
  return true;
}

}  // namespace th
