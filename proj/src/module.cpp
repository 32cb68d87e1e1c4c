#include "ramify/module.hpp"

#include <algorithm>
#include <functional>

#include "ramify/budget.hpp"
#include "ramify/error.hpp"

namespace ramify {

PresentedModule::PresentedModule(RingDecl ring, Matrix relations, std::optional<Matrix> embedding)
    : ring_(std::move(ring)), relations_(std::move(relations)), embedding_(std::move(embedding)) {
  if (embedding_ && embedding_->cols() != relations_.rows()) throw Error("embedding does not match generator count");
}

PresentedModule PresentedModule::free(const RingDecl& ring, std::size_t n) {
  return PresentedModule(ring, Matrix(ring.ring(), n, 0));
}

namespace {

// Row-major scratch matrix for elimination passes.
struct Grid {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<Poly>> a;

  static Grid from(const Matrix& m) {
    Grid g{m.rows(), m.cols(), {}};
    g.a.assign(m.rows(), {});
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) g.a[r].push_back(m.at(r, c));
    return g;
  }
  Matrix to(const RingPtr& R) const {
    Matrix m(R, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = a[r][c];
    return m;
  }
  void erase_row(std::size_t r) {
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(r));
    --rows;
  }
  void erase_col(std::size_t c) {
    for (auto& row : a) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
    --cols;
  }
};

Matrix erase_column(const Matrix& m, std::size_t c) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.cols(); ++i)
    if (i != c) idx.push_back(i);
  return m.select_columns(idx);
}

Matrix dedupe_columns(const Matrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    if (vec_is_zero(m.column(i))) continue;
    bool dup = false;
    for (auto j : keep)
      if (m.column(j) == m.column(i)) dup = true;
    if (!dup) keep.push_back(i);
  }
  return m.select_columns(keep);
}

}  // namespace

PresentedModule PresentedModule::simplified() const {
  const RingDecl& B = ring_;
  const Field& F = B.ring()->field();
  Grid g = Grid::from(relations_.reduced(B));
  std::optional<Matrix> emb = embedding_;
  for (;;) {
    std::size_t pr = 0, pc = 0;
    bool found = false;
    for (std::size_t c = 0; c < g.cols && !found; ++c)
      for (std::size_t r = 0; r < g.rows && !found; ++r)
        if (g.a[r][c].is_constant() && !g.a[r][c].is_zero()) {
          pr = r;
          pc = c;
          found = true;
        }
    if (!found) break;
    Coeff u = g.a[pr][pc].constant_term();
    for (std::size_t l = 0; l < g.cols; ++l) {
      if (l == pc || g.a[pr][l].is_zero()) continue;
      Poly factor = g.a[pr][l].scaled(F.inv(u));
      for (std::size_t r = 0; r < g.rows; ++r)
        if (!g.a[r][pc].is_zero()) g.a[r][l] = B.reduce(g.a[r][l] - factor * g.a[r][pc]);
    }
    g.erase_row(pr);
    g.erase_col(pc);
    if (emb) emb = erase_column(*emb, pr);
  }
  return PresentedModule(B, dedupe_columns(g.to(B.ring())), std::move(emb));
}

PresentedModule PresentedModule::minimized_relations() const {
  PresentedModule s = simplified();
  return PresentedModule(s.ring_, prune_columns(s.relations_, Matrix(ring_.ring(), rank(), 0), ring_), s.embedding_);
}

bool PresentedModule::is_zero() const { return simplified().rank() == 0; }

Matrix prune_columns(const Matrix& gens, const Matrix& modulo, const RingDecl& B) {
  Matrix cur = dedupe_columns(gens.reduced(B));
  for (std::size_t j = cur.cols(); j-- > 0;) {
    budget_check_time();
    Matrix others = erase_column(cur, j).hcat(modulo);
    if (SpanTester(others, B).contains(cur.column(j))) cur = erase_column(cur, j);
  }
  return cur;
}

Matrix syzygy(const Matrix& a, const RingDecl& B) {
  const RingPtr& R = B.ring();
  const std::size_t n = a.rows(), m = a.cols();
  if (m == 0) return Matrix(R, 0, 0);
  if (n == 0) return Matrix::identity(R, m);
  Matrix ar = a.reduced(B);
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < m; ++j) {
    Vec v = zero_vec(R, n + m);
    for (std::size_t i = 0; i < n; ++i) v[i] = ar.at(i, j);
    v[n + j] = Poly::constant(R, 1);
    gens.push_back(std::move(v));
  }
  for (const auto& g : B.ideal().groebner())
    for (std::size_t i = 0; i < n; ++i) {
      Vec v = zero_vec(R, n + m);
      v[i] = g;
      gens.push_back(std::move(v));
    }
  std::vector<Vec> cols;
  for (auto& v : module_groebner(gens, n + m, ModuleOrder::PositionOverTerm)) {
    bool top_zero = true;
    for (std::size_t i = 0; i < n && top_zero; ++i) top_zero = v[i].is_zero();
    if (!top_zero) continue;
    Vec w(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
    for (auto& p : w) p = B.reduce(p);
    if (!vec_is_zero(w)) cols.push_back(std::move(w));
  }
  Matrix s = Matrix::from_columns(R, m, std::move(cols));
  if (s.cols() <= 24) s = prune_columns(s, Matrix(R, m, 0), B);
  return s;
}

PresentedModule subquotient(const Matrix& K, const Matrix& N, const RingDecl& B) {
  const std::size_t k = K.cols();
  if (K.is_identity()) return PresentedModule(B, N.reduced(B), K).simplified();
  Matrix s = syzygy(K.hcat(N), B);
  return PresentedModule(B, s.row_range(0, k), K).simplified();
}

Resolution free_resolution(const PresentedModule& M, std::optional<std::size_t> cutoff) {
  const RingDecl& B = M.ring();
  PresentedModule s = M.simplified();
  std::size_t limit = cutoff.value_or(B.is_polynomial_ring() ? B.nvars() + 1
                                                             : 2 * static_cast<std::size_t>(std::max(B.dim(), 0)) + 2);
  Resolution res{B, s.rank(), {}, false};
  Matrix cur = s.relations();
  if (cur.cols() == 0) {
    res.terminated = true;
    return res;
  }
  res.maps.push_back(cur);
  for (;;) {
    budget_check_time();
    Matrix next = syzygy(cur, B);
    if (next.cols() == 0) {
      res.terminated = true;
      break;
    }
    if (res.maps.size() >= limit) break;
    res.maps.push_back(next);
    cur = std::move(next);
  }
  return res;
}

std::string PdVerdict::str() const {
  switch (kind) {
    case Kind::Exact:
      return std::to_string(value);
    case Kind::AtLeast:
      return "at-least(" + std::to_string(value) + ")";
    case Kind::ZeroModule:
      return "zero-module";
  }
  return "";
}

int BettiData::chi(std::size_t i) const {
  if (i == 0) return euler.value_or(0);
  return i - 1 < partial_eulers.size() ? partial_eulers[i - 1] : 0;
}

namespace {

std::size_t constant_rank(const Grid& g, const Field& F) {
  std::vector<std::vector<Coeff>> m(g.rows, std::vector<Coeff>(g.cols));
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t c = 0; c < g.cols; ++c) m[r][c] = g.a[r][c].constant_term();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < g.cols && rank < g.rows; ++c) {
    std::size_t p = rank;
    while (p < g.rows && m[p][c] == 0) ++p;
    if (p == g.rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < g.rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Coeff f = F.div(m[r][c], m[rank][c]);
      for (std::size_t k = c; k < g.cols; ++k) m[r][k] = F.sub(m[r][k], F.mul(f, m[rank][k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::pair<Resolution, BettiData> minimize_at_origin(const Resolution& res) {
  const RingDecl& B = res.ring;
  if (!B.origin_on_variety()) throw Error("origin is not a point of " + B.name());
  const Field& F = B.ring()->field();
  const std::size_t L = res.maps.size();
  std::vector<Grid> d(L + 2);  // d[i] for 1 <= i <= L; d[0], d[L+1] unused
  for (std::size_t i = 1; i <= L; ++i) d[i] = Grid::from(res.maps[i - 1].reduced(B));
  std::vector<std::size_t> orig_rank(L + 1);
  for (std::size_t i = 0; i <= L; ++i) orig_rank[i] = res.rank(i);
  std::vector<std::size_t> const_rank(L + 2, 0);
  for (std::size_t i = 1; i <= L; ++i) const_rank[i] = constant_rank(d[i], F);

  for (std::size_t i = 1; i <= L; ++i) {
    for (;;) {
      budget_check_time();
      Grid& D = d[i];
      std::size_t pr = 0, pc = 0;
      int best = 0;  // 2 = scalar entry, 1 = entry with nonzero constant term
      for (std::size_t r = 0; r < D.rows && best < 2; ++r)
        for (std::size_t c = 0; c < D.cols && best < 2; ++c) {
          const Poly& p = D.a[r][c];
          if (p.constant_term() == 0) continue;
          int score = p.is_constant() ? 2 : 1;
          if (score > best) {
            best = score;
            pr = r;
            pc = c;
          }
        }
      if (best == 0) break;
      const bool has_next = i < L, has_prev = i > 1;
      if (D.a[pr][pc].is_constant()) {
        // Rescale basis vector c so the pivot becomes 1.
        Coeff u = D.a[pr][pc].constant_term();
        for (std::size_t r = 0; r < D.rows; ++r) D.a[r][pc] = D.a[r][pc].scaled(F.inv(u));
        if (has_next)
          for (auto& x : d[i + 1].a[pc]) x = x.scaled(u);
      }
      Poly u = D.a[pr][pc];
      const bool unit_pivot = u.is_constant();
      // Column operations clear row pr; the next map absorbs u * P^{-1}.
      if (has_next && !unit_pivot)
        for (auto& x : d[i + 1].a[pc]) x = B.reduce(u * x);
      for (std::size_t l = 0; l < D.cols; ++l) {
        if (l == pc || D.a[pr][l].is_zero()) continue;
        Poly a = D.a[pr][l];
        for (std::size_t r = 0; r < D.rows; ++r) {
          Poly v = unit_pivot ? D.a[r][l] : D.a[r][l] * u;
          D.a[r][l] = B.reduce(v - a * D.a[r][pc]);
        }
        if (has_next) {
          Grid& N = d[i + 1];
          for (std::size_t k = 0; k < N.cols; ++k) N.a[pc][k] += a * N.a[l][k];
        }
      }
      // Row operations clear column pc; the previous map absorbs u * S^{-1}.
      if (has_prev && !unit_pivot)
        for (auto& row : d[i - 1].a) row[pr] = B.reduce(u * row[pr]);
      for (std::size_t k = 0; k < D.rows; ++k) {
        if (k == pr || D.a[k][pc].is_zero()) continue;
        Poly b = D.a[k][pc];
        for (std::size_t c = 0; c < D.cols; ++c) {
          Poly v = unit_pivot ? D.a[k][c] : D.a[k][c] * u;
          D.a[k][c] = B.reduce(v - b * D.a[pr][c]);
        }
        if (has_prev) {
          Grid& Pm = d[i - 1];
          for (std::size_t r = 0; r < Pm.rows; ++r) Pm.a[r][pr] += b * Pm.a[r][k];
        }
      }
      D.erase_row(pr);
      D.erase_col(pc);
      if (has_next) d[i + 1].erase_row(pc);
      if (has_prev) d[i - 1].erase_col(pr);
    }
  }

  Resolution out{B, 0, {}, res.terminated};
  std::vector<int> ranks;
  ranks.push_back(static_cast<int>(L == 0 ? res.rank0 : d[1].rows));
  for (std::size_t i = 1; i <= L; ++i) {
    ranks.push_back(static_cast<int>(d[i].cols));
    for (auto& row : d[i].a)
      for (auto& x : row) x = B.reduce(x);
    out.maps.push_back(d[i].to(B.ring()));
  }
  out.rank0 = static_cast<std::size_t>(ranks[0]);
  // Independent count: beta_i = r_i - rank d_i(0) - rank d_{i+1}(0).
  for (std::size_t i = 0; i <= L; ++i) {
    if (i == L && !res.terminated) break;
    long expect = static_cast<long>(orig_rank[i]) - static_cast<long>(i >= 1 ? const_rank[i] : 0) -
                  static_cast<long>(i + 1 <= L ? const_rank[i + 1] : 0);
    if (expect != ranks[i]) throw Error("minimization disagrees with constant-rank count");
  }

  BettiData bd;
  std::size_t known = ranks.size();
  if (!res.terminated && ranks.back() != 0) --known;
  std::vector<int> betti(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(known));
  while (!betti.empty() && betti.back() == 0) betti.pop_back();
  const bool exact = res.terminated || betti.size() < known;
  bd.betti = betti;
  if (betti.empty() && exact) {
    bd.pd = {PdVerdict::Kind::ZeroModule, 0};
  } else if (exact) {
    bd.pd = {PdVerdict::Kind::Exact, static_cast<int>(betti.size()) - 1};
  } else {
    bd.pd = {PdVerdict::Kind::AtLeast, static_cast<int>(betti.size()) - 1};
  }
  if (exact) {
    for (std::size_t i = 0; i < betti.size(); ++i) {
      int chi = 0;
      for (std::size_t j = i; j < betti.size(); ++j) chi += (j % 2 ? -1 : 1) * betti[j];
      if (i == 0)
        bd.euler = chi;
      else
        bd.partial_eulers.push_back(chi);
    }
    if (betti.empty()) bd.euler = 0;
  }
  return {out, bd};
}

BettiData local_betti(const PresentedModule& M, std::optional<std::size_t> cutoff) {
  return minimize_at_origin(free_resolution(M, cutoff)).second;
}

namespace {

Poly determinant(const std::vector<std::vector<const Poly*>>& m, const RingPtr& R) {
  const std::size_t k = m.size();
  if (k == 1) return *m[0][0];
  if (k == 2) return *m[0][0] * *m[1][1] - *m[0][1] * *m[1][0];
  Poly acc(R);
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c]->is_zero()) continue;
    std::vector<std::vector<const Poly*>> sub;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<const Poly*> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[r][j]);
      sub.push_back(std::move(row));
    }
    Poly t = *m[0][c] * determinant(sub, R);
    acc = c % 2 ? acc - t : acc + t;
  }
  return acc;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Ideal fitting_ideal(const PresentedModule& M, std::size_t i) {
  const RingDecl& B = M.ring();
  const RingPtr& R = B.ring();
  PresentedModule s = M.simplified();
  const std::size_t n = s.rank();
  if (i >= n) return Ideal::unit(R);
  const std::size_t k = n - i;
  const Matrix& A = s.relations();
  std::vector<Poly> minors = B.ideal().gens();
  if (k <= A.cols()) {
    std::vector<Poly> found;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(A.cols(), k, [&](const std::vector<std::size_t>& cols) {
        budget_check_time();
        std::vector<std::vector<const Poly*>> m;
        for (auto r : rows) {
          std::vector<const Poly*> row;
          for (auto c : cols) row.push_back(&A.at(r, c));
          m.push_back(std::move(row));
        }
        Poly d = B.reduce(determinant(m, R));
        if (d.is_zero()) return;
        d = d.monic();
        if (std::find(found.begin(), found.end(), d) == found.end()) found.push_back(std::move(d));
      });
    });
    for (auto& p : found) minors.push_back(std::move(p));
  }
  return Ideal(R, std::move(minors));
}

std::size_t generic_rank(const PresentedModule& M) {
  const Ideal& I = M.ring().ideal();
  for (std::size_t i = 0;; ++i)
    if (!I.contains(fitting_ideal(M, i))) return i;
}

PresentedModule dual_module(const PresentedModule& M) {
  const RingDecl& B = M.ring();
  const Matrix& A = M.relations();
  Matrix K = A.cols() == 0 ? Matrix::identity(B.ring(), M.rank()) : syzygy(A.transpose(), B);
  return subquotient(K, Matrix(B.ring(), K.rows(), 0), B);
}

PresentedModule transpose_module(const PresentedModule& M) {
  return PresentedModule(M.ring(), M.relations().transpose());
}

std::optional<PresentedModule> ext_module(const Resolution& res, std::size_t i) {
  const RingDecl& B = res.ring;
  const RingPtr& R = B.ring();
  const std::size_t L = res.maps.size();
  if (i > L) {
    if (res.terminated) return PresentedModule::free(B, 0);
    return std::nullopt;
  }
  const std::size_t ri = res.rank(i);
  Matrix K;
  if (i + 1 <= L) {
    K = syzygy(res.maps[i].transpose(), B);
  } else if (res.terminated) {
    K = Matrix::identity(R, ri);
  } else {
    return std::nullopt;
  }
  Matrix N = i >= 1 ? res.maps[i - 1].transpose() : Matrix(R, ri, 0);
  return subquotient(K, N, B);
}

std::optional<PresentedModule> ext_module(const PresentedModule& M, std::size_t i, std::optional<std::size_t> cutoff) {
  std::size_t c = std::max(cutoff.value_or(0), i + 1);
  return ext_module(free_resolution(M, c), i);
}

PresentedModule torsion_submodule(const PresentedModule& M, const Poly& f) {
  if (f.is_zero()) throw Error("torsion witness must be nonzero");
  const RingDecl& B = M.ring();
  const RingPtr& R = B.ring();
  const std::size_t n = M.rank();
  Matrix A = M.relations().reduced(B);
  Matrix fid = Matrix::identity(R, n);
  for (std::size_t j = 0; j < n; ++j) fid.at(j, j) = f;
  Matrix U = A;
  for (int iter = 0;; ++iter) {
    if (iter > 32) throw BudgetExceeded("torsion saturation did not stabilize");
    budget_check_time();
    Matrix next = syzygy(fid.hcat(U), B).row_range(0, n);
    if (SpanTester(U, B).contains_all(next)) break;
    U = prune_columns(next.hcat(A), Matrix(R, n, 0), B);
  }
  Matrix gens = prune_columns(U, A, B);
  return subquotient(gens, A, B);
}

PresentedModule over_ambient(const PresentedModule& M) {
  const RingDecl& B = M.ring();
  RingDecl R(B.name(), B.ring(), {});
  Matrix rel = M.relations();
  for (const auto& g : B.ideal().groebner())
    for (std::size_t i = 0; i < M.rank(); ++i) {
      Vec v = zero_vec(B.ring(), M.rank());
      v[i] = g;
      rel = rel.hcat(Matrix::from_columns(B.ring(), M.rank(), {v}));
    }
  return PresentedModule(R, rel, M.embedding());
}

std::optional<int> depth_at_origin(const PresentedModule& M) {
  PresentedModule A = over_ambient(M);
  BettiData b = local_betti(A);
  if (b.pd.kind != PdVerdict::Kind::Exact) return std::nullopt;
  return static_cast<int>(A.ring().nvars()) - b.pd.value;
}

}  // namespace ramify
