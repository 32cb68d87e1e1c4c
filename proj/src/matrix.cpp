#include "ramify/matrix.hpp"

#include "ramify/error.hpp"

namespace ramify {

RingDecl::RingDecl(std::string name, RingPtr ring, std::vector<Poly> gens)
    : name_(std::move(name)), ring_(ring), ideal_(std::move(ring), std::move(gens)) {}

bool RingDecl::origin_on_variety() const {
  for (const auto& g : ideal_.gens())
    if (g.constant_term() != 0) return false;
  return true;
}

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols, zero_vec(ring_, rows)) {}

Matrix Matrix::from_columns(RingPtr ring, std::size_t rows, std::vector<Vec> cols) {
  Matrix m(std::move(ring), rows, 0);
  for (auto& c : cols) {
    if (c.size() != rows) throw Error("column length mismatch");
    m.cols_.push_back(std::move(c));
  }
  return m;
}

Matrix Matrix::identity(const RingPtr& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(ring, 1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols(), rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols(); ++c) t.at(c, r) = at(r, c);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols()) throw Error("matrix-vector size mismatch");
  Vec out = zero_vec(ring_, rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols() != o.rows()) throw Error("matrix product size mismatch");
  Matrix m(ring_, rows_, 0);
  for (const auto& c : o.cols_) m.cols_.push_back(apply(c));
  return m;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw Error("hcat row mismatch");
  Matrix m = *this;
  if (!m.ring_) m.ring_ = o.ring_;
  for (const auto& c : o.cols_) m.cols_.push_back(c);
  return m;
}

Matrix Matrix::row_range(std::size_t begin, std::size_t end) const {
  Matrix m(ring_, end - begin, 0);
  for (const auto& c : cols_) m.cols_.emplace_back(c.begin() + begin, c.begin() + end);
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(ring_, rows_, 0);
  for (auto i : idx) m.cols_.push_back(cols_[i]);
  return m;
}

Matrix Matrix::reduced(const RingDecl& B) const {
  Matrix m = *this;
  for (auto& c : m.cols_)
    for (auto& p : c) p = B.reduce(p);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& c : cols_)
    if (!vec_is_zero(c)) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rows_; ++c) {
      const Poly& p = at(r, c);
      if (r == c ? !(p.is_constant() && p.constant_term() == 1) : !p.is_zero()) return false;
    }
  return true;
}

std::string Matrix::str() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < cols(); ++c) {
      if (c) s += ", ";
      s += at(r, c).str();
    }
  }
  return s + "]";
}

bool vec_is_zero(const Vec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

Vec zero_vec(const RingPtr& ring, std::size_t n) { return Vec(n, Poly(ring)); }

SpanTester::SpanTester(const Matrix& gens, const RingDecl& B) : rank_(gens.rows()) {
  std::vector<Vec> g;
  for (const auto& c : gens.columns())
    if (!vec_is_zero(c)) g.push_back(c);
  for (const auto& p : B.ideal().groebner())
    for (std::size_t i = 0; i < rank_; ++i) {
      Vec v = zero_vec(B.ring(), rank_);
      v[i] = p;
      g.push_back(std::move(v));
    }
  gb_ = module_groebner(g, rank_, ModuleOrder::TermOverPosition);
}

bool SpanTester::contains(const Vec& v) const {
  if (vec_is_zero(v)) return true;
  return vec_is_zero(module_normal_form(v, gb_, ModuleOrder::TermOverPosition));
}

bool SpanTester::contains_all(const Matrix& m) const {
  for (const auto& c : m.columns())
    if (!contains(c)) return false;
  return true;
}

}  // namespace ramify
