#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ramify/groebner.hpp"
#include "ramify/ideal.hpp"

namespace ramify {

// Affine coordinate ring B = R/I.
class RingDecl {
 public:
  RingDecl() = default;
  RingDecl(std::string name, RingPtr ring, std::vector<Poly> gens);

  const std::string& name() const { return name_; }
  const RingPtr& ring() const { return ring_; }
  const Ideal& ideal() const { return ideal_; }
  std::size_t nvars() const { return ring_->nvars(); }
  bool is_polynomial_ring() const { return ideal_.is_zero(); }

  Poly reduce(const Poly& p) const { return ideal_.reduce(p); }
  bool is_zero(const Poly& p) const { return ideal_.contains(p); }
  int dim() const { return krull_dim(ideal_); }
  bool origin_on_variety() const;
  // Same ring with a different name (used for derived objects).
  Poly var(std::size_t i) const { return Poly::variable(ring_, i); }

 private:
  std::string name_;
  RingPtr ring_;
  Ideal ideal_;
};

// Column-major matrix over R; columns are module elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static Matrix from_columns(RingPtr ring, std::size_t rows, std::vector<Vec> cols);
  static Matrix identity(const RingPtr& ring, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const Poly& at(std::size_t r, std::size_t c) const { return cols_[c][r]; }
  Poly& at(std::size_t r, std::size_t c) { return cols_[c][r]; }
  const Vec& column(std::size_t c) const { return cols_[c]; }
  const std::vector<Vec>& columns() const { return cols_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& v) const;
  Matrix hcat(const Matrix& o) const;
  Matrix row_range(std::size_t begin, std::size_t end) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix reduced(const RingDecl& B) const;
  bool is_zero() const;
  bool is_identity() const;
  std::string str() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::vector<Vec> cols_;
};

bool vec_is_zero(const Vec& v);
Vec zero_vec(const RingPtr& ring, std::size_t n);

// Membership in span(gens) + I·B^n, with the module GB computed once.
class SpanTester {
 public:
  SpanTester(const Matrix& gens, const RingDecl& B);
  bool contains(const Vec& v) const;
  bool contains_all(const Matrix& m) const;

 private:
  std::size_t rank_;
  std::vector<Vec> gb_;
};

}  // namespace ramify
