#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "klein4/rational.hpp"

namespace klein4 {

// dense rational matrix, row major, exact arithmetic throughout
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<Vec>& rows);
  static RatMatrix from_columns(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;

  RatMatrix operator*(const RatMatrix& o) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rat& s) const;
  RatMatrix transposed() const;
  bool operator==(const RatMatrix& o) const;
  bool is_zero() const;

  Rat trace() const;

  // gauss-jordan in place, returns rank
  std::size_t rref();
  std::size_t rank() const;

  // basis of the right kernel, one vector per column
  RatMatrix kernel() const;

  // solve self * x = b, false if inconsistent (free variables set to zero)
  bool solve(const Vec& b, Vec& x) const;

  bool inverse(RatMatrix& out) const;

  // inertia of a symmetric matrix via congruence elimination
  void symmetric_signature(std::size_t& npos, std::size_t& nneg, std::size_t& nzero) const;

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

// tr(A*B) without forming the product
Rat trace_product(const RatMatrix& a, const RatMatrix& b);

// exact nilpotency test: clears denominators, then squares repeatedly with
// early zero / nonzero-trace exits
bool is_nilpotent(const RatMatrix& m);

// row-reduced span with cheap membership and coordinate queries
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  // true if v enlarged the span
  bool add(const Vec& v);
  void add_all(const std::vector<Vec>& vs);

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  // coordinates of v in the reduced basis, false if v is outside
  bool coords(const Vec& v, Vec& out) const;

  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Subspace intersect(const Subspace& other) const;

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;            // rref rows
  std::vector<std::size_t> pivots_;  // ascending, parallel to rows_
  void reduce(Vec& v) const;
};

}  // namespace klein4
