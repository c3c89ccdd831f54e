#include "klein4/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace klein4 {

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scaled(const Vec& a, const Rat& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

void vec_axpy(Vec& acc, const Rat& s, const Vec& a) {
  if (acc.size() != a.size()) throw std::invalid_argument("vec_axpy: size mismatch");
  if (is_zero(s)) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) acc[i] += s * a[i];
}

Rat vec_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_dot: size mismatch");
  Rat r(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) r += a[i] * b[i];
  return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return RatMatrix();
  RatMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec RatMatrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec RatMatrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rat& bkj = o.at(k, j);
        if (sgn(bkj) != 0) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Vec RatMatrix::apply(const Vec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix apply: shape mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat acc(0);
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& aij = at(i, j);
      if (sgn(aij) != 0 && sgn(v[j]) != 0) acc += aij * v[j];
    }
    r[i] = acc;
  }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff: shape mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMatrix RatMatrix::scaled(const Rat& s) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool RatMatrix::is_zero() const {
  for (const Rat& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Rat RatMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: not square");
  Rat t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::size_t RatMatrix::rref() {
  std::size_t r = 0;
  for (std::size_t lead = 0; lead < cols_ && r < rows_; ++lead) {
    std::size_t piv = r;
    while (piv < rows_ && sgn(at(piv, lead)) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
    Rat inv = 1 / at(r, lead);
    if (inv != 1)
      for (std::size_t j = lead; j < cols_; ++j)
        if (sgn(at(r, j)) != 0) at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Rat f = at(i, lead);
      if (sgn(f) == 0) continue;
      for (std::size_t j = lead; j < cols_; ++j)
        if (sgn(at(r, j)) != 0) at(i, j) -= f * at(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t RatMatrix::rank() const {
  RatMatrix c = *this;
  return c.rref();
}

RatMatrix RatMatrix::kernel() const {
  RatMatrix c = *this;
  std::size_t rk = c.rref();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols_, false);
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols_ && r < rk; ++j) {
    if (sgn(c.at(r, j)) != 0) {  // rref: first nonzero of row r
      pivot_col.push_back(j);
      is_pivot[j] = true;
      ++r;
    }
  }
  RatMatrix k(cols_, cols_ - rk);
  std::size_t out = 0;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    k.at(f, out) = 1;
    for (std::size_t pr = 0; pr < pivot_col.size(); ++pr) k.at(pivot_col[pr], out) = -c.at(pr, f);
    ++out;
  }
  return k;
}

bool RatMatrix::solve(const Vec& b, Vec& x) const {
  if (b.size() != rows_) throw std::invalid_argument("solve: rhs size mismatch");
  RatMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::size_t rk = aug.rref();
  x.assign(cols_, Rat(0));
  std::size_t r = 0;
  for (std::size_t j = 0; j <= cols_ && r < rk; ++j) {
    if (sgn(aug.at(r, j)) == 0) continue;
    if (j == cols_) return false;  // pivot in rhs column
    x[j] = aug.at(r, cols_);
    ++r;
  }
  return true;
}

bool RatMatrix::inverse(RatMatrix& out) const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
  RatMatrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  if (aug.rref() != rows_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    if (aug.at(i, i) != 1) return false;
  out = RatMatrix(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
  return true;
}

void RatMatrix::symmetric_signature(std::size_t& npos, std::size_t& nneg, std::size_t& nzero) const {
  if (rows_ != cols_) throw std::invalid_argument("signature: not square");
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) throw std::invalid_argument("signature: not symmetric");
  RatMatrix m = *this;
  std::size_t n = rows_;
  npos = nneg = nzero = 0;
  auto add_row_col = [&](std::size_t dst, std::size_t src) {
    for (std::size_t j = 0; j < n; ++j) m.at(dst, j) += m.at(src, j);
    for (std::size_t i = 0; i < n; ++i) m.at(i, dst) += m.at(i, src);
  };
  auto swap_row_col = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, a), m.at(i, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(m.at(k, k)) == 0) {
      std::size_t d = k;
      for (std::size_t j = k + 1; j < n && d == k; ++j)
        if (sgn(m.at(j, j)) != 0) d = j;
      if (d != k) {
        swap_row_col(k, d);
      } else {
        std::size_t o = k;
        for (std::size_t j = k + 1; j < n && o == k; ++j)
          if (sgn(m.at(k, j)) != 0) o = j;
        if (o == k) {
          ++nzero;  // row and column vanish on the trailing block
          continue;
        }
        add_row_col(k, o);
      }
    }
    const Rat piv = m.at(k, k);
    if (sgn(piv) > 0)
      ++npos;
    else
      ++nneg;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat f = m.at(i, k) / piv;
      if (sgn(f) == 0) continue;
      for (std::size_t j = k; j < n; ++j)
        if (sgn(m.at(k, j)) != 0) m.at(i, j) -= f * m.at(k, j);
      for (std::size_t j = k; j < n; ++j)
        if (sgn(m.at(j, k)) != 0) m.at(j, i) -= f * m.at(j, k);
    }
  }
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).get_str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

Rat trace_product(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw std::invalid_argument("trace_product: shape mismatch");
  Rat t(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (sgn(aik) != 0 && sgn(b.at(k, i)) != 0) t += aik * b.at(k, i);
    }
  return t;
}

bool is_nilpotent(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_nilpotent: not square");
  std::size_t n = m.rows();
  if (n == 0) return true;
  // scale away denominators, nilpotency is invariant
  Int den(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& x = m.at(i, j);
      if (sgn(x) != 0) den = lcm(den, x.get_den());
    }
  RatMatrix p = m.scaled(Rat(den));
  if (p.is_zero()) return true;
  if (sgn(p.trace()) != 0) return false;
  std::size_t e = 1;
  while (e < n) {
    p = p * p;
    e *= 2;
    if (p.is_zero()) return true;
    if (sgn(p.trace()) != 0) return false;
  }
  return p.is_zero();
}

bool Subspace::add(const Vec& v) {
  if (v.size() != ambient_) throw std::invalid_argument("subspace add: ambient mismatch");
  Vec w = v;
  reduce(w);
  std::size_t lead = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (sgn(w[j]) != 0) {
      lead = j;
      break;
    }
  if (lead == ambient_) return false;
  Rat inv = 1 / w[lead];
  if (inv != 1)
    for (std::size_t j = lead; j < ambient_; ++j)
      if (sgn(w[j]) != 0) w[j] *= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat f = rows_[r][lead];
    if (sgn(f) == 0) continue;
    for (std::size_t j = lead; j < ambient_; ++j)
      if (sgn(w[j]) != 0) rows_[r][j] -= f * w[j];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(w));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

void Subspace::add_all(const std::vector<Vec>& vs) {
  for (const Vec& v : vs) add(v);
}

void Subspace::reduce(Vec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat f = v[pivots_[r]];
    if (sgn(f) == 0) continue;
    const Vec& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < ambient_; ++j)
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
  }
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace contains: ambient mismatch");
  Vec w = v;
  reduce(w);
  return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (const Vec& v : other.rows_)
    if (!contains(v)) return false;
  return true;
}

bool Subspace::coords(const Vec& v, Vec& out) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace coords: ambient mismatch");
  Vec w = v;
  out.assign(rows_.size(), Rat(0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat f = w[pivots_[r]];
    out[r] = f;
    if (sgn(f) == 0) continue;
    const Vec& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < ambient_; ++j)
      if (sgn(row[j]) != 0) w[j] -= f * row[j];
  }
  return vec_is_zero(w);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("subspace intersect: ambient mismatch");
  Subspace out(ambient_);
  if (rows_.empty() || other.rows_.empty()) return out;
  // columns: our basis, then the other's negated; kernel couples the two spans
  std::vector<Vec> cols;
  cols.reserve(rows_.size() + other.rows_.size());
  for (const Vec& v : rows_) cols.push_back(v);
  for (const Vec& v : other.rows_) cols.push_back(vec_scaled(v, Rat(-1)));
  RatMatrix m = RatMatrix::from_columns(cols);
  RatMatrix k = m.kernel();
  for (std::size_t c = 0; c < k.cols(); ++c) {
    Vec v(ambient_, Rat(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) vec_axpy(v, k.at(r, c), rows_[r]);
    out.add(v);
  }
  return out;
}

}  // namespace klein4
