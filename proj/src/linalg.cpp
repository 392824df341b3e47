#include "modpovm/linalg.hpp"

#include <utility>

#include "modpovm/errors.hpp"

namespace modpovm {

CycloMatrix::CycloMatrix(size_t rows, size_t cols, int conductor)
    : rows_(rows), cols_(cols), n_(conductor),
      a_(rows * cols, CycloNum(Rational(0), conductor)) {}

CycloMatrix::CycloMatrix(size_t rows, size_t cols, std::vector<CycloNum> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw DimensionError("CycloMatrix: entry count mismatch");
  n_ = unify_conductor(a_);
}

CycloMatrix CycloMatrix::identity(size_t n, int conductor) {
  CycloMatrix m(n, n, conductor);
  for (size_t i = 0; i < n; ++i) m.a_[i * n + i] = CycloNum(Rational(1), conductor);
  return m;
}

void CycloMatrix::set(size_t i, size_t j, const CycloNum& x) {
  if (x.conductor() == n_) {
    a_[i * cols_ + j] = x;
    return;
  }
  int m = static_cast<int>(lcm_ll(n_, x.conductor()));
  lift_to(m);
  a_[i * cols_ + j] = x.lifted(m);
}

void CycloMatrix::lift_to(int m) {
  if (m == n_) return;
  for (auto& x : a_) x = x.lifted(m);
  n_ = m;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

namespace {

void same_field(CycloMatrix& a, CycloMatrix& b) {
  if (a.conductor() == b.conductor()) return;
  int m = static_cast<int>(lcm_ll(a.conductor(), b.conductor()));
  a.lift_to(m);
  b.lift_to(m);
}

}  // namespace

CycloMatrix matmul(const CycloMatrix& a0, const CycloMatrix& b0) {
  if (a0.cols() != b0.rows()) throw DimensionError("matmul: shape mismatch");
  CycloMatrix a = a0, b = b0;
  same_field(a, b);
  CycloMatrix c(a.rows(), b.cols(), a.conductor());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const CycloNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c.at(i, j) += x * b(k, j);
    }
  return c;
}

CycloMatrix add(const CycloMatrix& a0, const CycloMatrix& b0) {
  if (a0.rows() != b0.rows() || a0.cols() != b0.cols()) throw DimensionError("add: shape mismatch");
  CycloMatrix a = a0, b = b0;
  same_field(a, b);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) a.at(i, j) += b(i, j);
  return a;
}

CycloMatrix scale(const CycloMatrix& a0, const CycloNum& s) {
  CycloMatrix a = a0;
  int m = static_cast<int>(lcm_ll(a.conductor(), s.conductor()));
  a.lift_to(m);
  CycloNum t = s.lifted(m);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) a.at(i, j) *= t;
  return a;
}

CycloMatrix kron(const CycloMatrix& a0, const CycloMatrix& b0) {
  CycloMatrix a = a0, b = b0;
  same_field(a, b);
  CycloMatrix c(a.rows() * b.rows(), a.cols() * b.cols(), a.conductor());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) c.at(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

CycloMatrix dagger(const CycloMatrix& a) {
  CycloMatrix c(a.cols(), a.rows(), a.conductor());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c.at(j, i) = a(i, j).conj();
  return c;
}

CycloMatrix outer(const CycloVector& u0, const CycloVector& v0) {
  CycloVector u = u0, v = v0;
  int m = static_cast<int>(lcm_ll(common_conductor(u), common_conductor(v)));
  unify_conductor(u, m);
  unify_conductor(v, m);
  CycloMatrix c(u.size(), v.size(), m);
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) c.at(i, j) = u[i] * v[j].conj();
  }
  return c;
}

CycloNum trace(const CycloMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("trace: matrix not square");
  CycloNum t(Rational(0), a.conductor());
  for (size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

CycloNum trace_of_product(const CycloMatrix& a0, const CycloMatrix& b0) {
  if (a0.cols() != b0.rows() || a0.rows() != b0.cols())
    throw DimensionError("trace_of_product: shape mismatch");
  CycloMatrix a = a0, b = b0;
  same_field(a, b);
  CycloNum t(Rational(0), a.conductor());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !b(k, i).is_zero()) t += a(i, k) * b(k, i);
  return t;
}

CycloVector matvec(const CycloMatrix& a, const CycloVector& v0) {
  if (a.cols() != v0.size()) throw DimensionError("matvec: length mismatch");
  CycloVector v = v0;
  int m = unify_conductor(v, a.conductor());
  CycloVector out(a.rows(), CycloNum(Rational(0), m));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

size_t rank(const CycloMatrix& m) {
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<CycloNum> a = m.entries();
  auto at = [&](size_t i, size_t j) -> CycloNum& { return a[i * cols + j]; };
  CycloNum prev_inv(Rational(1), m.conductor());
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (size_t j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));
    const CycloNum piv = at(r, c);
    for (size_t i = r + 1; i < rows; ++i) {
      const CycloNum f = at(i, c);
      for (size_t j = c + 1; j < cols; ++j) {
        CycloNum x = piv * at(i, j);
        if (!f.is_zero() && !at(r, j).is_zero()) x -= f * at(r, j);
        if (!x.is_zero() && !prev_inv.is_one()) x *= prev_inv;
        at(i, j) = std::move(x);
      }
      at(i, c) = CycloNum(Rational(0), m.conductor());
    }
    prev_inv = piv.inverse();
    ++r;
  }
  return r;
}

namespace {

// Gauss-Jordan in place on a row list; returns pivot columns.
std::vector<size_t> gauss_jordan(std::vector<CycloVector>& rowsv, size_t cols) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rowsv.size(); ++c) {
    size_t p = r;
    while (p < rowsv.size() && rowsv[p][c].is_zero()) ++p;
    if (p == rowsv.size()) continue;
    std::swap(rowsv[p], rowsv[r]);
    CycloNum inv = rowsv[r][c].inverse();
    for (size_t j = c; j < cols; ++j)
      if (!rowsv[r][j].is_zero()) rowsv[r][j] *= inv;
    for (size_t i = 0; i < rowsv.size(); ++i) {
      if (i == r || rowsv[i][c].is_zero()) continue;
      CycloNum f = rowsv[i][c];
      for (size_t j = c; j < cols; ++j)
        if (!rowsv[r][j].is_zero()) rowsv[i][j] -= f * rowsv[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rowsv.resize(r);
  return pivots;
}

}  // namespace

size_t rank_by_columns(const CycloMatrix& m) {
  std::vector<CycloVector> colsv(m.cols(), CycloVector(m.rows()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) colsv[j][i] = m(i, j);
  // plain forward elimination, no back substitution
  size_t r = 0;
  const size_t len = m.rows();
  for (size_t c = 0; c < len && r < colsv.size(); ++c) {
    size_t p = r;
    while (p < colsv.size() && colsv[p][c].is_zero()) ++p;
    if (p == colsv.size()) continue;
    std::swap(colsv[p], colsv[r]);
    CycloNum inv = colsv[r][c].inverse();
    for (size_t j = c; j < len; ++j)
      if (!colsv[r][j].is_zero()) colsv[r][j] *= inv;
    for (size_t i = r + 1; i < colsv.size(); ++i) {
      if (colsv[i][c].is_zero()) continue;
      CycloNum f = colsv[i][c];
      for (size_t j = c; j < len; ++j)
        if (!colsv[r][j].is_zero()) colsv[i][j] -= f * colsv[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<CycloVector> rref_rows(const std::vector<CycloVector>& vs) {
  if (vs.empty()) return {};
  const size_t cols = vs[0].size();
  long long cond = 1;
  for (const auto& v : vs) {
    if (v.size() != cols) throw DimensionError("rref_rows: ragged input");
    cond = lcm_ll(cond, common_conductor(v));
  }
  std::vector<CycloVector> rowsv = vs;
  for (auto& v : rowsv) unify_conductor(v, static_cast<int>(cond));
  gauss_jordan(rowsv, cols);
  return rowsv;
}

std::vector<CycloVector> kernel(const CycloMatrix& m) {
  const size_t cols = m.cols();
  std::vector<CycloVector> rowsv(m.rows(), CycloVector(cols));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < cols; ++j) rowsv[i][j] = m(i, j);
  auto pivots = gauss_jordan(rowsv, cols);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<CycloVector> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    CycloVector v(cols, CycloNum(Rational(0), m.conductor()));
    v[f] = CycloNum(Rational(1), m.conductor());
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rowsv[i][f];
    basis.push_back(std::move(v));
  }
  return rref_rows(basis);
}

std::vector<CycloVector> eigenspace(const CycloMatrix& p, const CycloNum& lambda) {
  if (p.rows() != p.cols()) throw DimensionError("eigenspace: matrix not square");
  CycloMatrix shifted = add(p, scale(CycloMatrix::identity(p.rows()), -lambda));
  return kernel(shifted);
}

CycloNum herm_inner(const CycloVector& u, const CycloVector& v) {
  if (u.size() != v.size()) throw DimensionError("herm_inner: length mismatch");
  CycloNum acc;
  for (size_t k = 0; k < u.size(); ++k)
    if (!u[k].is_zero() && !v[k].is_zero()) acc += u[k].conj() * v[k];
  return acc;
}

}  // namespace modpovm
