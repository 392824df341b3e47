#pragma once

#include <cstddef>
#include <vector>

#include "modpovm/cyclotomic.hpp"

namespace modpovm {

// Dense row-major matrix over one cyclotomic field.
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(size_t rows, size_t cols, int conductor = 1);
  CycloMatrix(size_t rows, size_t cols, std::vector<CycloNum> entries);

  static CycloMatrix identity(size_t n, int conductor = 1);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  int conductor() const { return n_; }

  const CycloNum& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  // Caller must keep the entry at conductor(); use set() otherwise.
  CycloNum& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  void set(size_t i, size_t j, const CycloNum& x);
  const std::vector<CycloNum>& entries() const { return a_; }

  void lift_to(int m);

  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

 private:
  size_t rows_ = 0, cols_ = 0;
  int n_ = 1;
  std::vector<CycloNum> a_;
};

CycloMatrix matmul(const CycloMatrix& a, const CycloMatrix& b);
CycloMatrix add(const CycloMatrix& a, const CycloMatrix& b);
CycloMatrix scale(const CycloMatrix& a, const CycloNum& s);
CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b);
CycloMatrix dagger(const CycloMatrix& a);
CycloMatrix outer(const CycloVector& u, const CycloVector& v);  // u v^dagger
CycloNum trace(const CycloMatrix& a);
CycloNum trace_of_product(const CycloMatrix& a, const CycloMatrix& b);
CycloVector matvec(const CycloMatrix& a, const CycloVector& v);

// Fraction-free elimination; pivot = first nonzero in row-major scan of the
// remaining block.
size_t rank(const CycloMatrix& m);
// Independent route: Gauss-Jordan on columns with normalized pivots.
size_t rank_by_columns(const CycloMatrix& m);

// Kernel of m, returned as rows of a reduced row echelon basis.
std::vector<CycloVector> kernel(const CycloMatrix& m);
std::vector<CycloVector> eigenspace(const CycloMatrix& p, const CycloNum& lambda);
// Reduced row echelon basis of the span of the given vectors.
std::vector<CycloVector> rref_rows(const std::vector<CycloVector>& vs);

CycloNum herm_inner(const CycloVector& u, const CycloVector& v);

}  // namespace modpovm
