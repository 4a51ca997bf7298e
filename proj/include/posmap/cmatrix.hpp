/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_CMATRIX_HPP
#define POSMAP_CMATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "posmap/errors.hpp"

namespace posmap {

using Complex = std::complex<double>;

// Which tensor factor of K (x) H an operation acts on.
enum class Factor { first, second };

// Dense complex matrix, row-major storage.
class CMatrix {
public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Complex &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Complex> &data() { return data_; }
  const std::vector<Complex> &data() const { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conjugate() const;
  CMatrix hermitized() const; // (M + M*)/2

  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  // max_ij |M[i,j] - conj(M[j,i])| <= tol
  bool is_hermitian(double tol) const;

  CMatrix &operator+=(const CMatrix &other);
  CMatrix &operator-=(const CMatrix &other);
  CMatrix &operator*=(Complex s);

  friend CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

  CMatrix operator*(const CMatrix &other) const;               // matrix product
  std::vector<Complex> operator*(const std::vector<Complex> &v) const; // matvec

  bool operator==(const CMatrix &other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Matrix unit e_ij in B(C^n).
CMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);

// Kronecker product with the bipartite index convention (i,j) -> i*dimH + j,
// i.e. (A (x) B)[(i,a),(j,b)] = A[i,j] B[a,b].
CMatrix kron(const CMatrix &a, const CMatrix &b);

// Partial transpose of an operator on K (x) H. `which == second` transposes
// within each dimH x dimH block; `which == first` swaps block indices.
CMatrix partial_transpose(const CMatrix &m, std::size_t dim_k, std::size_t dim_h, Factor which);

// Partial trace; `which` names the factor that is traced out.
CMatrix partial_trace(const CMatrix &m, std::size_t dim_k, std::size_t dim_h, Factor which);

// <a, b> = sum_i conj(a_i) b_i.
Complex inner(const std::vector<Complex> &a, const std::vector<Complex> &b);
double vec_norm(const std::vector<Complex> &a);

// Vector in K (x) H with amplitude index (i,j) -> i*dimH + j.
struct BipartiteVector {
  std::size_t dim_k = 0;
  std::size_t dim_h = 0;
  std::vector<Complex> amplitudes;

  double norm() const { return vec_norm(amplitudes); }

  // dimK x dimH matrix Y with Y[i,j] = amplitude (i,j).
  CMatrix coefficient_matrix() const;
  static BipartiteVector from_matrix(const CMatrix &y);
};

} // namespace posmap

#endif
