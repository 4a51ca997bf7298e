/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "posmap/cmatrix.hpp"

#include <cmath>

namespace posmap {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Complex(1.0, 0.0);
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = (*this)(i, j);
  return out;
}

CMatrix CMatrix::conjugate() const {
  CMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = std::conj(data_[i]);
  return out;
}

CMatrix CMatrix::hermitized() const {
  CMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return out;
}

Complex CMatrix::trace() const {
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i)
    t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex &z : data_)
    s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex &z : data_)
    m = std::max(m, std::abs(z));
  return m;
}

bool CMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol)
        return false;
  return true;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InvalidInput("matrix addition: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += other.data_[i];
  return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InvalidInput("matrix subtraction: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= other.data_[i];
  return *this;
}

CMatrix &CMatrix::operator*=(Complex s) {
  for (Complex &z : data_)
    z *= s;
  return *this;
}

CMatrix CMatrix::operator*(const CMatrix &other) const {
  if (cols_ != other.rows_)
    throw InvalidInput("matrix product: dimension mismatch");
  CMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex(0.0, 0.0))
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out(i, j) += aik * other(k, j);
    }
  }
  return out;
}

std::vector<Complex> CMatrix::operator*(const std::vector<Complex> &v) const {
  if (cols_ != v.size())
    throw InvalidInput("matvec: dimension mismatch");
  std::vector<Complex> out(rows_, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc(0.0, 0.0);
    const Complex *row = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j)
      acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

CMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n)
    throw InvalidInput("matrix_unit: index out of range");
  CMatrix m(n, n);
  m(i, j) = Complex(1.0, 0.0);
  return m;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0))
        continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return out;
}

namespace {

void check_bipartite(const CMatrix &m, std::size_t dim_k, std::size_t dim_h) {
  if (m.rows() != m.cols())
    throw InvalidInput("bipartite operation: matrix must be square");
  if (dim_k == 0 || dim_h == 0 || m.rows() != dim_k * dim_h)
    throw InvalidInput("bipartite operation: dimension does not factor as dimK*dimH");
}

} // namespace

CMatrix partial_transpose(const CMatrix &m, std::size_t dim_k, std::size_t dim_h, Factor which) {
  check_bipartite(m, dim_k, dim_h);
  CMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < dim_k; ++i)
    for (std::size_t a = 0; a < dim_h; ++a)
      for (std::size_t j = 0; j < dim_k; ++j)
        for (std::size_t b = 0; b < dim_h; ++b) {
          if (which == Factor::second)
            out(i * dim_h + a, j * dim_h + b) = m(i * dim_h + b, j * dim_h + a);
          else
            out(i * dim_h + a, j * dim_h + b) = m(j * dim_h + a, i * dim_h + b);
        }
  return out;
}

CMatrix partial_trace(const CMatrix &m, std::size_t dim_k, std::size_t dim_h, Factor which) {
  check_bipartite(m, dim_k, dim_h);
  if (which == Factor::first) {
    CMatrix out(dim_h, dim_h);
    for (std::size_t a = 0; a < dim_h; ++a)
      for (std::size_t b = 0; b < dim_h; ++b) {
        Complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < dim_k; ++i)
          acc += m(i * dim_h + a, i * dim_h + b);
        out(a, b) = acc;
      }
    return out;
  }
  CMatrix out(dim_k, dim_k);
  for (std::size_t i = 0; i < dim_k; ++i)
    for (std::size_t j = 0; j < dim_k; ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t a = 0; a < dim_h; ++a)
        acc += m(i * dim_h + a, j * dim_h + a);
      out(i, j) = acc;
    }
  return out;
}

Complex inner(const std::vector<Complex> &a, const std::vector<Complex> &b) {
  if (a.size() != b.size())
    throw InvalidInput("inner product: dimension mismatch");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += std::conj(a[i]) * b[i];
  return acc;
}

double vec_norm(const std::vector<Complex> &a) {
  double s = 0.0;
  for (const Complex &z : a)
    s += std::norm(z);
  return std::sqrt(s);
}

CMatrix BipartiteVector::coefficient_matrix() const {
  CMatrix y(dim_k, dim_h);
  if (amplitudes.size() != dim_k * dim_h)
    throw InvalidInput("BipartiteVector: amplitude length != dimK*dimH");
  for (std::size_t i = 0; i < dim_k; ++i)
    for (std::size_t j = 0; j < dim_h; ++j)
      y(i, j) = amplitudes[i * dim_h + j];
  return y;
}

BipartiteVector BipartiteVector::from_matrix(const CMatrix &y) {
  BipartiteVector v;
  v.dim_k = y.rows();
  v.dim_h = y.cols();
  v.amplitudes.resize(y.rows() * y.cols());
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j)
      v.amplitudes[i * y.cols() + j] = y(i, j);
  return v;
}

} // namespace posmap
