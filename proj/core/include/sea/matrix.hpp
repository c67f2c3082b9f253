#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

namespace sea {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);

  std::size_t dim() const { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  Matrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

// Self-adjoint matrix. Construction symmetrizes (A + A*)/2 so the stored
// entries are exactly Hermitian; `checked` first rejects inputs that are not
// Hermitian within a relative tolerance.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const Matrix& m);

  // Throws InputError if ||A - A*||_F > tol * max(1, ||A||_F).
  static HermitianMatrix checked(const Matrix& m, double tol = 1e-9);

  static HermitianMatrix identity(std::size_t n) { return HermitianMatrix(Matrix::identity(n)); }
  static HermitianMatrix zero(std::size_t n) { return HermitianMatrix(Matrix(n)); }
  static HermitianMatrix diagonal(std::span<const double> d) {
    return HermitianMatrix(Matrix::diagonal(d));
  }
  static HermitianMatrix scalar(std::size_t n, double s);

  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  double frobenius_norm() const { return m_.frobenius_norm(); }
  double trace() const { return m_.trace().real(); }

  // outer * this * outer
  HermitianMatrix sandwich(const HermitianMatrix& outer) const;

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(double s);

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator-(HermitianMatrix a) { return a *= -1.0; }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  Matrix m_;
};

// ||a - b||_F
double distance(const HermitianMatrix& a, const HermitianMatrix& b);
// ||ab - ba||_F
double commutator_norm(const Matrix& a, const Matrix& b);
// The Hermitian part (ab + ba)/2.
HermitianMatrix jordan_product(const HermitianMatrix& a, const HermitianMatrix& b);

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b);

// {"dim": n, "re": [[...]], "im": [[...]]}; "im" is optional on input.
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const HermitianMatrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace sea
