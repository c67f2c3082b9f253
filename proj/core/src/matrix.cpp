#include "sea/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sea/error.hpp"

namespace sea {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.n_ != n_) throw InputError("dimension mismatch in matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.n_ != n_) throw InputError("dimension mismatch in matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw InputError("dimension mismatch in matrix product");
  const std::size_t n = a.n_;
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

HermitianMatrix::HermitianMatrix(const Matrix& m) : m_(m.dim()) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    m_(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m_(i, j) = z;
      m_(j, i) = std::conj(z);
    }
  }
}

HermitianMatrix HermitianMatrix::checked(const Matrix& m, double tol) {
  const double skew = (m - m.adjoint()).frobenius_norm();
  if (skew > tol * std::max(1.0, m.frobenius_norm())) {
    throw InputError("matrix is not Hermitian (||A - A*||_F = " + std::to_string(skew) + ")");
  }
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::scalar(std::size_t n, double s) {
  return HermitianMatrix(Matrix::identity(n) * s);
}

HermitianMatrix HermitianMatrix::sandwich(const HermitianMatrix& outer) const {
  return HermitianMatrix(outer.m_ * m_ * outer.m_);
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  m_ += o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  m_ -= o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

double distance(const HermitianMatrix& a, const HermitianMatrix& b) {
  return (a.matrix() - b.matrix()).frobenius_norm();
}

double commutator_norm(const Matrix& a, const Matrix& b) { return (a * b - b * a).frobenius_norm(); }

HermitianMatrix jordan_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix((a.matrix() * b.matrix() + b.matrix() * a.matrix()) * 0.5);
}

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InputError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
  }
}

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json rr = nlohmann::json::array();
    nlohmann::json ri = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return {{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

nlohmann::json to_json(const HermitianMatrix& m) { return to_json(m.matrix()); }

Matrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("dim").get<std::size_t>();
    if (n == 0) throw InputError("matrix dim must be positive");
    Matrix m(n);
    auto read = [&](const nlohmann::json& rows, bool imag) {
      if (!rows.is_array() || rows.size() != n) throw InputError("matrix must have `dim` rows");
      for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) {
          throw InputError("matrix rows must have `dim` entries");
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double v = rows[i][k].get<double>();
          if (imag) {
            m(i, k).imag(v);
          } else {
            m(i, k).real(v);
          }
        }
      }
    };
    read(j.at("re"), false);
    if (j.contains("im")) read(j.at("im"), true);
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed matrix JSON: ") + ex.what());
  }
}

}  // namespace sea
