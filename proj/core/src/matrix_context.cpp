#include "sea/matrix_context.hpp"

#include <algorithm>
#include <cmath>

#include "sea/eigen.hpp"

namespace sea {

HermitianMatrix MatrixContext::positive_part(const HermitianMatrix& v) const {
  return eigh(v, tol_).apply([](double x) { return std::max(x, 0.0); });
}

std::vector<double> MatrixContext::spectrum(const HermitianMatrix& v) const {
  const auto d = eigh(v, tol_);
  std::vector<double> out;
  out.reserve(d.clusters.size());
  for (const auto& c : d.clusters) out.push_back(c.value);
  return out;
}

HermitianMatrix MatrixContext::product(const HermitianMatrix& p, const HermitianMatrix& q) const {
  return HermitianMatrix(p.matrix() * q.matrix());
}

bool MatrixContext::commute(const HermitianMatrix& v, const HermitianMatrix& w) const {
  return commutator_norm(v.matrix(), w.matrix()) <= tol_.comm;
}

double MatrixContext::distance(const HermitianMatrix& v, const HermitianMatrix& w) const {
  return sea::distance(v, w) / static_cast<double>(std::max<std::size_t>(1, v.dim()));
}

std::size_t MatrixContext::rank(const HermitianMatrix& p) const {
  return static_cast<std::size_t>(std::llround(std::max(0.0, p.trace())));
}

}  // namespace sea
