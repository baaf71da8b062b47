#include "clifford.hpp"

#include <stdexcept>

namespace ddstc {

SignedBasisElement basis_mul(BasisElement lhs, BasisElement rhs) {
  int i1 = lhs.clifford & 1, j1 = (lhs.clifford >> 1) & 1;
  int i2 = rhs.clifford & 1, j2 = (rhs.clifford >> 1) & 1;
  int sign = 1;
  // Reorder gamma2^j1 past gamma1^i2, then contract squares to -1.
  if (j1 & i2) sign = -sign;
  if (i1 & i2) sign = -sign;
  if (j1 & j2) sign = -sign;
  BasisElement out;
  out.clifford = static_cast<std::uint8_t>((i1 ^ i2) | ((j1 ^ j2) << 1));
  out.deltas = lhs.deltas ^ rhs.deltas;
  return {sign, out};
}

AlgebraElement::AlgebraElement(int a) : a_(a) {
  if (a < 0 || a > 20) throw std::invalid_argument("algebra parameter out of range");
  coeff_.assign(std::size_t{4} << a, 0.0);
}

AlgebraElement AlgebraElement::basis(int a, BasisElement b) {
  AlgebraElement x(a);
  x.set_coeff(b, 1.0);
  return x;
}

AlgebraElement AlgebraElement::one(int a) { return basis(a, BasisElement{}); }

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  if (a_ != rhs.a_) throw std::invalid_argument("algebra dimension mismatch");
  AlgebraElement out(a_);
  for (int i = 0; i < dim(); ++i) out.coeff_[i] = coeff_[i] + rhs.coeff_[i];
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
  if (a_ != rhs.a_) throw std::invalid_argument("algebra dimension mismatch");
  AlgebraElement out(a_);
  for (int i = 0; i < dim(); ++i) out.coeff_[i] = coeff_[i] - rhs.coeff_[i];
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
  if (a_ != rhs.a_) throw std::invalid_argument("algebra dimension mismatch");
  AlgebraElement out(a_);
  std::uint32_t dmask = (1u << a_) - 1;
  for (int i = 0; i < dim(); ++i) {
    if (coeff_[i] == 0.0) continue;
    BasisElement bi{static_cast<std::uint8_t>(i >> a_),
                    static_cast<std::uint32_t>(i) & dmask};
    for (int j = 0; j < dim(); ++j) {
      if (rhs.coeff_[j] == 0.0) continue;
      BasisElement bj{static_cast<std::uint8_t>(j >> a_),
                      static_cast<std::uint32_t>(j) & dmask};
      auto [sign, b] = basis_mul(bi, bj);
      out.coeff_[(static_cast<int>(b.clifford) << a_) |
                 static_cast<int>(b.deltas)] += sign * coeff_[i] * rhs.coeff_[j];
    }
  }
  return out;
}

AlgebraElement AlgebraElement::operator*(double s) const {
  AlgebraElement out(a_);
  for (int i = 0; i < dim(); ++i) out.coeff_[i] = coeff_[i] * s;
  return out;
}

AlgebraElement conj_automorphism(const AlgebraElement& x) {
  AlgebraElement out(x.a());
  for (int i = 0; i < x.dim(); ++i) {
    bool has_gamma1 = (i >> x.a()) & 1;
    out.set_coeff_at(i, has_gamma1 ? -x.coeff_at(i) : x.coeff_at(i));
  }
  return out;
}

BasisElement ComplexBasis::element(int j) const {
  int half = 1 << a;
  if (j < 0 || j >= 2 * half) throw std::out_of_range("complex basis index");
  if (j < half) return {0, static_cast<std::uint32_t>(j)};
  return {2, static_cast<std::uint32_t>(j - half)};
}

Eigen::VectorXcd complex_coords(const AlgebraElement& x) {
  int half = 1 << x.a();
  Eigen::VectorXcd z(2 * half);
  for (int d = 0; d < half; ++d) {
    z(d) = {x.coeff_at(d), x.coeff_at(half + d)};
    z(half + d) = {x.coeff_at(2 * half + d), -x.coeff_at(3 * half + d)};
  }
  return z;
}

AlgebraElement from_complex_coords(int a, const Eigen::VectorXcd& z) {
  int half = 1 << a;
  if (z.size() != 2 * half) throw std::invalid_argument("coordinate length mismatch");
  AlgebraElement x(a);
  for (int d = 0; d < half; ++d) {
    x.set_coeff_at(d, z(d).real());
    x.set_coeff_at(half + d, z(d).imag());
    x.set_coeff_at(2 * half + d, z(half + d).real());
    x.set_coeff_at(3 * half + d, -z(half + d).imag());
  }
  return x;
}

Eigen::MatrixXcd left_regular_rep(const AlgebraElement& x,
                                  const ComplexBasis& basis) {
  if (x.a() != basis.a) throw std::invalid_argument("algebra dimension mismatch");
  int n = basis.size();
  Eigen::MatrixXcd rep(n, n);
  for (int j = 0; j < n; ++j) {
    AlgebraElement col = x * AlgebraElement::basis(basis.a, basis.element(j));
    rep.col(j) = complex_coords(col);
  }
  return rep;
}

}  // namespace ddstc
