#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace ddstc {

// Basis monomial gamma1^i * gamma2^j * prod_k delta_k, in canonical order.
// clifford bit 0 is the gamma1 exponent, bit 1 the gamma2 exponent; deltas
// bit k-1 marks the presence of delta_k.  gamma1, gamma2 anticommute and
// square to -1; the deltas are central and square to +1.
struct BasisElement {
  std::uint8_t clifford = 0;
  std::uint32_t deltas = 0;
};

struct SignedBasisElement {
  int sign = 1;
  BasisElement elem;
};

SignedBasisElement basis_mul(BasisElement lhs, BasisElement rhs);

// Element of the algebra generated by gamma1, gamma2 and a central deltas,
// stored as dense real coefficients over the 4 * 2^a monomial basis.
class AlgebraElement {
 public:
  explicit AlgebraElement(int a);
  static AlgebraElement basis(int a, BasisElement b);
  static AlgebraElement one(int a);

  int a() const { return a_; }
  int dim() const { return static_cast<int>(coeff_.size()); }

  double coeff(BasisElement b) const { return coeff_[index(b)]; }
  void set_coeff(BasisElement b, double v) { coeff_[index(b)] = v; }
  double coeff_at(int idx) const { return coeff_[idx]; }
  void set_coeff_at(int idx, double v) { coeff_[idx] = v; }

  AlgebraElement operator+(const AlgebraElement& rhs) const;
  AlgebraElement operator-(const AlgebraElement& rhs) const;
  AlgebraElement operator*(const AlgebraElement& rhs) const;
  AlgebraElement operator*(double s) const;

 private:
  int index(BasisElement b) const {
    return (static_cast<int>(b.clifford) << a_) | static_cast<int>(b.deltas);
  }
  int a_;
  std::vector<double> coeff_;
};

// Algebra automorphism fixing gamma2 and the deltas, sending gamma1 to
// -gamma1.  Realises complex conjugation through the complex basis below.
AlgebraElement conj_automorphism(const AlgebraElement& x);

// Right C-module basis {delta monomials} followed by {gamma2 * delta
// monomials}; scalars act on the right through gamma1 = i.
struct ComplexBasis {
  int a = 0;
  int size() const { return 2 << a; }
  BasisElement element(int j) const;
};

Eigen::VectorXcd complex_coords(const AlgebraElement& x);
AlgebraElement from_complex_coords(int a, const Eigen::VectorXcd& z);

// Matrix of left multiplication by x in the complex basis.
Eigen::MatrixXcd left_regular_rep(const AlgebraElement& x,
                                  const ComplexBasis& basis);

}  // namespace ddstc
