#pragma once

#include <cstdint>
#include <vector>

namespace cohere {

/// GF(q) for q in {2,3,4,5,7,8,9}, by lookup tables. Element codes are the
/// polynomial coefficients read little-endian in base p, so 0 is zero, 1 is
/// one and p is the adjoined root t. Irreducibles: t^2+t+1 (q=4),
/// t^3+t+1 (q=8), t^2+1 (q=9).
class FiniteField
{
public:
  using Element = std::uint8_t;

  explicit FiniteField(unsigned q);

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  /// a must be nonzero.
  Element inv(Element a) const;
  /// x -> x^p.
  Element frobenius(Element a) const { return frob_[a]; }
  /// A generator of the multiplicative group, the least such code.
  Element primitive() const { return primitive_; }

private:
  unsigned q_, p_, e_;
  std::vector<Element> add_, mul_, neg_, inv_, frob_;
  Element primitive_ = 1;
};

bool is_supported_field(unsigned q);

using Vector = std::vector<FiniteField::Element>;

/// All nonzero vectors of GF(q)^d in lexicographic order of codes.
std::vector<Vector> nonzero_vectors(unsigned d, FiniteField const &field);

/// Representatives of the 1-dimensional subspaces: first nonzero coordinate
/// is 1, lexicographic order.
std::vector<Vector> projective_points(unsigned d, FiniteField const &field);
std::vector<Vector> projective_points(unsigned d, unsigned q);

/// Scale v so its first nonzero coordinate is 1.
Vector normalize(Vector v, FiniteField const &field);

} // namespace cohere
