#include "cohere/finite_field.hpp"

#include <algorithm>

#include "cohere/error.hpp"

namespace cohere {

namespace {

struct Spec
{
  unsigned q, p, e;
  // Low coefficients of the monic irreducible t^e = -(c_0 + c_1 t + ...).
  std::vector<unsigned> modulus;
};

Spec spec_for(unsigned q)
{
  switch (q) {
  case 2: return {2, 2, 1, {}};
  case 3: return {3, 3, 1, {}};
  case 5: return {5, 5, 1, {}};
  case 7: return {7, 7, 1, {}};
  case 4: return {4, 2, 2, {1, 1}};    // t^2 + t + 1
  case 8: return {8, 2, 3, {1, 1, 0}}; // t^3 + t + 1
  case 9: return {9, 3, 2, {1, 0}};    // t^2 + 1
  }
  throw Error("unsupported field order " + std::to_string(q) + " (use 2,3,4,5,7,8,9)");
}

std::vector<unsigned> digits(unsigned code, unsigned p, unsigned e)
{
  std::vector<unsigned> out(e);
  for (unsigned i = 0; i < e; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

unsigned undigits(std::vector<unsigned> const &d, unsigned p)
{
  unsigned code = 0;
  for (unsigned i = static_cast<unsigned>(d.size()); i-- > 0;)
    code = code * p + d[i];
  return code;
}

} // namespace

bool is_supported_field(unsigned q)
{
  return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9;
}

FiniteField::FiniteField(unsigned q)
{
  Spec s = spec_for(q);
  q_ = s.q;
  p_ = s.p;
  e_ = s.e;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  frob_.resize(q);

  for (unsigned a = 0; a < q; ++a) {
    auto da = digits(a, p_, e_);
    for (unsigned b = 0; b < q; ++b) {
      auto db = digits(b, p_, e_);
      std::vector<unsigned> sum(e_);
      for (unsigned i = 0; i < e_; ++i)
        sum[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<Element>(undigits(sum, p_));

      // Schoolbook product, then reduce degrees >= e using the modulus.
      std::vector<unsigned> prod(2 * e_ - 1, 0);
      for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (unsigned k = 2 * e_ - 1; k-- > e_;) {
        unsigned c = prod[k];
        prod[k] = 0;
        for (unsigned i = 0; i < e_; ++i)
          prod[k - e_ + i] = (prod[k - e_ + i] + (p_ - s.modulus[i]) * c) % p_;
      }
      prod.resize(e_);
      mul_[a * q + b] = static_cast<Element>(undigits(prod, p_));
    }
  }

  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0)
        neg_[a] = static_cast<Element>(b);
      if (mul_[a * q + b] == 1)
        inv_[a] = static_cast<Element>(b);
    }
    Element x = 1;
    for (unsigned k = 0; k < p_; ++k)
      x = mul(x, static_cast<Element>(a));
    frob_[a] = x;
  }

  for (unsigned g = 1; g < q; ++g) {
    unsigned ord = 1;
    for (Element x = static_cast<Element>(g); x != 1; x = mul(x, static_cast<Element>(g)))
      ++ord;
    if (ord == q - 1) {
      primitive_ = static_cast<Element>(g);
      break;
    }
  }
}

FiniteField::Element FiniteField::inv(Element a) const
{
  if (a == 0)
    throw Error("inverse of zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

std::vector<Vector> nonzero_vectors(unsigned d, FiniteField const &field)
{
  unsigned const q = field.order();
  std::vector<Vector> out;
  Vector v(d, 0);
  for (;;) {
    // Odometer with the last coordinate fastest gives lexicographic order.
    unsigned i = d;
    while (i > 0) {
      --i;
      if (++v[i] < q)
        break;
      v[i] = 0;
      if (i == 0)
        return out;
    }
    out.push_back(v);
  }
}

Vector normalize(Vector v, FiniteField const &field)
{
  auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
  if (lead == v.end())
    throw Error("cannot normalize the zero vector");
  auto s = field.inv(*lead);
  for (auto &x : v)
    x = field.mul(x, s);
  return v;
}

std::vector<Vector> projective_points(unsigned d, FiniteField const &field)
{
  std::vector<Vector> out;
  for (auto &v : nonzero_vectors(d, field)) {
    auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (*lead == 1)
      out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> projective_points(unsigned d, unsigned q)
{
  if (d < 1)
    throw Error("projective points: dimension must be positive");
  return projective_points(d, FiniteField(q));
}

} // namespace cohere
