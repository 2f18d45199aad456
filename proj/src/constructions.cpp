#include "cohere/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "cohere/error.hpp"
#include "cohere/finite_field.hpp"

namespace cohere {

namespace {

void check_degree(std::size_t n, std::string const &what)
{
  if (n < 1)
    throw Error(what + ": degree must be at least 1");
  if (n > PermGroup::max_degree)
    throw CapExceeded(what + ": degree exceeds the supported maximum", PermGroup::max_degree,
                      std::to_string(n));
}

Permutation from_map(std::size_t n, auto &&f)
{
  std::vector<std::size_t> images(n);
  for (std::size_t x = 0; x < n; ++x)
    images[x] = f(x);
  return Permutation::from_images(images);
}

Permutation cycle_on(std::size_t n, std::size_t first, std::size_t last)
{
  return from_map(n, [&](std::size_t x) {
    if (x < first || x > last)
      return x;
    return x == last ? first : x + 1;
  });
}

Order factorial(std::size_t n)
{
  Order f = 1;
  for (std::size_t k = 2; k <= n; ++k)
    f *= k;
  return f;
}

Order ipow(Order b, unsigned e)
{
  Order r = 1;
  while (e--)
    r *= b;
  return r;
}

unsigned upow(unsigned b, unsigned e)
{
  unsigned r = 1;
  while (e--)
    r *= b;
  return r;
}

std::vector<std::pair<unsigned, unsigned>> factorize(unsigned n)
{
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    unsigned a = 0;
    for (; n % p == 0; n /= p)
      ++a;
    if (a)
      out.emplace_back(p, a);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

bool is_prime(unsigned p)
{
  if (p < 2)
    return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

unsigned multiplicative_order(unsigned d, unsigned m)
{
  if (m == 1)
    return 1;
  unsigned k = 1;
  for (unsigned x = d % m; x != 1; x = x * d % m)
    ++k;
  return k;
}

void verify_order(PermGroup const &g, Order const &expected, std::string const &what)
{
  if (g.order() != expected)
    throw Error(what + ": built group has order " + g.order().str() + ", expected " +
                expected.str());
}

} // namespace

PermGroup build_named(NamedFamily family, std::size_t n)
{
  check_degree(n, "named group");
  std::vector<Permutation> gens;
  switch (family) {
  case NamedFamily::sym:
    if (n >= 2) {
      gens.push_back(cycle_on(n, 0, 1));
      gens.push_back(cycle_on(n, 0, n - 1));
    }
    break;
  case NamedFamily::alt:
    if (n >= 3) {
      gens.push_back(cycle_on(n, 0, 2));
      gens.push_back(n % 2 ? cycle_on(n, 0, n - 1) : cycle_on(n, 1, n - 1));
    }
    break;
  case NamedFamily::cyclic:
    gens.push_back(cycle_on(n, 0, n - 1));
    break;
  case NamedFamily::dihedral:
    gens.push_back(cycle_on(n, 0, n - 1));
    gens.push_back(from_map(n, [&](std::size_t x) { return (n - x) % n; }));
    break;
  }
  return PermGroup(n, std::move(gens));
}

PermGroup direct_sum_action(PermGroup const &g, PermGroup const &h)
{
  std::size_t const a = g.degree(), b = h.degree(), n = a + b;
  check_degree(n, "direct sum");
  std::vector<Permutation> gens;
  for (auto const &x : g.generators())
    gens.push_back(from_map(n, [&](std::size_t p) { return p < a ? x[p] : p; }));
  for (auto const &y : h.generators())
    gens.push_back(from_map(n, [&](std::size_t p) { return p < a ? p : a + y[p - a]; }));
  return PermGroup(n, std::move(gens));
}

PermGroup product_action(PermGroup const &g, PermGroup const &h)
{
  std::size_t const a = g.degree(), b = h.degree(), n = a * b;
  check_degree(n, "product action");
  std::vector<Permutation> gens;
  for (auto const &x : g.generators())
    gens.push_back(from_map(n, [&](std::size_t p) { return (p / a) * a + x[p % a]; }));
  for (auto const &y : h.generators())
    gens.push_back(from_map(n, [&](std::size_t p) { return y[p / a] * a + p % a; }));
  return PermGroup(n, std::move(gens));
}

PermGroup wreath_imprimitive(PermGroup const &g, PermGroup const &h)
{
  std::size_t const a = g.degree(), b = h.degree(), n = a * b;
  check_degree(n, "wreath product");
  std::vector<Permutation> gens;
  // G acts on one block per H-orbit; conjugating by H reaches the rest.
  SetPartition block_orbits = orbit_partition_of_group(h);
  for (auto const &orbit : block_orbits.blocks()) {
    std::size_t y0 = orbit.front();
    for (auto const &x : g.generators())
      gens.push_back(from_map(n, [&](std::size_t p) { return p / a == y0 ? y0 * a + x[p % a] : p; }));
  }
  for (auto const &y : h.generators())
    gens.push_back(from_map(n, [&](std::size_t p) { return y[p / a] * a + p % a; }));
  PermGroup out(n, std::move(gens));
  verify_order(out, ipow(g.order(), static_cast<unsigned>(b)) * h.order(), "wreath product");
  return out;
}

PermGroup centralizer_in_sym(Permutation const &g)
{
  std::size_t const n = g.degree();
  check_degree(n, "centralizer");
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> by_length;
  for (auto &cycle : cycle_decomposition(g).cycles)
    by_length[cycle.size()].push_back(std::move(cycle));

  std::vector<Permutation> gens;
  Order expected = 1;
  for (auto const &[k, orbits] : by_length) {
    expected *= ipow(Order(k), static_cast<unsigned>(orbits.size())) * factorial(orbits.size());
    auto const &first = orbits.front();
    gens.push_back(from_map(n, [&](std::size_t x) {
      auto it = std::find(first.begin(), first.end(), x);
      return it == first.end() ? x : g[x];
    }));
    // Swap consecutive orbits point by point, aligned along g.
    for (std::size_t i = 0; i + 1 < orbits.size(); ++i) {
      std::vector<std::size_t> images(n);
      std::iota(images.begin(), images.end(), 0);
      for (std::size_t s = 0; s < k; ++s) {
        images[orbits[i][s]] = orbits[i + 1][s];
        images[orbits[i + 1][s]] = orbits[i][s];
      }
      gens.push_back(Permutation::from_images(images));
    }
  }
  PermGroup out(n, std::move(gens));
  verify_order(out, expected, "centralizer");
  return out;
}

unsigned frobenius_multiplier(unsigned n, unsigned r)
{
  if (n < 2 || n > PermGroup::max_degree)
    throw Error("frobenius group: n must lie in 2.." + std::to_string(PermGroup::max_degree));
  if (r < 1)
    throw Error("frobenius group: r must be positive");
  auto factors = factorize(n);
  for (auto [p, a] : factors) {
    if ((p - 1) % r != 0)
      throw Error("frobenius group: r = " + std::to_string(r) + " does not divide " +
                  std::to_string(p) + " - 1 for the prime " + std::to_string(p) + " dividing " +
                  std::to_string(n));
  }
  for (unsigned d = 1; d < n; ++d) {
    if (std::gcd(d, n) != 1)
      continue;
    bool ok = std::all_of(factors.begin(), factors.end(), [&](auto f) {
      return multiplicative_order(d, upow(f.first, f.second)) == r;
    });
    if (ok)
      return d;
  }
  throw Error("frobenius group: no multiplier of order " + std::to_string(r) + " mod " +
              std::to_string(n));
}

PermGroup frobenius_cyclic(unsigned n, unsigned r)
{
  unsigned d = frobenius_multiplier(n, r);
  std::vector<Permutation> gens{
    from_map(n, [&](std::size_t x) { return (x + 1) % n; }),
    from_map(n, [&](std::size_t x) { return x * d % n; }),
  };
  PermGroup out(n, std::move(gens));
  verify_order(out, Order(n) * r, "frobenius group");
  return out;
}

namespace {

void check_gamma(unsigned p, unsigned a)
{
  if (!is_prime(p))
    throw Error("gamma group: p = " + std::to_string(p) + " is not prime");
  if (a < 2)
    throw Error("gamma group: a must be at least 2");
  std::uint64_t q = 1;
  for (unsigned k = 0; k < a && q <= PermGroup::max_degree; ++k)
    q *= p;
  if (q > PermGroup::max_degree)
    throw CapExceeded("gamma group: p^a exceeds the supported degree", PermGroup::max_degree,
                      std::to_string(p) + "^" + std::to_string(a));
}

} // namespace

PermGroup gamma_group(unsigned p, unsigned a)
{
  check_gamma(p, a);
  unsigned const q = upow(p, a), r = upow(p, a - 1) + 1;
  std::vector<Permutation> gens{
    from_map(q, [&](std::size_t x) { return (x + 1) % q; }),
    from_map(q, [&](std::size_t x) { return x * r % q; }),
  };
  PermGroup out(q, std::move(gens));
  verify_order(out, Order(q) * p, "gamma group");
  return out;
}

Permutation gamma_element(unsigned p, unsigned a, unsigned j, unsigned i)
{
  check_gamma(p, a);
  unsigned const q = upow(p, a), r = upow(p, a - 1) + 1;
  unsigned rj = 1;
  for (unsigned k = 0; k < j % p; ++k)
    rj = rj * r % q;
  return from_map(q, [&](std::size_t x) { return (rj * x + i) % q; });
}

SetPartition gamma_orbit_structure(unsigned p, unsigned a, unsigned j, unsigned i)
{
  check_gamma(p, a);
  unsigned const q = upow(p, a);
  j %= p;
  i %= q;
  unsigned b = 0;
  if (i == 0)
    b = a;
  else
    for (unsigned v = i; v % p == 0; v /= p)
      ++b;

  std::vector<std::size_t> label(q);
  if (j == 0) {
    // A translation by a generator of <p^b>: orbits are its cosets.
    unsigned m = upow(p, b);
    for (unsigned x = 0; x < q; ++x)
      label[x] = x % m;
  } else if (b >= a - 1) {
    // x -> x + p^(a-1)(jx + i'): fixed points form one coset of <p>, the
    // rest fall into cosets of <p^(a-1)>.
    unsigned const top = upow(p, a - 1), ip = i / top;
    for (unsigned x = 0; x < q; ++x)
      label[x] = (j * x + ip) % p == 0 ? q + x : x % top;
  } else if (p == 2 && a == 2) {
    // x -> i - x with i odd pairs x with i - x.
    for (unsigned x = 0; x < q; ++x)
      label[x] = std::min(x, (i + q - x) % q);
  } else {
    unsigned m = upow(p, b);
    for (unsigned x = 0; x < q; ++x)
      label[x] = x % m;
  }
  return SetPartition::from_labels(label);
}

PermGroup affine_group(unsigned n, std::vector<unsigned> const &multipliers)
{
  check_degree(n, "affine group");
  std::vector<unsigned> mults = multipliers;
  if (mults.empty()) {
    for (unsigned u = 1; u < n; ++u)
      if (std::gcd(u, n) == 1)
        mults.push_back(u);
  }
  std::vector<Permutation> gens{from_map(n, [&](std::size_t x) { return (x + 1) % n; })};
  for (unsigned m : mults) {
    if (std::gcd(m, n) != 1)
      throw Error("affine group: multiplier " + std::to_string(m) + " is not a unit mod " +
                  std::to_string(n));
    gens.push_back(from_map(n, [&](std::size_t x) { return x * m % n; }));
  }
  return PermGroup(n, std::move(gens));
}

namespace {

using Matrix = std::vector<FiniteField::Element>; // d x d, row-major

Matrix identity_matrix(unsigned d)
{
  Matrix m(d * d, 0);
  for (unsigned i = 0; i < d; ++i)
    m[i * d + i] = 1;
  return m;
}

Vector row_times(Vector const &v, Matrix const &m, unsigned d, FiniteField const &f)
{
  Vector out(d, 0);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j)
      out[j] = f.add(out[j], f.mul(v[i], m[i * d + j]));
  return out;
}

Matrix inverse_matrix(Matrix m, unsigned d, FiniteField const &f)
{
  Matrix inv = identity_matrix(d);
  for (unsigned c = 0; c < d; ++c) {
    unsigned piv = c;
    while (piv < d && m[piv * d + c] == 0)
      ++piv;
    if (piv == d)
      throw Error("singular matrix");
    for (unsigned k = 0; k < d; ++k) {
      std::swap(m[c * d + k], m[piv * d + k]);
      std::swap(inv[c * d + k], inv[piv * d + k]);
    }
    auto s = f.inv(m[c * d + c]);
    for (unsigned k = 0; k < d; ++k) {
      m[c * d + k] = f.mul(m[c * d + k], s);
      inv[c * d + k] = f.mul(inv[c * d + k], s);
    }
    for (unsigned r = 0; r < d; ++r) {
      if (r == c || m[r * d + c] == 0)
        continue;
      auto t = m[r * d + c];
      for (unsigned k = 0; k < d; ++k) {
        m[r * d + k] = f.sub(m[r * d + k], f.mul(t, m[c * d + k]));
        inv[r * d + k] = f.sub(inv[r * d + k], f.mul(t, inv[c * d + k]));
      }
    }
  }
  return inv;
}

Matrix transpose(Matrix const &m, unsigned d)
{
  Matrix t(d * d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j)
      t[j * d + i] = m[i * d + j];
  return t;
}

std::size_t vector_key(Vector const &v, unsigned q)
{
  std::size_t k = 0;
  for (auto x : v)
    k = k * q + x;
  return k;
}

std::size_t point_count(unsigned d, unsigned q, LinearAction action)
{
  std::size_t all = upow(q, d) - 1;
  return action == LinearAction::points ? all : all / (q - 1);
}

} // namespace

Order linear_group_order(unsigned d, unsigned q, LinearVariant variant, LinearAction action)
{
  Order gl = 1;
  for (unsigned i = 0; i < d; ++i)
    gl *= Order(upow(q, d)) - upow(q, i);
  bool special = variant == LinearVariant::SL || variant == LinearVariant::SL_frob;
  bool frob = variant == LinearVariant::GL_frob || variant == LinearVariant::SL_frob;
  Order out = special ? Order(gl / (q - 1)) : gl;
  if (action != LinearAction::points)
    out /= special ? std::gcd(d, q - 1) : q - 1;
  if (frob)
    out *= FiniteField(q).degree();
  return out;
}

PermGroup linear_group_action(unsigned d, unsigned q, LinearVariant variant, LinearAction action)
{
  if (d != 2 && d != 3)
    throw Error("linear group: dimension must be 2 or 3");
  if (!is_supported_field(q))
    throw Error("linear group: unsupported field order " + std::to_string(q));
  std::size_t const n = point_count(d, q, action);
  check_degree(n, "linear group");

  FiniteField const f(q);
  std::vector<Vector> pts = action == LinearAction::points ? nonzero_vectors(d, f)
                                                           : projective_points(d, f);
  std::vector<std::size_t> index(upow(q, d), n);
  for (std::size_t k = 0; k < pts.size(); ++k)
    index[vector_key(pts[k], q)] = k;

  auto induced = [&](auto &&map_vector) {
    return from_map(n, [&](std::size_t k) {
      Vector w = map_vector(pts[k]);
      if (action != LinearAction::points)
        w = normalize(std::move(w), f);
      return index[vector_key(w, q)];
    });
  };
  auto matrix_perm = [&](Matrix const &a) {
    Matrix m = action == LinearAction::hyperplanes ? transpose(inverse_matrix(a, d, f), d) : a;
    return induced([&](Vector const &v) { return row_times(v, m, d, f); });
  };

  std::vector<Permutation> gens;
  // Transvections e_1 -> e_1 + lambda e_2 for lambda over a prime-field basis.
  for (unsigned lambda = 1; lambda < q; lambda *= f.characteristic()) {
    Matrix x = identity_matrix(d);
    x[1] = static_cast<FiniteField::Element>(lambda);
    gens.push_back(matrix_perm(x));
  }
  // e_i -> e_(i+1), e_d -> (-1)^(d-1) e_1; determinant 1.
  Matrix w(d * d, 0);
  for (unsigned i = 0; i + 1 < d; ++i)
    w[i * d + i + 1] = 1;
  w[(d - 1) * d] = d % 2 ? 1 : f.neg(1);
  gens.push_back(matrix_perm(w));

  if (variant == LinearVariant::GL || variant == LinearVariant::GL_frob) {
    Matrix diag = identity_matrix(d);
    diag[0] = f.primitive();
    gens.push_back(matrix_perm(diag));
  }
  if (variant == LinearVariant::GL_frob || variant == LinearVariant::SL_frob) {
    gens.push_back(induced([&](Vector v) {
      for (auto &x : v)
        x = f.frobenius(x);
      return v;
    }));
  }

  PermGroup out(n, std::move(gens));
  verify_order(out, linear_group_order(d, q, variant, action), "linear group");
  return out;
}

PermGroup parse_generators(std::string_view text, std::string const &source)
{
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t degree = 0;
  std::vector<Permutation> gens;

  auto fail = [&](std::string const &why) {
    throw ParseError(source + ":" + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);

    if (degree == 0) {
      std::istringstream header(line);
      std::string word;
      long long n = 0;
      if (!(header >> word >> n) || word != "degree" || !(header >> std::ws).eof())
        fail("expected 'degree n' header");
      if (n < 1 || n > static_cast<long long>(PermGroup::max_degree))
        fail("degree " + std::to_string(n) + " out of range 1.." +
             std::to_string(PermGroup::max_degree));
      degree = static_cast<std::size_t>(n);
      continue;
    }
    try {
      gens.push_back(parse_cycles(line, degree));
    } catch (Error const &e) {
      fail(e.what());
    }
  }
  if (degree == 0)
    fail("missing 'degree n' header");
  return PermGroup(degree, std::move(gens));
}

PermGroup load_generators(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open generator file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_generators(buf.str(), path.string());
}

std::string format_generators(PermGroup const &group)
{
  std::string out = "degree " + std::to_string(group.degree()) + "\n";
  for (auto const &g : group.generators())
    out += to_cycle_string(g) + "\n";
  return out;
}

} // namespace cohere
