#include "ramsey/finite_field.hpp"

#include <string>

#include "ramsey/error.hpp"

namespace ramsey {

std::optional<PrimePower> factor_prime_power(unsigned q) {
  if (q < 2) return std::nullopt;
  unsigned p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  unsigned e = 0;
  for (unsigned rest = q; rest > 1; rest /= p) {
    if (rest % p != 0) return std::nullopt;
    ++e;
  }
  return PrimePower{p, e};
}

namespace {

using Poly = std::vector<unsigned>;  // coefficients, lowest degree first

Poly digits(unsigned value, unsigned p, unsigned len) {
  Poly out(len, 0);
  for (unsigned i = 0; i < len; ++i, value /= p) out[i] = value % p;
  return out;
}

unsigned undigits(const Poly& poly, unsigned p) {
  unsigned value = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) value = value * p + *it;
  return value;
}

// a*b mod modulus, modulus monic of degree e; a, b of degree < e.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, unsigned p) {
  const std::size_t e = modulus.size() - 1;
  Poly prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > e;) {
    const unsigned c = prod[d];
    if (!c) continue;
    for (std::size_t i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + p * p - c * modulus[i]) % p;
  }
  prod.resize(e);
  return prod;
}

// Irreducible iff GF(p)[x]/(modulus) has no zero divisors. Brute force over
// all pairs is cheap at the orders supported here.
bool is_irreducible(const Poly& modulus, unsigned p) {
  const std::size_t e = modulus.size() - 1;
  unsigned q = 1;
  for (std::size_t i = 0; i < e; ++i) q *= p;
  for (unsigned a = 1; a < q; ++a) {
    const Poly pa = digits(a, p, static_cast<unsigned>(e));
    for (unsigned b = a; b < q; ++b) {
      const Poly prod = mulmod(pa, digits(b, p, static_cast<unsigned>(e)), modulus, p);
      if (undigits(prod, p) == 0) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(unsigned q, unsigned max_order) : q_(q) {
  const auto pp = factor_prime_power(q);
  if (!pp) throw ParameterError(std::to_string(q) + " is not a prime power");
  if (q > max_order) throw ParameterError("field order " + std::to_string(q) + " exceeds " + std::to_string(max_order));
  const unsigned p = pp->prime;
  const unsigned e = pp->exponent;

  Poly modulus(e + 1, 0);
  modulus[e] = 1;
  if (e > 1) {
    bool found = false;
    for (unsigned low = 0; low < q && !found; ++low) {
      const Poly c = digits(low, p, e);
      for (unsigned i = 0; i < e; ++i) modulus[i] = c[i];
      found = modulus[0] != 0 && is_irreducible(modulus, p);
    }
    if (!found) throw ParameterError("no irreducible polynomial found for q=" + std::to_string(q));
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const Poly pa = digits(a, p, e);
    Poly na(e);
    for (unsigned i = 0; i < e; ++i) na[i] = (p - pa[i]) % p;
    neg_[a] = static_cast<std::uint16_t>(undigits(na, p));
    for (unsigned b = 0; b < q; ++b) {
      const Poly pb = digits(b, p, e);
      Poly sum(e);
      for (unsigned i = 0; i < e; ++i) sum[i] = (pa[i] + pb[i]) % p;
      add_[a * q + b] = static_cast<std::uint16_t>(undigits(sum, p));
      unsigned product;
      if (e == 1) {
        product = (a * b) % p;
      } else {
        product = undigits(mulmod(pa, pb, modulus, p), p);
      }
      mul_[a * q + b] = static_cast<std::uint16_t>(product);
      if (product == 1) inv_[a] = static_cast<std::uint16_t>(b);
    }
  }
}

}  // namespace ramsey
