#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

/// q = p^e with p prime, or nullopt.
struct PrimePower {
  unsigned prime;
  unsigned exponent;
};
std::optional<PrimePower> factor_prime_power(unsigned q);

/// GF(q) for small q via full addition and multiplication tables. Elements
/// are 0..q-1; 0 and 1 are the field's zero and one. For q = p^e an element
/// encodes the coefficients of a polynomial in base p, reduced modulo the
/// first monic irreducible of degree e found in lexicographic order.
class FiniteField {
 public:
  /// Throws ParameterError unless q is a prime power in [2, max_order].
  explicit FiniteField(unsigned q, unsigned max_order = 256);

  unsigned order() const noexcept { return q_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const { return inv_[a]; }

 private:
  unsigned q_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

}  // namespace ramsey
