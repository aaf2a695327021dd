#pragma once

#include "stci/monomial.hpp"
#include "stci/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stci {

/// A prime field F_p or an extension F_{p^k} presented as F_p[t]/(modulus).
/// Elements are coefficient vectors of length k (constant term first).
/// The modulus is the first monic irreducible of degree k in lexicographic
/// coefficient order, verified by trial division, so field construction is
/// deterministic.
class FieldHandle {
 public:
  using Element = std::vector<std::uint64_t>;

  static FieldHandle build(std::uint64_t p, unsigned k);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  Int order() const;
  /// Coefficients c_0..c_{k-1} of the modulus t^k + sum c_i t^i; empty for
  /// prime fields.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Element zero() const;
  Element one() const;
  Element from_integer(const Int& v) const;
  /// n-th element in base-p digit order, 0 <= n < p^k.
  Element element_at(std::uint64_t n) const;
  std::uint64_t element_count_u64() const;
  std::vector<Element> elements() const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;  // throws on zero
  Element pow(const Element& a, const Int& e) const;  // e >= 0; 0^0 = 1

  bool is_zero(const Element& a) const;
  /// Frobenius fixed-point test: a^p == a.
  bool in_prime_subfield(const Element& a) const;
  /// The prime-subfield value of a constant element.
  std::uint64_t prime_value(const Element& a) const;

  std::string describe() const;
  std::string render(const Element& a) const;

 private:
  FieldHandle(std::uint64_t p, unsigned k, std::vector<std::uint64_t> mod);

  std::uint64_t p_;
  unsigned k_;
  std::vector<std::uint64_t> modulus_;
};

bool is_prime_u64(std::uint64_t n);

/// Exact evaluation: coefficients reduced mod p, exponentiation by
/// square-and-multiply (0^0 = 1).
FieldHandle::Element eval(const SparsePolynomial& poly,
                          const std::vector<FieldHandle::Element>& point,
                          const FieldHandle& field);

}  // namespace stci
