#include "stci/field.hpp"

#include <sstream>
#include <stdexcept>

namespace stci {

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients, constant term first

// Degree of a coefficient vector, -1 for zero.
int poly_degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f by a monic divisor g over F_p.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  int dg = poly_degree(g);
  for (int i = poly_degree(f); i >= dg; --i) {
    std::uint64_t c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      std::uint64_t sub = (c * g[j]) % p;
      std::size_t idx = i - dg + j;
      f[idx] = (f[idx] + p - sub) % p;
    }
  }
  f.resize(dg > 0 ? dg : 1, 0);
  return f;
}

bool poly_is_zero(const Poly& f) { return poly_degree(f) < 0; }

// Monic polynomial of given degree from a base-p index (low digits = low
// coefficients).
Poly monic_from_index(std::uint64_t n, unsigned degree, std::uint64_t p) {
  Poly f(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    f[i] = n % p;
    n /= p;
  }
  f[degree] = 1;
  return f;
}

bool is_irreducible(const Poly& f, unsigned degree, std::uint64_t p) {
  for (unsigned d = 1; d <= degree / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly g = monic_from_index(n, d, p);
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldHandle::FieldHandle(std::uint64_t p, unsigned k,
                         std::vector<std::uint64_t> mod)
    : p_(p), k_(k), modulus_(std::move(mod)) {}

FieldHandle FieldHandle::build(std::uint64_t p, unsigned k) {
  if (!is_prime_u64(p)) throw std::invalid_argument("characteristic not prime");
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (k == 1) return FieldHandle(p, 1, {});
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly f = monic_from_index(n, k, p);
    if (is_irreducible(f, k, p)) {
      f.pop_back();  // store c_0..c_{k-1}; the leading 1 is implicit
      return FieldHandle(p, k, std::move(f));
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

Int FieldHandle::order() const {
  Int q = 1;
  for (unsigned i = 0; i < k_; ++i) q *= p_;
  return q;
}

FieldHandle::Element FieldHandle::zero() const { return Element(k_, 0); }

FieldHandle::Element FieldHandle::one() const {
  Element e(k_, 0);
  e[0] = 1;
  return e;
}

FieldHandle::Element FieldHandle::from_integer(const Int& v) const {
  Int r = v % Int(p_);
  if (r < 0) r += p_;
  Element e(k_, 0);
  e[0] = r.convert_to<std::uint64_t>();
  return e;
}

FieldHandle::Element FieldHandle::element_at(std::uint64_t n) const {
  Element e(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    e[i] = n % p_;
    n /= p_;
  }
  return e;
}

std::uint64_t FieldHandle::element_count_u64() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k_; ++i) q *= p_;
  return q;
}

std::vector<FieldHandle::Element> FieldHandle::elements() const {
  std::uint64_t q = element_count_u64();
  std::vector<Element> out;
  out.reserve(q);
  for (std::uint64_t n = 0; n < q; ++n) out.push_back(element_at(n));
  return out;
}

FieldHandle::Element FieldHandle::add(const Element& a, const Element& b) const {
  Element r(k_);
  for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

FieldHandle::Element FieldHandle::sub(const Element& a, const Element& b) const {
  Element r(k_);
  for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
  return r;
}

FieldHandle::Element FieldHandle::neg(const Element& a) const {
  return sub(zero(), a);
}

FieldHandle::Element FieldHandle::mul(const Element& a, const Element& b) const {
  if (k_ == 1) return {(a[0] * b[0]) % p_};
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  // Reduce by the monic modulus: t^k = -(c_0 + ... + c_{k-1} t^{k-1}).
  for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(k_); --i) {
    std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k_; ++j) {
      std::uint64_t sub = (c * modulus_[j]) % p_;
      prod[i - k_ + j] = (prod[i - k_ + j] + p_ - sub) % p_;
    }
  }
  prod.resize(k_);
  return prod;
}

FieldHandle::Element FieldHandle::pow(const Element& a, const Int& e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Element result = one();
  Element base = a;
  Int n = e;
  while (n > 0) {
    if ((n & 1) != 0) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

FieldHandle::Element FieldHandle::inv(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  return pow(a, order() - 2);
}

bool FieldHandle::is_zero(const Element& a) const {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

bool FieldHandle::in_prime_subfield(const Element& a) const {
  if (k_ == 1) return true;
  return pow(a, Int(p_)) == a;
}

std::uint64_t FieldHandle::prime_value(const Element& a) const {
  for (unsigned i = 1; i < k_; ++i)
    if (a[i] != 0)
      throw std::domain_error("element is not in the prime subfield");
  return a[0];
}

std::string FieldHandle::describe() const {
  std::ostringstream out;
  out << "GF(" << p_;
  if (k_ > 1) out << "^" << k_;
  out << ")";
  if (k_ > 1) {
    out << ", modulus t^" << k_;
    for (int i = static_cast<int>(k_) - 1; i >= 0; --i) {
      if (modulus_[i] == 0) continue;
      out << "+";
      if (modulus_[i] != 1 || i == 0) out << modulus_[i];
      if (i > 0) {
        if (modulus_[i] != 1) out << "*";
        out << "t";
        if (i > 1) out << "^" << i;
      }
    }
  }
  return out.str();
}

std::string FieldHandle::render(const Element& a) const {
  if (k_ == 1) return std::to_string(a[0]);
  std::ostringstream out;
  out << "[";
  for (unsigned i = 0; i < k_; ++i) {
    if (i) out << ",";
    out << a[i];
  }
  out << "]";
  return out.str();
}

FieldHandle::Element eval(const SparsePolynomial& poly,
                          const std::vector<FieldHandle::Element>& point,
                          const FieldHandle& field) {
  if (point.size() != poly.vars().count())
    throw std::invalid_argument("point dimension mismatch");
  FieldHandle::Element acc = field.zero();
  for (const auto& [e, c] : poly.terms()) {
    FieldHandle::Element term = field.from_integer(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;  // 0^0 = 1
      term = field.mul(term, field.pow(point[i], e[i]));
    }
    acc = field.add(acc, term);
  }
  return acc;
}

}  // namespace stci
