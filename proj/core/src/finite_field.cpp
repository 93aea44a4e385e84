#include "monodyn/finite_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "monodyn/errors.hpp"

namespace monodyn::ff {

namespace {

// Dense polynomials over F_p, constant term first, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 inverse_mod(u64 a, u64 p) { return nt::mod_pow(a, p - 2, p); }

Poly poly_mod(Poly a, const Poly& g, u64 p) {
  trim(a);
  const std::size_t dg = g.size() - 1;
  const u64 lead_inv = inverse_mod(g.back(), p);
  while (a.size() > dg) {
    const u64 c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      a[shift + i] = (a[shift + i] + (p - c) * g[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), g, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& g, u64 p) {
  Poly result = poly_mod(Poly{1}, g, p);
  base = poly_mod(std::move(base), g, p);
  while (e != 0) {
    if (e & 1U) result = poly_mulmod(result, base, g, p);
    base = poly_mulmod(base, base, g, p);
    e >>= 1U;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod g by k successive p-th powers.
Poly frobenius_power(unsigned k, const Poly& g, u64 p) {
  Poly h = poly_mod(Poly{0, 1}, g, p);
  for (unsigned i = 0; i < k; ++i) h = poly_powmod(h, p, g, p);
  return h;
}

Poly subtract_x(Poly h, u64 p) {
  if (h.size() < 2) h.resize(2, 0);
  h[1] = (h[1] + p - 1) % p;
  trim(h);
  return h;
}

}  // namespace

bool is_irreducible(std::span<const Residue> monic, u64 p) {
  if (monic.size() < 2 || monic.back() != 1) {
    throw std::domain_error("is_irreducible: expected a monic polynomial of degree >= 1");
  }
  const auto s = static_cast<unsigned>(monic.size() - 1);
  const Poly g(monic.begin(), monic.end());
  const Poly x = poly_mod(Poly{0, 1}, g, p);
  if (frobenius_power(s, g, p) != x) return false;
  for (const auto& [r, e] : nt::factorize(s).factors) {
    (void)e;
    const Poly h = subtract_x(frobenius_power(s / static_cast<unsigned>(r), g, p), p);
    if (poly_gcd(g, h, p).size() != 1) return false;
  }
  return true;
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + size_, [](Residue r) { return r == 0; });
}

FieldSpec make_field(u64 p, unsigned s) {
  if (s == 0) throw std::domain_error("make_field: extension degree must be positive");
  if (!nt::is_prime(p)) {
    throw std::domain_error("make_field: characteristic " + std::to_string(p) +
                            " is not prime");
  }
  const auto q = nt::checked_pow(p, s);
  if (!q || *q > kMaxFieldSize) {
    throw ResourceLimitError("make_field: " + std::to_string(p) + "^" + std::to_string(s) +
                             " exceeds the field-size cap 2^22");
  }
  FieldSpec spec;
  spec.p_ = p;
  spec.s_ = s;
  spec.q_ = *q;
  spec.qm1_ = nt::factorize(*q - 1 == 0 ? 1 : *q - 1);
  if (s > 1) {
    std::vector<Residue> candidate(s + 1, 0);
    candidate[s] = 1;
    bool found = false;
    for (u64 idx = 0; idx < *q && !found; ++idx) {
      u64 rest = idx;
      for (unsigned i = 0; i < s; ++i) {
        candidate[i] = static_cast<Residue>(rest % p);
        rest /= p;
      }
      found = candidate[0] != 0 && is_irreducible(candidate, p);
    }
    if (!found) throw InvariantViolation("make_field: no irreducible polynomial found");
    spec.modulus_ = std::move(candidate);
  }
  return spec;
}

FieldSpec make_field_of_order(u64 q) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw std::domain_error("make_field_of_order: " + std::to_string(q) +
                                   " is not a prime power");
  if (q > kMaxFieldSize) {
    throw ResourceLimitError("make_field_of_order: " + std::to_string(q) +
                             " exceeds the field-size cap 2^22");
  }
  return make_field(pp->prime, pp->exponent);
}

FieldElement FieldSpec::zero() const {
  FieldElement e;
  e.size_ = s_;
  return e;
}

FieldElement FieldSpec::one() const {
  FieldElement e = zero();
  e.c_[0] = 1;
  return e;
}

FieldElement FieldSpec::element(std::span<const Residue> coeffs) const {
  if (coeffs.size() != s_) {
    throw std::domain_error("FieldSpec::element: expected " + std::to_string(s_) +
                            " coefficients, got " + std::to_string(coeffs.size()));
  }
  FieldElement e = zero();
  for (unsigned i = 0; i < s_; ++i) e.c_[i] = static_cast<Residue>(coeffs[i] % p_);
  return e;
}

FieldElement FieldSpec::generator_t() const {
  if (s_ < 2) throw std::domain_error("FieldSpec::generator_t: prime field has no t");
  FieldElement e = zero();
  e.c_[1] = 1;
  return e;
}

FieldElement FieldSpec::add(const FieldElement& x, const FieldElement& y) const {
  FieldElement r = zero();
  for (unsigned i = 0; i < s_; ++i) r.c_[i] = static_cast<Residue>((x.c_[i] + y.c_[i]) % p_);
  return r;
}

FieldElement FieldSpec::mul(const FieldElement& x, const FieldElement& y) const {
  FieldElement r = zero();
  if (s_ == 1) {
    r.c_[0] = static_cast<Residue>(u64{x.c_[0]} * y.c_[0] % p_);
    return r;
  }
  // p <= 2^11 whenever s >= 2, so a full row of products fits in 64 bits.
  std::array<u64, 2 * kMaxDegree - 1> prod{};
  for (unsigned i = 0; i < s_; ++i) {
    if (x.c_[i] == 0) continue;
    for (unsigned j = 0; j < s_; ++j) prod[i + j] += u64{x.c_[i]} * y.c_[j];
  }
  for (unsigned k = 0; k < 2 * s_ - 1; ++k) prod[k] %= p_;
  // Reduce from the top using the monic modulus: t^s = -sum modulus[i] t^i.
  for (unsigned k = 2 * s_ - 2; k >= s_; --k) {
    const u64 c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    const unsigned shift = k - s_;
    for (unsigned i = 0; i < s_; ++i) {
      prod[shift + i] = (prod[shift + i] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  for (unsigned i = 0; i < s_; ++i) r.c_[i] = static_cast<Residue>(prod[i]);
  return r;
}

FieldElement FieldSpec::pow(const FieldElement& x, u64 k) const {
  FieldElement result = one();
  FieldElement base = x;
  while (k != 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k != 0) base = mul(base, base);
  }
  return result;
}

u64 FieldSpec::index_of(const FieldElement& x) const {
  u64 idx = 0;
  for (unsigned i = s_; i-- > 0;) idx = idx * p_ + x.c_[i];
  return idx;
}

FieldElement FieldSpec::element_at(u64 index) const {
  if (index >= q_) {
    throw std::out_of_range("FieldSpec::element_at: index " + std::to_string(index) +
                            " outside [0, " + std::to_string(q_) + ")");
  }
  FieldElement e = zero();
  for (unsigned i = 0; i < s_; ++i) {
    e.c_[i] = static_cast<Residue>(index % p_);
    index /= p_;
  }
  return e;
}

u64 FieldSpec::element_order(const FieldElement& x) const {
  if (x.is_zero()) throw std::domain_error("element_order: zero has no multiplicative order");
  const FieldElement unit = one();
  u64 order = q_ - 1;
  for (const auto& [p, e] : qm1_.factors) {
    for (unsigned k = 0; k < e; ++k) {
      if (pow(x, order / p) != unit) break;
      order /= p;
    }
  }
  return order;
}

}  // namespace monodyn::ff
