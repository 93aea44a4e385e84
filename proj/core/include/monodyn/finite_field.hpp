#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "monodyn/numtheory.hpp"

namespace monodyn::ff {

using u64 = std::uint64_t;
using Residue = std::uint32_t;

/// Fields larger than this are refused (graph-engine scale).
inline constexpr u64 kMaxFieldSize = u64{1} << 22;
/// Largest extension degree that fits under kMaxFieldSize (p = 2).
inline constexpr unsigned kMaxDegree = 22;

/// An element of F_{p^s} as s coefficients in [0, p), constant term first.
/// Coefficients past the degree are kept at zero so that equality is
/// plain coefficient equality.
class FieldElement {
 public:
  FieldElement() = default;

  [[nodiscard]] unsigned degree_bound() const { return size_; }
  [[nodiscard]] std::span<const Residue> coeffs() const { return {c_.data(), size_}; }
  [[nodiscard]] Residue operator[](unsigned i) const { return c_[i]; }
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.size_ == b.size_ && a.c_ == b.c_;
  }

 private:
  friend class FieldSpec;
  std::array<Residue, kMaxDegree> c_{};
  unsigned size_ = 0;
};

/// F_{p^s} with a fixed defining polynomial. Immutable after construction.
class FieldSpec {
 public:
  [[nodiscard]] u64 p() const { return p_; }
  [[nodiscard]] unsigned s() const { return s_; }
  [[nodiscard]] u64 q() const { return q_; }

  /// Monic modulus, constant term first, length s + 1. Empty when s == 1.
  [[nodiscard]] const std::vector<Residue>& modulus() const { return modulus_; }

  /// Factorization of q - 1, cached for element orders.
  [[nodiscard]] const nt::Factorization& group_order_factors() const { return qm1_; }

  [[nodiscard]] FieldElement zero() const;
  [[nodiscard]] FieldElement one() const;
  /// Element with the given coefficients (constant term first); each
  /// coefficient is reduced mod p. Throws std::domain_error on a length mismatch.
  [[nodiscard]] FieldElement element(std::span<const Residue> coeffs) const;
  /// The generator t of the polynomial basis (t = 0 and s == 1 excluded).
  [[nodiscard]] FieldElement generator_t() const;

  [[nodiscard]] FieldElement add(const FieldElement& x, const FieldElement& y) const;
  [[nodiscard]] FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  [[nodiscard]] FieldElement pow(const FieldElement& x, u64 k) const;

  /// Base-p digit encoding: sum coeffs[i] * p^i. Index 0 is zero, 1 is one.
  [[nodiscard]] u64 index_of(const FieldElement& x) const;
  /// Inverse of index_of. Throws std::out_of_range for index >= q.
  [[nodiscard]] FieldElement element_at(u64 index) const;

  /// Least k >= 1 with x^k == 1. Throws std::domain_error for x == 0.
  [[nodiscard]] u64 element_order(const FieldElement& x) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.s_ == b.s_ && a.modulus_ == b.modulus_;
  }

 private:
  friend FieldSpec make_field(u64 p, unsigned s);
  FieldSpec() = default;

  u64 p_ = 0;
  unsigned s_ = 0;
  u64 q_ = 0;
  std::vector<Residue> modulus_;
  nt::Factorization qm1_;
};

/// Builds F_{p^s}. For s > 1 the modulus is the monic irreducible of degree s
/// whose lower coefficients have the smallest base-p index (so x^3 + x + 1
/// for F_8, x^2 + 1 for F_9).
/// Throws std::domain_error if p is not prime or s == 0, and
/// ResourceLimitError when p^s exceeds kMaxFieldSize.
[[nodiscard]] FieldSpec make_field(u64 p, unsigned s);

/// Builds the field of order q (a prime power). Throws std::domain_error
/// when q is not a prime power.
[[nodiscard]] FieldSpec make_field_of_order(u64 q);

/// Irreducibility of a monic polynomial over F_p (constant term first).
/// Uses x^(p^s) == x mod g and gcd(x^(p^(s/r)) - x, g) == 1 for primes r | s.
[[nodiscard]] bool is_irreducible(std::span<const Residue> monic, u64 p);

}  // namespace monodyn::ff
