#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tarc/bigint.hpp"
#include "tarc/gf.hpp"

namespace tarc::gf {

/// Univariate polynomial over a finite field, coefficients least degree first
/// and always trimmed so that the leading coefficient is nonzero.
class Poly
{
public:
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly x(FieldPtr field);
  static Poly monomial(FieldPtr field, unsigned degree, Elem c = 1);
  /// Polynomial whose coefficients are the base-q digits of `code`.
  static Poly from_code(FieldPtr field, std::uint64_t code);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator%(const Poly& o) const { return divmod(o).second; }
  Poly operator/(const Poly& o) const { return divmod(o).first; }
  Poly scaled(Elem c) const;

  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly monic() const;
  Poly derivative() const;
  Elem eval(Elem at) const;

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Degree first, then coefficients from the constant term upward.
  bool operator<(const Poly& o) const;

  std::string to_string() const;

private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

Poly gcd(Poly a, Poly b);
Poly powmod(const Poly& base, const BigInt& exponent, const Poly& modulus);
Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus);

bool is_squarefree(const Poly& f);
bool is_irreducible(const Poly& f);

/// Monic irreducible factors of a squarefree polynomial, sorted by
/// Poly::operator<. Distinct-degree then equal-degree splitting, with trial
/// polynomials taken in increasing code order so the result is deterministic.
/// Throws std::invalid_argument if f is zero or not squarefree.
std::vector<Poly> factor_squarefree(const Poly& f);

/// Multiplicative order of x modulo an irreducible g with g(0) != 0.
std::uint64_t order_of_x(const Poly& g);

} // namespace tarc::gf
