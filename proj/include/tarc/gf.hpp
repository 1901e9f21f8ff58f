#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "tarc/bigint.hpp"

namespace tarc::gf {

/// Integer encoding of a field element: the base-p digits are the
/// coefficients of its polynomial representative, least degree first.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^f) with a fixed monic irreducible modulus. Immutable once built.
class Field
{
public:
  /// The lexicographically least monic irreducible of degree f is used,
  /// ordering candidates by the integer encoding of their non-leading
  /// coefficients. For f = 1 the modulus is x.
  static FieldPtr make(std::uint64_t p, unsigned f);

  std::uint32_t p() const { return p_; }
  unsigned f() const { return f_; }
  std::uint32_t q() const { return q_; }
  bool is_prime_field() const { return f_ == 1; }

  /// Coefficients c_0..c_f of the modulus, c_f = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool contains(Elem a) const { return a < q_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Image of an integer under Z -> GF(p) -> GF(q).
  Elem from_int(std::int64_t v) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& digits) const;

  /// Least k > 0 with a^k = 1. Throws std::domain_error for a = 0.
  std::uint64_t order(Elem a) const;

  /// Least element (in encoding order) of multiplicative order q - 1.
  Elem primitive_element() const { return primitive_; }

  std::string describe() const;

  bool operator==(const Field& other) const
  {
    return p_ == other.p_ && f_ == other.f_ && modulus_ == other.modulus_;
  }

private:
  Field(std::uint32_t p, unsigned f, std::vector<std::uint32_t> modulus);

  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t p_;
  unsigned f_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> qm1_primes_;
  Elem primitive_ = 1;
  // exp_[i] = primitive^i, log_[a] for a != 0; empty for very large fields.
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

inline FieldPtr make_field(std::uint64_t p, unsigned f) { return Field::make(p, f); }

/// Value-type view of an element bound to its field.
class FieldElem
{
public:
  FieldElem(FieldPtr field, Elem code);

  const FieldPtr& field() const { return field_; }
  Elem code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  FieldElem operator+(const FieldElem& o) const { return {field_, field_->add(code_, check(o))}; }
  FieldElem operator-(const FieldElem& o) const { return {field_, field_->sub(code_, check(o))}; }
  FieldElem operator*(const FieldElem& o) const { return {field_, field_->mul(code_, check(o))}; }
  FieldElem operator/(const FieldElem& o) const { return {field_, field_->div(code_, check(o))}; }
  FieldElem operator-() const { return {field_, field_->neg(code_)}; }

  FieldElem inverse() const { return {field_, field_->inv(code_)}; }
  FieldElem pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

  bool operator==(const FieldElem& o) const { return code_ == o.code_ && *field_ == *o.field_; }

private:
  Elem check(const FieldElem& o) const;

  FieldPtr field_;
  Elem code_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

std::uint64_t element_order(const FieldElem& x);

/// F_q^* = <eta> x <lambda>, eta of 2-power order and lambda of odd order.
struct GeneratorPair {
  FieldElem eta;
  FieldElem lambda;
};

/// Built from the least primitive element g: eta = g^(odd part of q-1),
/// lambda = g^(2-part of q-1).
GeneratorPair eta_lambda(const FieldPtr& field);

} // namespace tarc::gf
