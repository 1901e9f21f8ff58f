#include "tarc/gf.hpp"

#include <sstream>
#include <stdexcept>

#include "tarc/numth.hpp"
#include "tarc/poly.hpp"

namespace tarc::gf {

namespace {

constexpr std::uint32_t kTableLimit = 1u << 22;

std::vector<std::uint32_t> find_modulus(std::uint32_t p, unsigned f)
{
  if (f == 1)
    return {0, 1};

  auto prime = Field::make(p, 1);
  const std::uint64_t count = numth::checked_pow(p, f);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Elem> coeffs(f + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < f; ++i) {
      coeffs[i] = static_cast<Elem>(c % p);
      c /= p;
    }
    coeffs[f] = 1;
    if (coeffs[0] == 0)
      continue;
    if (is_irreducible(Poly(prime, coeffs)))
      return {coeffs.begin(), coeffs.end()};
  }
  throw std::logic_error("make_field: no irreducible polynomial found");
}

} // namespace

FieldPtr Field::make(std::uint64_t p, unsigned f)
{
  if (!numth::is_prime(p))
    throw std::invalid_argument("make_field: p = " + std::to_string(p) + " is not prime");
  if (f < 1)
    throw std::invalid_argument("make_field: degree must be positive");
  std::uint64_t q = 0;
  try {
    q = numth::checked_pow(p, f);
  } catch (const std::overflow_error&) {
    q = 0;
  }
  if (q == 0 || q >= (1ULL << 32))
    throw std::invalid_argument("make_field: p^f must be below 2^32");

  auto modulus = find_modulus(static_cast<std::uint32_t>(p), f);
  std::shared_ptr<Field> field(new Field(static_cast<std::uint32_t>(p), f, std::move(modulus)));
  field->build_tables();
  return field;
}

Field::Field(std::uint32_t p, unsigned f, std::vector<std::uint32_t> modulus)
  : p_(p), f_(f), q_(static_cast<std::uint32_t>(numth::checked_pow(p, f))), modulus_(std::move(modulus))
{
  if (q_ > 2)
    qm1_primes_ = numth::prime_divisors(q_ - 1);
}

void Field::build_tables()
{
  Elem g = 1;
  if (q_ > 2) {
    for (g = 2; g < q_; ++g) {
      if (order(g) == q_ - 1)
        break;
    }
    if (g == q_)
      throw std::logic_error("make_field: no primitive element found");
  }
  primitive_ = g;

  if (q_ > kTableLimit)
    return;
  exp_.resize(2 * (q_ - 1));
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    exp_[i + q_ - 1] = x;
    log_[x] = i;
    x = mul_slow(x, g);
  }
}

Elem Field::add(Elem a, Elem b) const
{
  if (f_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2)
    return a ^ b;
  Elem result = 0, scale = 1;
  while (a || b) {
    result += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return result;
}

Elem Field::neg(Elem a) const
{
  if (p_ == 2)
    return a;
  if (f_ == 1)
    return a == 0 ? 0 : p_ - a;
  Elem result = 0, scale = 1;
  while (a) {
    result += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return result;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_slow(Elem a, Elem b) const
{
  if (f_ == 1)
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> prod(2 * f_ - 1, 0);
  for (unsigned i = 0; i < f_; ++i)
    for (unsigned j = 0; j < f_; ++j)
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
  for (unsigned k = 2 * f_ - 2; k >= f_; --k) {
    std::uint64_t c = prod[k];
    if (c == 0)
      continue;
    prod[k] = 0;
    for (unsigned i = 0; i < f_; ++i)
      prod[k - f_ + i] = (prod[k - f_ + i] + (p_ - c) * modulus_[i]) % p_;
  }
  std::vector<std::uint32_t> out(f_);
  for (unsigned i = 0; i < f_; ++i)
    out[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(out);
}

Elem Field::mul(Elem a, Elem b) const
{
  if (a == 0 || b == 0)
    return 0;
  if (!exp_.empty())
    return exp_[log_[a] + log_[b]];
  return mul_slow(a, b);
}

Elem Field::inv(Elem a) const
{
  if (a == 0)
    throw std::domain_error("Field::inv: zero has no inverse");
  if (!exp_.empty())
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const
{
  if (a == 0)
    return e == 0 ? 1 : 0;
  if (!exp_.empty())
    return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
  Elem result = 1;
  while (e) {
    if (e & 1)
      result = mul_slow(result, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return result;
}

Elem Field::from_int(std::int64_t v) const
{
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0)
    r += p_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::digits(Elem a) const
{
  std::vector<std::uint32_t> d(f_);
  for (unsigned i = 0; i < f_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& digits) const
{
  Elem result = 0;
  for (std::size_t i = digits.size(); i-- > 0;)
    result = result * p_ + digits[i] % p_;
  return result;
}

std::uint64_t Field::order(Elem a) const
{
  if (a == 0 || a >= q_)
    throw std::domain_error("Field::order: element must be nonzero");
  std::uint64_t ord = q_ - 1;
  for (auto r : qm1_primes_) {
    while (ord % r == 0 && pow(a, ord / r) == 1)
      ord /= r;
  }
  return ord;
}

std::string Field::describe() const
{
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  if (f_ > 1)
    os << " mod " << Poly(make(p_, 1), {modulus_.begin(), modulus_.end()}).to_string();
  return os.str();
}

FieldElem::FieldElem(FieldPtr field, Elem code) : field_(std::move(field)), code_(code)
{
  if (!field_ || !field_->contains(code_))
    throw std::invalid_argument("FieldElem: code outside the field");
}

Elem FieldElem::check(const FieldElem& o) const
{
  if (!(*field_ == *o.field_))
    throw std::invalid_argument("FieldElem: operands from different fields");
  return o.code_;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.code(); }

std::uint64_t element_order(const FieldElem& x) { return x.field()->order(x.code()); }

GeneratorPair eta_lambda(const FieldPtr& field)
{
  std::uint64_t two_part = 1, odd_part = field->q() - 1;
  while (odd_part % 2 == 0) {
    odd_part /= 2;
    two_part *= 2;
  }
  Elem g = field->primitive_element();
  return {FieldElem(field, field->pow(g, odd_part)), FieldElem(field, field->pow(g, two_part))};
}

} // namespace tarc::gf
