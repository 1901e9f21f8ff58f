#include "tarc/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tarc/numth.hpp"

namespace tarc::gf {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs))
{
  for (Elem c : coeffs_) {
    if (!field_->contains(c))
      throw std::invalid_argument("Poly: coefficient outside the field");
  }
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::x(FieldPtr field) { return Poly(std::move(field), {0, 1}); }

Poly Poly::monomial(FieldPtr field, unsigned degree, Elem c)
{
  std::vector<Elem> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::from_code(FieldPtr field, std::uint64_t code)
{
  std::vector<Elem> coeffs;
  const std::uint64_t q = field->q();
  while (code) {
    coeffs.push_back(static_cast<Elem>(code % q));
    code /= q;
  }
  return Poly(std::move(field), std::move(coeffs));
}

void Poly::trim()
{
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& o) const
{
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field_->add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const
{
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field_->sub(coeff(i), o.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const
{
  if (is_zero() || o.is_zero())
    return Poly(field_);
  std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
  }
  return Poly(field_, std::move(out));
}

Poly Poly::scaled(Elem c) const
{
  std::vector<Elem> out(coeffs_);
  for (auto& x : out)
    x = field_->mul(x, c);
  return Poly(field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const
{
  if (divisor.is_zero())
    throw std::domain_error("Poly::divmod: division by zero polynomial");
  if (degree() < divisor.degree())
    return {Poly(field_), *this};

  std::vector<Elem> rem(coeffs_);
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<Elem> quot(rem.size() - dd, 0);
  const Elem lead_inv = field_->inv(divisor.lead());
  for (std::size_t k = rem.size(); k-- > dd;) {
    Elem c = rem[k];
    if (c == 0)
      continue;
    c = field_->mul(c, lead_inv);
    quot[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i)
      rem[k - dd + i] = field_->sub(rem[k - dd + i], field_->mul(c, divisor.coeffs_[i]));
  }
  rem.resize(dd);
  return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Poly Poly::monic() const
{
  if (is_zero())
    return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::derivative() const
{
  std::vector<Elem> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(field_->mul(field_->from_int(static_cast<std::int64_t>(i)), coeffs_[i]));
  return Poly(field_, std::move(out));
}

Elem Poly::eval(Elem at) const
{
  Elem acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = field_->add(field_->mul(acc, at), coeffs_[i]);
  return acc;
}

bool Poly::operator<(const Poly& o) const
{
  if (degree() != o.degree())
    return degree() < o.degree();
  return coeffs_ < o.coeffs_;
}

std::string Poly::to_string() const
{
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0)
      continue;
    if (!first)
      os << " + ";
    first = false;
    if (coeffs_[i] != 1 || i == 0)
      os << coeffs_[i];
    if (i >= 1)
      os << "x";
    if (i >= 2)
      os << "^" << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b)
{
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, const BigInt& exponent, const Poly& modulus)
{
  Poly result = Poly::constant(base.field(), 1) % modulus;
  if (exponent == 0)
    return result;
  Poly b = base % modulus;
  const auto bits = boost::multiprecision::msb(exponent);
  for (std::size_t i = bits + 1; i-- > 0;) {
    result = (result * result) % modulus;
    if (boost::multiprecision::bit_test(exponent, static_cast<unsigned>(i)))
      result = (result * b) % modulus;
  }
  return result;
}

Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus)
{
  return powmod(base, BigInt(exponent), modulus);
}

bool is_squarefree(const Poly& f)
{
  if (f.degree() <= 0)
    return true;
  Poly d = f.derivative();
  if (d.is_zero())
    return false;
  return gcd(f, d).degree() == 0;
}

bool is_irreducible(const Poly& f)
{
  const int d = f.degree();
  if (d <= 0)
    return false;
  if (d == 1)
    return true;

  const Poly g = f.monic();
  const auto& field = g.field();
  const Poly x = Poly::x(field);
  const std::uint64_t q = field->q();

  // frob[i] = x^(q^i) mod g
  std::vector<Poly> frob{x % g};
  for (int i = 1; i <= d; ++i)
    frob.push_back(powmod(frob.back(), q, g));
  if (frob[d] != x % g)
    return false;
  for (auto r : numth::prime_divisors(static_cast<std::uint64_t>(d))) {
    if (gcd(g, frob[d / r] - x).degree() != 0)
      return false;
  }
  return true;
}

namespace {

void split_equal_degree(const Poly& g, int d, std::vector<Poly>& out)
{
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const auto& field = g.field();
  const std::uint64_t q = field->q();
  const BigInt qd = big_pow(BigInt(q), static_cast<unsigned>(d));

  // Trial polynomials x, x+1, ..., in code order; degree below deg(g).
  for (std::uint64_t code = q;; ++code) {
    Poly t = Poly::from_code(field, code);
    if (t.degree() >= g.degree())
      throw std::logic_error("factor_squarefree: equal-degree splitting failed");
    Poly s(field);
    if (field->p() == 2) {
      // Absolute trace to GF(2): t + t^2 + ... + t^(2^(m d - 1)), q = 2^m.
      const unsigned steps = field->f() * static_cast<unsigned>(d);
      Poly power = t % g;
      s = power;
      for (unsigned i = 1; i < steps; ++i) {
        power = (power * power) % g;
        s = s + power;
      }
    } else {
      s = powmod(t, (qd - 1) / 2, g) - Poly::constant(field, 1);
    }
    Poly u = gcd(g, s);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      split_equal_degree(u, d, out);
      split_equal_degree((g / u).monic(), d, out);
      return;
    }
  }
}

} // namespace

std::vector<Poly> factor_squarefree(const Poly& f)
{
  if (f.is_zero())
    throw std::invalid_argument("factor_squarefree: zero polynomial");
  if (!is_squarefree(f))
    throw std::invalid_argument("factor_squarefree: polynomial is not squarefree");

  const auto& field = f.field();
  const Poly x = Poly::x(field);
  const std::uint64_t q = field->q();

  std::vector<Poly> factors;
  Poly h = f.monic();
  Poly w = x;
  for (int d = 1; h.degree() >= 2 * d; ++d) {
    w = powmod(w, q, h);
    Poly g = gcd(h, w - x);
    if (g.degree() > 0) {
      split_equal_degree(g, d, factors);
      h = (h / g).monic();
      w = w % h;
    }
  }
  if (h.degree() > 0)
    factors.push_back(h.monic());

  std::sort(factors.begin(), factors.end());
  return factors;
}

std::uint64_t order_of_x(const Poly& g)
{
  if (g.degree() < 1 || g.coeff(0) == 0)
    throw std::invalid_argument("order_of_x: need an irreducible g with g(0) != 0");
  const std::uint64_t n = numth::checked_pow(g.field()->q(), static_cast<unsigned>(g.degree())) - 1;
  const Poly x = Poly::x(g.field());
  const Poly one = Poly::constant(g.field(), 1) % g;
  std::uint64_t ord = n;
  for (auto [r, e] : numth::factorize(n)) {
    while (ord % r == 0 && powmod(x, ord / r, g) == one)
      ord /= r;
  }
  if (powmod(x, ord, g) != one)
    throw std::invalid_argument("order_of_x: g is not irreducible");
  return ord;
}

} // namespace tarc::gf
