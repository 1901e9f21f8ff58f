#include "tarc/wreath.hpp"

#include <stdexcept>

namespace tarc::wreath {

WreathElement::WreathElement(std::vector<Perm> components, std::size_t shift)
  : comps_(std::move(components)), shift_(0)
{
  if (comps_.empty())
    throw std::invalid_argument("WreathElement: need at least one coordinate");
  for (const auto& c : comps_)
    if (c.degree() != comps_.front().degree())
      throw std::invalid_argument("WreathElement: components of different degree");
  shift_ = shift % comps_.size();
}

WreathElement WreathElement::identity(std::size_t n, std::size_t deg)
{
  return WreathElement(std::vector<Perm>(n, Perm::identity(deg)), 0);
}

WreathElement WreathElement::tau(std::size_t n, std::size_t deg)
{
  return WreathElement(std::vector<Perm>(n, Perm::identity(deg)), 1);
}

WreathElement WreathElement::constant(const Perm& x, std::size_t n)
{
  return WreathElement(std::vector<Perm>(n, x), 0);
}

WreathElement WreathElement::at(const Perm& x, std::size_t i, std::size_t n)
{
  std::vector<Perm> comps(n, Perm::identity(x.degree()));
  comps.at(i) = x;
  return WreathElement(std::move(comps), 0);
}

WreathElement WreathElement::operator*(const WreathElement& o) const
{
  if (n() != o.n())
    throw std::invalid_argument("WreathElement::operator*: coordinate count mismatch");
  const std::size_t N = n();
  std::vector<Perm> out;
  out.reserve(N);
  for (std::size_t i = 0; i < N; ++i)
    out.push_back(comps_[i] * o.comps_[(i + shift_) % N]);
  return WreathElement(std::move(out), shift_ + o.shift_);
}

WreathElement WreathElement::inverse() const
{
  const std::size_t N = n();
  std::vector<Perm> out(N);
  // (d, s)(e, -s) = 1 needs e_{i+s} = d_i^-1.
  for (std::size_t i = 0; i < N; ++i)
    out[(i + shift_) % N] = comps_[i].inverse();
  return WreathElement(std::move(out), N - shift_);
}

WreathElement WreathElement::pow(long long e) const
{
  WreathElement base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  WreathElement result = identity(n(), block_degree());
  while (k) {
    if (k & 1)
      result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool WreathElement::is_identity() const
{
  if (shift_ != 0)
    return false;
  for (const auto& c : comps_)
    if (!c.is_identity())
      return false;
  return true;
}

Perm WreathElement::flatten() const
{
  const std::size_t N = n(), deg = block_degree();
  std::vector<Point> img(N * deg);
  for (std::size_t i = 0; i < N; ++i) {
    const std::size_t target = ((i + shift_) % N) * deg;
    for (std::size_t w = 0; w < deg; ++w)
      img[i * deg + w] = static_cast<Point>(target + comps_[i][static_cast<Point>(w)]);
  }
  return Perm(std::move(img));
}

WreathElement WreathElement::unflatten(const Perm& p, std::size_t n, std::size_t deg)
{
  if (p.degree() != n * deg || n == 0)
    throw std::invalid_argument("unflatten: degree mismatch");
  const std::size_t shift = p[0] / deg;
  std::vector<Perm> comps;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t target = ((i + shift) % n) * deg;
    std::vector<Point> img(deg);
    for (std::size_t w = 0; w < deg; ++w) {
      const Point x = p[static_cast<Point>(i * deg + w)];
      if (x < target || x >= target + deg)
        throw std::invalid_argument("unflatten: not a block-shifting permutation");
      img[w] = static_cast<Point>(x - target);
    }
    comps.emplace_back(std::move(img));
  }
  return WreathElement(std::move(comps), shift);
}

} // namespace tarc::wreath
