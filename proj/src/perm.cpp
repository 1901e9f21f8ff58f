#include "tarc/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tarc::perm {

Perm::Perm(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw std::invalid_argument("Perm: image array is not a bijection");
    seen[p] = true;
  }
}

Perm Perm::from_cycles(const std::string& text, std::size_t degree)
{
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("Perm::from_cycles: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("Perm::from_cycles: malformed cycle in \"" + text + "\"");
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<unsigned long>(text[i++] - '0');
      if (v >= degree)
        throw std::invalid_argument("Perm::from_cycles: point out of range");
      if (used[v])
        throw std::invalid_argument("Perm::from_cycles: repeated point");
      used[v] = true;
      cycle.push_back(static_cast<Point>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const
{
  if (degree() != o.degree())
    throw std::invalid_argument("Perm::operator*: degree mismatch");
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[i] = o.images_[images_[i]];
  return out;
}

Perm Perm::inverse() const
{
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Perm Perm::pow(long long e) const
{
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  Perm result(degree());
  while (k) {
    if (k & 1)
      result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Perm Perm::conjugate_by(const Perm& y) const { return y.inverse() * *this * y; }

bool Perm::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Point Perm::first_moved() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::size_t Perm::num_fixed() const
{
  std::size_t k = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    k += images_[i] == i;
  return k;
}

std::vector<std::vector<Point>> Perm::cycles() const
{
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<Point> c;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

BigInt Perm::order() const
{
  BigInt ord = 1;
  for (const auto& c : cycles()) {
    BigInt len = c.size();
    ord = ord / boost::multiprecision::gcd(ord, len) * len;
  }
  return ord;
}

bool Perm::is_even() const
{
  std::size_t transpositions = 0;
  for (const auto& c : cycles())
    transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::string Perm::to_cycles() const
{
  std::ostringstream os;
  for (const auto& c : cycles()) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k)
      os << (k ? " " : "") << c[k];
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Perm Perm::from_json(const nlohmann::json& j) { return Perm(j.get<std::vector<Point>>()); }

Perm embed(const Perm& p, std::size_t offset, std::size_t n)
{
  if (offset + p.degree() > n)
    throw std::invalid_argument("embed: block exceeds the domain");
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < p.degree(); ++i)
    img[offset + i] = static_cast<Point>(offset + p[static_cast<Point>(i)]);
  return Perm(std::move(img));
}

std::size_t PermHash::operator()(const Perm& p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images())
    h = (h ^ x) * 1099511628211ull;
  return h;
}

} // namespace tarc::perm
