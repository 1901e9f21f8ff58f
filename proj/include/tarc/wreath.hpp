#pragma once

#include <cstddef>
#include <vector>

#include "tarc/bigint.hpp"
#include "tarc/perm.hpp"

namespace tarc::wreath {

using perm::Perm;
using perm::Point;

/// Element (x_0, ..., x_{n-1}) tau^shift of X wr <tau>, tau the n-cycle on
/// coordinates. Acts on n blocks of deg points: block i is i*deg .. i*deg+deg-1
/// and tau maps point (i, w) to (i+1 mod n, w). With products applying the
/// left factor first, tau^-1 x tau has component i equal to x_{i-1}.
class WreathElement
{
public:
  WreathElement(std::vector<Perm> components, std::size_t shift = 0);

  static WreathElement identity(std::size_t n, std::size_t deg);
  static WreathElement tau(std::size_t n, std::size_t deg);
  static WreathElement constant(const Perm& x, std::size_t n);
  /// x in coordinate i, identity elsewhere.
  static WreathElement at(const Perm& x, std::size_t i, std::size_t n);
  /// Inverse of flatten(); throws if p does not permute the blocks cyclically.
  static WreathElement unflatten(const Perm& p, std::size_t n, std::size_t deg);

  std::size_t n() const { return comps_.size(); }
  std::size_t block_degree() const { return comps_.front().degree(); }
  std::size_t shift() const { return shift_; }
  const std::vector<Perm>& components() const { return comps_; }
  const Perm& operator[](std::size_t i) const { return comps_[i]; }

  WreathElement operator*(const WreathElement& o) const;
  WreathElement inverse() const;
  WreathElement pow(long long e) const;
  bool operator==(const WreathElement& o) const { return shift_ == o.shift_ && comps_ == o.comps_; }
  bool is_identity() const;

  Perm flatten() const;

private:
  std::vector<Perm> comps_;
  std::size_t shift_;
};

} // namespace tarc::wreath
