#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tarc/bigint.hpp"

namespace tarc::perm {

using Point = std::uint32_t;

/// Permutation of {0, ..., n-1} stored as its image array.
/// Products apply the left factor first: (a * b)[i] = b[a[i]].
class Perm
{
public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }
  /// Cycle notation such as "(0 1 2)(3 4)"; "()" or "" is the identity.
  static Perm from_cycles(const std::string& text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  Perm pow(long long e) const;
  /// y^-1 * this * y.
  Perm conjugate_by(const Perm& y) const;

  bool is_identity() const;
  /// Least moved point, or degree() for the identity.
  Point first_moved() const;
  std::size_t num_fixed() const;
  BigInt order() const;
  bool is_even() const;

  std::vector<std::vector<Point>> cycles() const;
  std::string to_cycles() const;

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  nlohmann::json to_json() const { return images_; }
  static Perm from_json(const nlohmann::json& j);

private:
  std::vector<Point> images_;
};

/// Lifts p on {0..deg-1} to the copy on {offset..offset+deg-1} inside degree n.
Perm embed(const Perm& p, std::size_t offset, std::size_t n);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

} // namespace tarc::perm
