#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "json.hpp"

#include "tarc/bigint.hpp"
#include "tarc/gf.hpp"
#include "tarc/matrix.hpp"
#include "tarc/poly.hpp"

namespace tarc::eqcode {

using gf::Elem;
using gf::FieldPtr;
using linalg::Matrix;
using linalg::Vec;

std::size_t weight(const Vec& v);

/// A linear code, i.e. a subspace of F_q^n, stored by its RREF basis so that
/// equal subspaces compare equal.
class Code
{
public:
  Code(FieldPtr field, std::size_t length, std::vector<Vec> spanning = {});

  const FieldPtr& field() const { return field_; }
  std::size_t length() const { return length_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool is_invariant(const Matrix& m) const;
  /// All q^k codewords, zero first. Refuses codes with more than 2^24 words.
  std::vector<Vec> codewords() const;

  bool operator==(const Code& o) const
  {
    return length_ == o.length_ && basis_ == o.basis_ && *field_ == *o.field_;
  }
  /// Lexicographic on the RREF basis rows.
  bool operator<(const Code& o) const { return basis_ < o.basis_; }

  nlohmann::json to_json() const;
  static Code from_json(const nlohmann::json& j);

private:
  FieldPtr field_;
  std::size_t length_;
  std::vector<Vec> basis_;
};

nlohmann::json field_to_json(const gf::Field& field);
FieldPtr field_from_json(const nlohmann::json& j);

/// D = diag(eta*lambda, lambda, eta*lambda, ...), P the cyclic shift
/// e_i -> e_{i+1}, A = D P, all n x n with n = q + 1.
struct ShiftMatrix {
  FieldPtr field;
  std::size_t n = 0;
  Elem eta = 1;
  Elem lambda = 1;
  Matrix D, P, A;
  std::uint64_t order = 0;
};

/// Checks A^n = eta*lambda^2 I and that A has order n(q-1); throws
/// std::logic_error otherwise.
ShiftMatrix build_shift_matrix(const FieldPtr& field);

/// Exact multiplicative order of an invertible matrix, given a multiple of it.
std::uint64_t matrix_order(const Matrix& m, std::uint64_t multiple);

struct InvariantComponent {
  Code code;
  gf::Poly factor;                 // irreducible factor of the minimal polynomial
  std::uint64_t kernel_order = 1;  // |<M>| / |<M restricted to code>|
  bool faithful = true;
};

struct InvariantDecomposition {
  std::vector<InvariantComponent> components;  // sorted by code
  Matrix change_of_basis;                      // component bases stacked
  std::uint64_t order = 1;                     // order of the matrix
  bool degenerate = false;                     // order 1
};

/// Splits F^n into irreducible <M>-invariant subspaces. Requires M
/// invertible with squarefree minimal polynomial; throws std::domain_error
/// otherwise.
InvariantDecomposition decompose_invariant(const Matrix& m);

/// The first faithful component of the decomposition of A for GF(q).
/// Throws std::invalid_argument when q is rejected by validate_c1.
Code find_faithful_irreducible_code(std::uint64_t q);

/// weight -> number of nonzero codewords of that weight.
std::map<std::size_t, std::uint64_t> weight_profile(const Code& code);
bool is_equidistant(const Code& code);

/// Whether <m> permutes the nonzero codewords regularly. Throws
/// std::invalid_argument if the code is not m-invariant.
bool is_regular_on_nonzero(const Code& code, const Matrix& m);

/// ker(pi_i) restricted to the code, for each coordinate i.
std::vector<Code> coordinate_kernels(const Code& code);

} // namespace tarc::eqcode
