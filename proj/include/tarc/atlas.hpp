#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tarc/gf.hpp"
#include "tarc/perm_group.hpp"

namespace tarc::atlas {

using perm::Perm;
using perm::PermGroup;
using perm::Point;

enum class Family { pgl2, symmetric, psl28_gamma };

/// Which element names the seed follows. The non-diagonal construction uses
/// R = F:(<b> x <c>) with o normalizing <b, c>; the bipartite construction
/// uses R = <a>:<b> with a of order p, b of order p-1 and an involution c
/// inverting b.
enum class Role { nondiagonal, bipartite };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

/// Almost simple X with socle T and the distinguished elements used by the
/// constructions. Every returned seed has passed its verification.
struct AlmostSimpleSeed {
  Family family = Family::pgl2;
  Role role = Role::nondiagonal;
  std::uint64_t q = 0;          // |F|
  std::size_t degree = 0;       // points of X
  PermGroup X{0, {}};
  PermGroup T{0, {}};
  unsigned index_XT = 1;
  std::vector<Perm> F;          // generators of the regular normal subgroup of R
  std::optional<Perm> a;
  Perm b, c;
  std::optional<Perm> o;
  std::optional<Perm> d;        // symmetric family: the involution inverting a
  std::string o_recipe;         // how o was obtained

  /// R = <F, b, c>, or <a, b> in the bipartite role.
  PermGroup R() const;
  /// F:<b, c^|X:T|> in the non-diagonal role, <a, b^2> in the bipartite role.
  PermGroup R_cap_T() const;

  nlohmann::json to_json() const;
};

/// X = PGL(2,q), T = PSL(2,q) on F_q u {inf}; points are field codes and
/// inf = q. Non-diagonal role requires q >= 4 even or q >= 7, q = 3 mod 4,
/// with q accepted by validate_c1. Bipartite role requires q = p >= 5 prime.
AlmostSimpleSeed seed_pgl2(std::uint64_t q, Role role = Role::nondiagonal);

/// X = S_p, T = A_p on Z_p.
AlmostSimpleSeed seed_symmetric(std::uint64_t p, Role role = Role::nondiagonal);

/// X = PGammaL(2,8) on 9 points, T = PSL(2,8), F the translations,
/// b the Frobenius x -> x^2. No o: the construction searches the normalizer.
AlmostSimpleSeed seed_psl28_gamma();

/// Element of PGL(2,q) or PGammaL(2,q) as a permutation of the projective line:
/// x -> (alpha x^(p^frob) + beta) / (gamma x^(p^frob) + delta).
Perm mobius(const gf::Field& field, gf::Elem alpha, gf::Elem beta, gf::Elem gamma, gf::Elem delta,
            unsigned frob = 0);

} // namespace tarc::atlas
