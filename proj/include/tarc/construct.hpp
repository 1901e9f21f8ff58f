#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "tarc/atlas.hpp"
#include "tarc/eqcode.hpp"
#include "tarc/matrix.hpp"
#include "tarc/perm_group.hpp"
#include "tarc/wreath.hpp"

namespace tarc::construct {

using atlas::AlmostSimpleSeed;
using linalg::Matrix;
using perm::Perm;
using perm::PermGroup;
using wreath::WreathElement;

/// Elementary abelian p-group with a fixed basis and coordinate lookup.
class ElementaryAbelian
{
public:
  /// Throws std::invalid_argument unless `basis` generates Z_p^k with the
  /// given elements independent.
  ElementaryAbelian(std::vector<Perm> basis, std::uint32_t p);

  std::size_t rank() const { return basis_.size(); }
  const std::vector<Perm>& basis() const { return basis_; }
  /// Throws std::out_of_range when x is not in the group.
  const linalg::Vec& coordinates(const Perm& x) const;
  bool contains(const Perm& x) const { return coords_.count(x) > 0; }
  Perm element(const linalg::Vec& v) const;

private:
  std::vector<Perm> basis_;
  std::uint32_t p_;
  std::unordered_map<Perm, linalg::Vec, perm::PermHash> coords_;
};

/// Membership in T^n: x preserves every block and each component lies in T.
bool in_power(const Perm& x, const PermGroup& T, std::size_t n);

/// Generators of T^n on n blocks.
std::vector<Perm> power_generators(const PermGroup& T, std::size_t n);

/// theta = d_0 tau with d_0 = (bc, b, bc, ..., bc), n = q + 1. Checks the
/// order q^2 - 1 and theta^n = (b^2 c, ..., b^2 c).
WreathElement build_theta(const AlmostSimpleSeed& seed);

/// Readings of the pattern (b, 1, b, ..., d) with an unspecified last entry.
enum class ThetaReading { last_b, last_b_squared, last_one };
std::string to_string(ThetaReading r);
WreathElement build_theta_pattern(const Perm& b, std::size_t n, ThetaReading reading);

/// Matrix over GF(p) of x -> theta^-1 x theta on F^n, in the basis given by
/// the F basis in each coordinate, coordinate-major. Row i is the image of
/// basis vector i (row-vector convention).
Matrix conjugation_matrix(const WreathElement& theta, const ElementaryAbelian& F);

struct PAConstruction {
  AlmostSimpleSeed seed;
  std::size_t n = 0;
  WreathElement theta{std::vector<Perm>{Perm(1)}, 0};
  Matrix conj;
  eqcode::InvariantDecomposition decomposition;
  /// Components of dimension 2f, of order q^2 - 1, regular on nonzero vectors.
  std::vector<std::size_t> candidates;
  std::size_t chosen = 0;  // index into candidates
  eqcode::Code code_witness{gf::make_field(2, 1), 0};
  std::vector<Perm> E;
  PermGroup H{0, {}};
  PermGroup G{0, {}};
  std::optional<Perm> o;  // bold o, flattened

  BigInt order_E, order_H, order_G, order_M;
  bool E_regular = false;
  bool E_projections_onto_F = false;
  bool E_kernels_distinct = false;
  bool H_two_transitive = false;
  /// Over GF(q) in the basis of F, the conjugation matrix is similar to the
  /// shift matrix A (only meaningful for seeds with n = q + 1).
  std::optional<bool> similar_to_shift;

  // Filled by assemble_G.
  PermGroup M_cap_H{0, {}};
  BigInt order_M_cap_H;
  std::vector<BigInt> projection_orders;
  BigInt order_R_cap_T;
  std::uint64_t theta_power_in_M = 0;  // least m > 0 with theta^m in T^n
  bool G_order_formula = false;
  bool theta_power_criterion = false;
  bool socle_transitive = false;
  bool subdirect = false;
  bool non_diagonal = false;

  std::size_t block_degree() const { return seed.degree; }
  nlohmann::json summary() const;
};

/// Finds E inside F^n and checks E and H = E:<theta>. `component` picks among the
/// qualifying components in decomposition order. Throws std::logic_error when
/// none qualifies or a check fails.
PAConstruction build_E_and_H(const AlmostSimpleSeed& seed, const WreathElement& theta, std::size_t component = 0);

/// G = T^n <theta>, with socle transitivity, subdirectness and
/// non-diagonality verified. Throws std::logic_error on failure.
void assemble_G(PAConstruction& pa);

/// Full non-diagonal pipeline for a seed carrying o.
PAConstruction nondiagonal_construction(const AlmostSimpleSeed& seed, std::size_t component = 0);

struct BipartiteConstruction {
  AlmostSimpleSeed seed;
  std::size_t p = 0, n = 0;
  WreathElement a{std::vector<Perm>{Perm(1)}, 0}, b = a, tau = a, o = a;
  PermGroup Gstar{0, {}}, G{0, {}}, H{0, {}}, K{0, {}};
  PermGroup M_cap_H{0, {}};
  BigInt order_Gstar, order_G, order_H, order_K, order_M, order_M_cap_H;
  bool relations = false;         // o^tau = b^-1 o, b^o = b^-1, tau^o = b^-1 tau
  bool o_outside_Gstar = false;
  bool H_two_transitive_on_K = false;
  bool M_cap_H_is_a_b2 = false;   // T^n cap H = <a, b^2>
  bool diagonal = false;          // injective projections on T^n cap H

  nlohmann::json summary() const;
};

BipartiteConstruction bipartite_construction(std::uint64_t p, atlas::Family family);

struct TwistedNormalizer {
  std::vector<Perm> centralizer;  // C_M(theta), flattened
  std::vector<Perm> normalizer;   // N_M(<theta>), flattened
  std::vector<std::uint64_t> exponents;  // j with theta^j reached
};

/// C_M(theta) and N_M(<theta>) for M = T^n and theta = (d_0..d_{n-1}) tau, by
/// solving t_{i+1} = d_i^-1 t_i d'_i around the cycle for each theta^j with
/// j = 1 mod n. Throws std::invalid_argument unless theta has shift 1.
TwistedNormalizer twisted_centralizer(const PermGroup& T, const WreathElement& theta);

struct Example66 {
  ThetaReading reading = ThetaReading::last_b;
  std::uint64_t theta_order = 0;
  std::size_t component_count = 0;
  std::vector<std::size_t> dimensions;  // sorted
  std::size_t regular_six = 0;
  bool counts_match = false;
  /// Counts for the other readings, filled only when the main one mismatches.
  nlohmann::json alternatives;

  PAConstruction pa;
  BigInt order_G, order_M, index;
  std::size_t normalizer_order = 0;
  bool normalizer_nonabelian = false;
  std::size_t normalizer_involutions = 0;
  /// Involutions g of N_M(<theta>) outside H with g^2 in H and <H, g> = G.
  std::vector<Perm> generating_involutions;
  std::size_t generating_double_cosets = 0;
  /// Elements of N_M(<theta>) normalizing H, and the classes of generating
  /// involutions once g is also identified with its conjugates under them.
  std::size_t normalizer_fixing_H = 0;
  std::size_t generating_classes_up_to_normalizer = 0;
  std::optional<Perm> g;
  bool index_identity = false;      // |G:H| = 2^57 3^42 7^21
  bool arc_regular_identity = false;  // |M| = |G:H| * 2^6

  nlohmann::json summary() const;
};

/// Decomposition counts and group-theoretic data for the valency-64 example.
/// `component` selects among the six qualifying subspaces. With
/// `group_part` false only the linear algebra is done.
Example66 example_2_6(std::size_t component = 0, bool group_part = true);

/// Whether g1 and g2 lie in the same double coset H g H.
bool same_double_coset(const PermGroup& H, const Perm& g1, const Perm& g2);

} // namespace tarc::construct
