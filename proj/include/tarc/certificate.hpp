#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tarc/bigint.hpp"
#include "tarc/construct.hpp"
#include "tarc/perm_group.hpp"

namespace tarc::cert {

using perm::Perm;
using perm::PermGroup;

inline constexpr const char* schema = "tarc-certificate/1";

/// Everything a certificate is recomputed from.
struct CosetGraphInput {
  std::string kind;              // nondiagonal, bipartite, example, toy
  std::string family;
  std::uint64_t param = 0;       // q or p; 0 for toys
  std::size_t n = 0;             // simple factors of the socle; 0 for toys
  std::size_t block_degree = 0;
  std::size_t degree = 0;
  std::vector<Perm> G, H;
  Perm g;
  std::vector<Perm> T;           // socle factor on one block
  std::optional<std::vector<Perm>> Gstar;
  std::optional<Perm> bold_b;

  nlohmann::json to_json() const;
  /// Throws std::invalid_argument on malformed input.
  static CosetGraphInput from_json(const nlohmann::json& j);
};

CosetGraphInput input_from(const construct::PAConstruction& pa);
CosetGraphInput input_from(const construct::BipartiteConstruction& bc);
/// Requires the group part of the example to have run and found g.
CosetGraphInput input_from(const construct::Example66& ex);
CosetGraphInput toy_input(const PermGroup& G, const PermGroup& H, const Perm& g);

struct SocleData {
  BigInt order_M, order_M_cap_H;
  std::vector<BigInt> projection_orders;
  bool socle_transitive = false;
  BigInt socle_orbits;             // |G| / |M H|: 1, or 2 with one orbit per part
  bool diagonal_type = false;      // every projection of M cap H injective
  bool arc_regular = false;        // M regular on arcs
};

struct BipartiteData {
  BigInt index;                    // |G : G*|
  bool g_outside_Gstar = false;
  bool H_in_Gstar = false;
};

struct CosetGraphCertificate {
  CosetGraphInput input;
  BigInt order_G, order_H, order_H_cap_Hg, order_H_g;
  BigInt valency;
  bool g_in_G = false, g_squared_in_H = false, g_not_in_H = false;
  bool valency_arithmetic = false;  // valency * |H cap H^g| = |H|
  bool connected = false;           // |<H, g>| = |G|
  bool locally_2transitive = false;
  std::optional<SocleData> socle;
  std::optional<BipartiteData> bipartite;
  std::string double_cover_verdict = "not_applicable";  // is_not | untested | not_applicable
  std::string theorem1_case = "not_applicable";
  std::optional<std::uint64_t> case_witness_prime;
  bool case_ii_witnessed = false;

  /// Subchecks that must hold, in order; empty when all pass.
  std::optional<std::string> first_failure() const;
  nlohmann::json to_json() const;
};

CosetGraphCertificate certify(const CosetGraphInput& in);

/// Necessary condition only: a standard double cover forces b into
/// T^n. Returns "is_not" when b is outside, else "untested".
std::string not_double_cover_test(const Perm& bold_b, const PermGroup& T, std::size_t n);
std::string not_double_cover_test(const construct::BipartiteConstruction& bc);

struct VerifyResult {
  bool identical = false;
  std::string first_difference;  // JSON pointer of the first mismatch
  nlohmann::json recomputed;
};

/// Recomputes the certificate from its serialized input and compares.
VerifyResult verify(const nlohmann::json& certificate);

} // namespace tarc::cert
