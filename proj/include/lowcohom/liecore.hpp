#pragma once

// Exact combinatorics of compact simple Lie algebras.
//
// Dynkin numbering follows Bourbaki throughout:
//
//   A_n  1 - 2 - ... - n                       (n >= 1)
//   B_n  1 - 2 - ... - (n-1) => n              (n >= 2, alpha_n short, omega_n spin)
//   C_n  1 - 2 - ... - (n-1) <= n              (n >= 2, alpha_n long, omega_1 = C^{2n})
//   D_n  1 - ... - (n-2) < (n-1), n            (n >= 3, omega_{n-1}, omega_n half-spin)
//   E_n  1 - 3 - 4 - 5 - ... - n, 2 on 4       (n = 6, 7, 8)
//   F_4  1 - 2 => 3 - 4                        (omega_4 = R^26, omega_1 adjoint)
//   G_2  1 <= 2                                (alpha_1 short, omega_1 = R^7)
//
// Weights are always given in the fundamental-weight basis.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lowcohom {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

struct SimpleGroupType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const SimpleGroupType&, const SimpleGroupType&) = default;
  friend auto operator<=>(const SimpleGroupType&, const SimpleGroupType&) = default;
};

bool admissible(const SimpleGroupType& t);
/// Throws std::invalid_argument when the family/rank pair does not exist.
void require_admissible(const SimpleGroupType& t);
std::string to_string(const SimpleGroupType& t);

using HighestWeight = std::vector<int>;

enum class FSType { real, complex, quaternionic };

std::string to_string(FSType t);

struct RootSystem {
  SimpleGroupType type;
  /// cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<std::vector<int>> cartan;
  /// Symmetrised form on simple roots, integer scaled (short roots have the
  /// smallest diagonal entry).
  std::vector<std::vector<int>> form;
  /// Positive roots in simple-root coordinates, sorted by height.
  std::vector<std::vector<int>> positive_roots;
  /// 2*rho^vee in simple-coroot coordinates.
  std::vector<int> two_rho_coroot;
  /// Permutation realising -w0 on fundamental weights (0-based).
  std::vector<int> w0_permutation;

  int rank() const { return type.rank; }
  /// (beta, beta) for a positive root given by index.
  int root_norm(std::size_t index) const;
};

/// Cached per type; the reference stays valid for the process lifetime.
const RootSystem& root_system(const SimpleGroupType& t);

int group_dim(const SimpleGroupType& t);

/// Weyl dimension formula. Throws std::invalid_argument on a length mismatch or
/// negative entry, std::overflow_error if the degree does not fit in 64 bits.
std::int64_t weyl_dim(const SimpleGroupType& t, const HighestWeight& w);

HighestWeight dual_weight(const SimpleGroupType& t, const HighestWeight& w);

/// <w, 2 rho^vee>
std::int64_t pairing_with_two_rho_coroot(const SimpleGroupType& t, const HighestWeight& w);

/// complex unless self-dual; otherwise the sign of (-1)^<w, 2 rho^vee>.
FSType fs_type(const SimpleGroupType& t, const HighestWeight& w);

struct IrrepInfo {
  HighestWeight weight;
  std::int64_t degree = 0;
  FSType type = FSType::real;
};

/// All dominant weights of complex degree <= max_degree, lexicographic order.
std::vector<IrrepInfo> enumerate_irreps(const SimpleGroupType& t, std::int64_t max_degree);

/// Diagram automorphisms (as index permutations) including the identity.
std::vector<std::vector<int>> diagram_automorphisms(const SimpleGroupType& t);

/// Lexicographically largest weight in the diagram-automorphism orbit.
HighestWeight canonical_weight(const SimpleGroupType& t, const HighestWeight& w);

HighestWeight fundamental_weight(const SimpleGroupType& t, int index_one_based);

/// Parses "A5[0,0,1,0,0]"; errors report the character position.
struct TypedWeight {
  SimpleGroupType type;
  HighestWeight weight;
  friend bool operator==(const TypedWeight&, const TypedWeight&) = default;
  friend auto operator<=>(const TypedWeight&, const TypedWeight&) = default;
};

TypedWeight parse_typed_weight(std::string_view text);
std::string format_typed_weight(const TypedWeight& tw);
SimpleGroupType parse_simple_type(std::string_view text);

}  // namespace lowcohom
