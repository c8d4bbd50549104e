#pragma once

// Closed-form cohomogeneity formulas, lower bounds and the principal isotropy
// lookup lemmas for tensor products of standard representations.

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "lowcohom/repmodel.hpp"

namespace lowcohom {

enum class Method { formula, lemma_lookup, numeric_oracle, embedded_data };

std::string to_string(Method m);

/// Identity component of a principal isotropy group; `finite` when discrete.
struct Finite {
  friend bool operator==(const Finite&, const Finite&) = default;
};
using PigComponent = std::variant<Finite, GroupSpec>;

struct CohomResult {
  int lower = 0;
  int upper = 0;
  std::optional<PigComponent> pig_identity_component;
  Method method = Method::formula;

  bool exact() const { return lower == upper; }
  static CohomResult exactly(int c, Method m) { return {c, c, std::nullopt, m}; }
};

struct TensorSliceDecomposition {
  int U1_dim = 0, U2_dim = 0;
  int N1_dim = 0, N2_dim = 0;
  int residual_dim = 0;  // dim p1⊥ ⊗ p2⊥
  std::string residual_rep;
  std::optional<GroupSpec> K1;
};

/// Dimensions for a real tensor of factors of degree d_i and cohomogeneity c_i.
TensorSliceDecomposition tensor_slice_decomposition(int d1, int c1, int d2, int c2);

int eq1_cohom(int dimV, int dimG, int dimH);
int eq2_two_copies(int c, int c_residual);
int eq2_bound(int c);
int eq3_real_tensor(int c1, int c2, int residual);
int eq4_cohom_one(int c2, int middle, int last);

int degree_lower_bound(std::int64_t real_degree, int dimG);
int tensor_lower_bound(int m, int n);

// --- principal isotropy lemmas ---------------------------------------------

/// Groups with a standard name, used for lemma outputs.
GroupSpec so_group(int n);
GroupSpec u_group(int n);
GroupSpec sp_group(int n);
GroupSpec product(const GroupSpec& a, const GroupSpec& b);
/// Printable name in classical notation, e.g. "U(1)*Sp(1)".
std::string classical_name(const GroupSpec& g);

enum class ClassicalFamily { SOxSO, UxU, SpxSp };

/// Requires m >= n >= 1.
GroupSpec pig_classical(ClassicalFamily family, int m, int n);

/// Cases 1..8 of the mixed-tensor lemma, as printed. Throws
/// std::domain_error outside every printed branch. The empty GroupSpec is
/// the trivial group.
GroupSpec pig_mixed(int case_id, int m, int n);

/// Whether (m, n) lies in the printed domain of the case.
bool pig_mixed_admissible(int case_id, int m, int n);

/// Oracle construction expression for a lemma representation.
std::string lemma_expression(int case_id, int m, int n);
std::string classical_expression(ClassicalFamily family, int m, int n);

// --- monotone series --------------------------------------------------------

enum class SeriesField { R, C, H };

/// The fixed factor of an F-tensor with SO(n)/U(n)/Sp(n) has F-dimension k;
/// for n > k the principal isotropy contains SO(n-k) (resp. U, Sp).
struct StabilizationWitness {
  SeriesField field = SeriesField::R;
  int fixed_dim = 0;
  int isotropy_dim_at_last = 0;  // observed at the largest profiled n
};

struct MonotoneCertificate {
  int value = 0;
  int from_n = 0;       // start of the terminal constant run
  int certified_at = 0;  // largest profiled n
};

struct Inconclusive {};

/// Throws std::logic_error on a non-monotone profile.
std::variant<MonotoneCertificate, Inconclusive> monotone_extend(const std::map<int, int>& profile,
                                                                const StabilizationWitness& witness);

// --- simple groups ----------------------------------------------------------

enum class SimplePigRule { trivial_pig, polar, hermitian_factor, qk_factor, unknown };

std::string to_string(SimplePigRule r);

/// Polar irreducible representations of simple groups (isotropy
/// representations of symmetric spaces and their restrictions that remain
/// orbit-equivalent). Weight is taken up to normal form.
bool in_simple_polar_list(const TypedWeight& tw);

SimplePigRule simple_pig_rule(const IrrepSpec& spec);

}  // namespace lowcohom
