#pragma once

// Numeric oracle: explicit Lie algebra actions and generic isotropy.
//
// Constructions work with complex modules over Q(i) (generators are
// skew-Hermitian for a stored positive Hermitian form, plus an optional
// conjugate-linear structure v -> M conj(v) commuting with the action).
// The orthogonal representation handed to the oracle is the real form when
// the structure squares to +1 and the realification otherwise.
//
// Realification interleaves coordinates (re_0, im_0, re_1, im_1, ...).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lowcohom/liecore.hpp"
#include "lowcohom/linalg.hpp"

namespace lowcohom {

using linalg::Q;
using linalg::SparseMatrix;

/// Matrix with entries in Q(i).
struct CMatrix {
  SparseMatrix re, im;

  CMatrix() = default;
  CMatrix(int r, int c) : re(r, c), im(r, c) {}
  explicit CMatrix(SparseMatrix real) : re(std::move(real)), im(re.rows, re.cols) {}
  static CMatrix identity(int n) { return CMatrix(SparseMatrix::identity(n)); }

  int rows() const { return re.rows; }
  int cols() const { return re.cols; }
  bool is_real() const { return im.is_zero(); }

  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix conj() const;
  CMatrix transpose() const;
  CMatrix adjoint() const { return conj().transpose(); }
  CMatrix times_i() const;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  friend bool operator==(const CMatrix& a, const CMatrix& b) { return a.re == b.re && a.im == b.im; }
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Real 2n x 2n matrix of a complex n x n matrix in interleaved coordinates.
SparseMatrix realify_matrix(const CMatrix& m);

struct ComplexModule {
  int dim = 0;
  std::vector<CMatrix> gens;
  CMatrix gram;  // Hermitian, positive definite
  std::optional<CMatrix> structure;
  int structure_sign = 0;  // +1 real, -1 quaternionic, 0 none
  bool has_u1 = false;
  std::string label;
};

/// Orthogonal representation on R^n by sparse rational generators.
struct LinearRep {
  int space_dim = 0;
  std::vector<SparseMatrix> generators;
  SparseMatrix gram;  // symmetric positive definite invariant form
  std::string label;

  int group_dim() const { return static_cast<int>(generators.size()); }
};

// --- basic modules --------------------------------------------------------

ComplexModule su_vector(int n);
ComplexModule sp_vector(int n);       // C^{2n}, quaternionic structure
ComplexModule so_vector(int n);       // R^n with trivial real structure
ComplexModule spin_module(int n);     // full spinor (n odd) or a half-spinor (n even)
ComplexModule g2_vector();            // R^7
ComplexModule trivial_module(int n);  // group of dimension 0

// --- functors -------------------------------------------------------------

ComplexModule sym_power(const ComplexModule& v, int k);
ComplexModule alt_power(const ComplexModule& v, int k);
/// Kernel of the contraction with the invariant bilinear form M^H G. For an
/// alternating power of a symplectic module or a symmetric power of an
/// orthogonal one this is the traceless part.
ComplexModule contraction_kernel(const ComplexModule& power, const ComplexModule& base, int k, bool symmetric);
ComplexModule adjoint_module(const ComplexModule& v);
ComplexModule tensor_c(const ComplexModule& a, const ComplexModule& b);
ComplexModule with_u1(const ComplexModule& v);
ComplexModule dualize(const ComplexModule& v);
/// Adds the structure ε(e_I) = sign(I^c, I) e_{I^c} on Λ^{n/2} C^n.
ComplexModule with_hodge_structure(ComplexModule alt, int n);

/// Checks the module axioms exactly: skew-Hermitian generators and a
/// commuting structure with the declared sign. Returns an error description
/// or an empty string.
std::string verify_module(const ComplexModule& v);

/// Module of an irreducible complex representation of a simple compact group,
/// up to diagram automorphism. Throws UnsupportedConstruction for weights with
/// no explicit construction (all of F4, E6, E7, E8 and uncommon weights).
ComplexModule irrep_module(const TypedWeight& tw);

// --- real representations -------------------------------------------------

LinearRep realify(const ComplexModule& v);
LinearRep real_form(const ComplexModule& v);
/// Real form for real structure, realification otherwise.
LinearRep to_real(const ComplexModule& v);
LinearRep tensor_r(const LinearRep& a, const LinearRep& b);
/// k copies of r with the group acting diagonally (block-diagonal generators).
LinearRep diagonal_copies(const LinearRep& r, int k);

/// Empty when every generator is skew for the Gram form.
std::string verify_real(const LinearRep& r);

/// Plain-text dense rational export, one generator per block.
std::string export_matrices(const LinearRep& r);

// --- the oracle -----------------------------------------------------------

struct GenericPointReport {
  int space_dim = 0;
  int group_dim = 0;       // dimension of the image Lie algebra
  int isotropy_dim = 0;
  int orbit_dim = 0;
  int cohom = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int min_attained_at_trial = 0;
  bool exact_fallback_used = false;
};

struct OracleOptions {
  int trials = 8;
  std::uint64_t seed = 1;
  int coordinate_bytes = 2;
  bool stop_at_lower_bound = true;
};

/// Dimension of the span of the generators.
int effective_dim(const LinearRep& r);

/// Nullity of the evaluation map X -> X p on the image algebra.
int isotropy_dim_at(const LinearRep& r, const std::vector<Q>& point);

GenericPointReport generic_cohom(const LinearRep& r, const OracleOptions& opt);

/// Seeded rational point used by trial t.
std::vector<Q> random_point(int dim, std::uint64_t seed, int trial, int coordinate_bytes);

/// Exact basis of the isotropy algebra at p, as matrices.
std::vector<SparseMatrix> isotropy_algebra_basis(const LinearRep& r, const std::vector<Q>& point);

struct SliceStep {
  int isotropy_dim = 0;
  int normal_dim = 0;
  LinearRep slice;  // isotropy algebra acting on the normal space
};

/// One slice reduction at p: isotropy algebra restricted to the normal space.
SliceStep slice_at(const LinearRep& r, const std::vector<Q>& point);

enum class PolarVerdict { polar, non_polar };

/// Section test at a generic point: the normal space N is a section iff
/// <X v, w> = 0 for all generators X and v, w in N. Evaluated modulo two
/// primes at the seeded point.
PolarVerdict polar_test(const LinearRep& r, const OracleOptions& opt);

// --- construction expressions --------------------------------------------

/// Grammar (whitespace-insensitive):
///
///   expr    := call | spec
///   call    := name '(' [arg {',' arg}] ')'
///   arg     := expr | integer | weight
///   weight  := typed highest weight such as 'C3[0,0,1]' (irreducible module)
///   name    := so | su | u | sp | spin | g2 | adjoint | sym2 | alt2 | alt3
///            | sym | alt | tensorR | tensorC | tensorH | realify | traceless
///            | dualize | u1 | trivial
///   spec    := an irreducible spec string, e.g. "U1(1) * A5[0,0,1,0,0]",
///              recognised at top level by '*', ':' or a leading U1
///
/// so/su/sp/spin/g2 give vector (spin: spinor) modules; u(n) = u1(su(n));
/// sym(X,k), alt(X,k) are the functors; traceless applies to the innermost
/// sym/alt power; tensorH is the real form of tensorC of quaternionic inputs.
LinearRep build_rep(std::string_view expr);

}  // namespace lowcohom
