#pragma once

// Linear algebra used by the numeric oracle.
//
// Construction work (real forms, invariant subspaces, structure constants)
// is done exactly over Q with sparse rows. Rank decisions on evaluation
// matrices are done modulo two 31-bit primes; when the two residue ranks
// disagree the caller falls back to fraction-free elimination over Z.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lowcohom::linalg {

using Q = mpq_class;
using SparseVec = std::vector<std::pair<int, Q>>;  // strictly increasing indices

constexpr std::uint32_t kPrimeA = 2147483647u;
constexpr std::uint32_t kPrimeB = 2147483629u;

/// Square (or rectangular) sparse rational matrix in row-major form.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec> row;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), row(r) {}
  static SparseMatrix identity(int n);

  void add(int i, int j, const Q& v);  // accumulate, drops zeros
  Q at(int i, int j) const;
  std::size_t nonzeros() const;

  std::vector<Q> apply(const std::vector<Q>& v) const;
  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Q& s) const;
  bool is_zero() const;
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
};

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// Kernel basis normalised so that restricted to the free coordinates it is
/// the identity. vectors[k] has a 1 in position free_cols[k].
struct KernelBasis {
  int ambient = 0;
  std::vector<int> free_cols;
  std::vector<SparseVec> vectors;
  int dim() const { return static_cast<int>(vectors.size()); }
};

/// Reduced row echelon form; rows[k] is monic at pivot_cols[k] and has no
/// entry in any other pivot column.
struct Rref {
  int cols = 0;
  std::vector<SparseVec> rows;
  std::vector<int> pivot_cols;
};

Rref exact_rref(const std::vector<SparseVec>& rows, int cols);

KernelBasis exact_kernel(const std::vector<SparseVec>& rows, int cols);
KernelBasis exact_kernel(const SparseMatrix& m);

/// Rank of a rational matrix via the kernel.
int exact_rank(const SparseMatrix& m);

/// For an X-invariant subspace with basis B (from exact_kernel), returns the
/// matrix of X in that basis: (X B) restricted to the free rows.
SparseMatrix restrict_to(const SparseMatrix& x, const KernelBasis& basis);

/// Gram matrix B^T G B for a subspace basis.
SparseMatrix restrict_form(const SparseMatrix& g, const KernelBasis& basis);

/// Solves for coordinates of v in the span of the basis (v restricted to the
/// free coordinates); does not check membership.
std::vector<Q> coordinates_in(const KernelBasis& basis, const std::vector<Q>& v);

std::vector<Q> to_dense(const SparseVec& v, int n);
SparseVec to_sparse(const std::vector<Q>& v);

/// Clears denominators: returns integer vector proportional to v.
std::vector<mpz_class> primitive_integer(const std::vector<Q>& v);

std::uint32_t mod_p(const mpz_class& z, std::uint32_t p);

/// Row-reduces in place modulo p; returns rank.
int rank_mod_p(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p);

/// Basis of the right kernel of m (rows x cols) modulo p.
std::vector<std::vector<std::uint32_t>> kernel_mod_p(std::vector<std::vector<std::uint32_t>> m, int cols,
                                                     std::uint32_t p);

/// Fraction-free (Bareiss) rank over Z.
int rank_bareiss(std::vector<std::vector<mpz_class>> m);

}  // namespace lowcohom::linalg
