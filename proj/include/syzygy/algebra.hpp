#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "syzygy/extint.hpp"
#include "syzygy/field.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/polynomial.hpp"
#include "syzygy/sparse.hpp"

namespace syz {

/// Standard graded algebra R = S/J, S = k[x_1..x_e], J generated by
/// homogeneous forms of degree >= 2.
///
/// Graded pieces are materialized lazily: J_d is kept as an echelon basis in
/// the monomial basis of S_d (columns in descending lex order), and the basis
/// of R_d consists of the non-pivot monomials. Lazy filling mutates caches, so
/// concurrent readers must call precompute(D) first.
template <class F>
class QuotientAlgebra {
 public:
  using Element = typename F::Element;
  using Vec = SparseVector<F>;

  /// Throws NonHomogeneousError or LinearFormError on unsuitable generators.
  QuotientAlgebra(F field, int num_vars, std::vector<Polynomial> generators);

  const F& field() const { return field_; }
  int num_vars() const { return e_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  /// Largest generator degree, 0 when J = 0.
  int max_generator_degree() const { return max_gen_degree_; }
  bool is_monomial_ideal() const;
  bool is_zero_ideal() const { return gens_by_degree_.empty(); }

  void precompute(int D) const;
  int materialized_degree() const { return static_cast<int>(pieces_.size()) - 1; }

  /// Echelon basis of J_d inside S_d.
  const EchelonBasis<F>& ideal_piece(int d) const;
  /// Rows of the reduced echelon form of J_d as a dense matrix.
  Matrix<F> ideal_piece_matrix(int d) const;
  std::size_t ideal_dim(int d) const;

  /// Standard monomials of degree d as ranks in monomial_basis(e, d).
  const std::vector<std::uint32_t>& standard_monomials(int d) const;
  std::vector<Exponents> algebra_basis(int d) const;
  std::size_t dim(int d) const;
  std::vector<std::size_t> hilbert_function(int D) const;

  /// Rank of x_v * m in S_{d+1} for m of rank `rank` in S_d.
  std::uint32_t shift(int v, int d, std::uint32_t rank) const;

  /// Coordinates in the basis of R_d of the class of a vector of S_d.
  Vec normal_form(int d, const Vec& s_coordinates) const;
  /// Class of a homogeneous polynomial; throws NonHomogeneousError otherwise.
  Vec normal_form(const Polynomial& f) const;
  Vec to_s_coordinates(const Polynomial& f) const;
  /// Polynomial with standard-monomial support representing an element of R_d.
  Polynomial to_polynomial(int d, const Vec& r_coordinates) const;

  /// Multiplication by x_v as a map R_d -> R_{d+1}.
  const SparseMatrix<F>& action_matrix(int v, int d) const;
  /// Multiplication by a monomial of degree deg(mu) as a map R_d -> R_{d+deg}.
  Vec multiply_monomial(const Exponents& mu, int d, const Vec& r) const;

 private:
  struct Piece {
    EchelonBasis<F> ideal;
    std::vector<std::uint32_t> standard;
    std::vector<std::int32_t> position;  // S_d rank -> index in `standard`, or -1
    std::vector<std::uint32_t> up;       // up[v * |S_d| + r] = rank of x_v * m_r in S_{d+1}
    std::vector<std::unique_ptr<SparseMatrix<F>>> action;
  };
  Piece& piece(int d) const;
  void build_next() const;

  F field_;
  int e_;
  std::vector<Polynomial> generators_;
  int max_gen_degree_ = 0;
  std::vector<std::vector<Vec>> gens_by_degree_;  // index d, S_d coordinates
  mutable std::vector<std::unique_ptr<Piece>> pieces_;
};

/// Result of eliminating linear forms from a generating set.
struct LinearElimination {
  int num_vars = 0;
  std::vector<int> kept_variables;  // original indices of surviving variables
  std::vector<Polynomial> generators;
};

/// Solves the linear generators for their lex-leading variables, substitutes
/// into the remaining generators, and drops eliminated variables. Generators
/// must be homogeneous; computations happen in the given field, results are
/// reported with coefficients lifted to rationals (0..p-1 for prime fields).
template <class F>
LinearElimination eliminate_linear_forms(const F& field, int num_vars,
                                         const std::vector<Polynomial>& generators);

/// Minimal generators of the lex initial ideal in(J), found degree by degree.
/// `certified` means the degree-<= gb_degree part of J is a Groebner basis:
/// in(J) has no new minimal generators in degrees gb_degree+1 .. 2*gb_degree,
/// which covers every S-pair. Then in(J) is generated by `generators`.
struct InitialIdeal {
  bool certified = false;
  int gb_degree = 0;
  int checked_through = 0;
  std::vector<Exponents> generators;

  /// Degree of the lcm of all generators (bounds Betti degrees via Taylor).
  int lcm_degree() const;
};

template <class F>
InitialIdeal initial_ideal(const QuotientAlgebra<F>& a, int degree_cap);

struct KrullEstimate {
  int dim = 0;
  bool stable = false;
};

/// 1 + degree of the eventual Hilbert polynomial, read off iterated finite
/// differences of the values hf[D-e .. D]; 0 when the tail vanishes.
KrullEstimate krull_dim_estimate(const std::vector<std::size_t>& hf, int e);

template <class F>
KrullEstimate krull_dim_estimate(const QuotientAlgebra<F>& a, int D) {
  return krull_dim_estimate(a.hilbert_function(D), a.num_vars());
}

}  // namespace syz
