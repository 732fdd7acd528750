#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/algebra.hpp"
#include "syzygy/extint.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/module.hpp"
#include "syzygy/verdict.hpp"

namespace syz {

/// Multiplies an element r of R_{r_deg} (standard-monomial coordinates) into
/// an element of N_{n_deg}. Bases of R are cached per degree.
template <class F>
class RingAction {
 public:
  using Vec = SparseVector<F>;
  RingAction(const QuotientAlgebra<F>& a, const LinearizedModule<F>& n) : a_(a), n_(n) {}

  Vec apply(int r_deg, const Vec& r, int n_deg, const Vec& x) const;
  Vec apply_monomial(const Exponents& mu, int n_deg, const Vec& x) const;
  const std::vector<Exponents>& basis(int d) const;

 private:
  const QuotientAlgebra<F>& a_;
  const LinearizedModule<F>& n_;
  mutable std::map<int, std::vector<Exponents>> bases_;
};

/// Graded free module over R with generators in the given degrees. Elements of
/// degree d are concatenated blocks, one per generator g, in the basis of
/// R_{d - deg g}.
template <class F>
class FreeModule {
 public:
  using Vec = SparseVector<F>;
  FreeModule(const QuotientAlgebra<F>& a, std::vector<int> degrees) : a_(a), degrees_(std::move(degrees)) {}

  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }
  std::size_t dim(int d) const;
  std::size_t offset(std::size_t g, int d) const;
  Vec act(int v, int d, const Vec& x) const;

 private:
  const QuotientAlgebra<F>& a_;
  std::vector<int> degrees_;
};

/// dim Tor_i(k, N)_j read off generator degrees, with certified vanishing
/// bounds per column.
struct TorProfile {
  int i_max = 0;
  int d_max = 0;
  std::map<std::pair<int, int>, std::size_t> values;  // computed cells, j <= d_max
  std::vector<ExtInt> certified_bound;                // Tor_i(k,N)_j = 0 for j > bound

  bool complete(int i) const { return certified_bound[i] <= ExtInt(d_max); }
  std::size_t at(int i, int j) const;
  /// Largest j <= d_max with a nonzero cell (-inf if none).
  ExtInt t(int i) const;
  std::string to_tsv() const;
};

template <class F>
struct ResolutionStep {
  std::vector<int> generator_degrees;
  /// Image of each generator in the previous free module (or in N for step 0).
  std::vector<SparseVector<F>> images;
};

template <class F>
struct Resolution {
  std::vector<ResolutionStep<F>> steps;
  TorProfile profile;
  /// Highest degree handled (limited by d_max and by what N knows).
  int degree_reached = 0;
};

/// Minimal graded free resolution of N over R through homological degree
/// i_max and internal degree d_max. New generators in degree d are a
/// complement of R_1 * (image in degree d-1) inside the kernel piece.
template <class F>
Resolution<F> minimal_resolution(const QuotientAlgebra<F>& a, const LinearizedModule<F>& n, int i_max, int d_max);

/// Every differential entry lies in R_+ and consecutive maps compose to zero.
template <class F>
bool resolution_is_minimal_complex(const QuotientAlgebra<F>& a, const LinearizedModule<F>& n,
                                   const Resolution<F>& r);

struct PregResult {
  ExtInt value;             // preg^R_n(k) as far as certified (lower bound when truncated)
  bool truncated = true;
  std::string certificate;  // how the value was obtained
  int degree_bound = 0;     // internal degree through which the resolution was needed
  std::optional<TorProfile> profile;
};

/// preg^R_n(k) = max_{i<=n} (t^R_i(k) - i).
///
/// Certificates, in order: J = 0; a Groebner basis of degree G (computed
/// through degree 2G), which gives t^R_i(k) <= 1 + (i-1)(G-1) and hence a
/// finite window, G = 2 meaning Koszul outright; a declared Koszul flag.
/// Otherwise the resolution of k is computed through `d_max` and the result
/// is marked truncated unless a nonlinear syzygy is found.
template <class F>
PregResult preg_R_k(const QuotientAlgebra<F>& a, int n, std::optional<int> d_max = std::nullopt,
                    std::optional<bool> declared_koszul = std::nullopt);

/// dim Tor^R_i(L, N)_j for i <= i_max, j <= d_max, via a minimal resolution
/// of L tensored with N. Cells are exact where both modules are known.
struct TorDims {
  int i_max = 0;
  int d_max = 0;
  std::map<std::pair<int, int>, std::size_t> values;
  std::size_t at(int i, int j) const;
  bool known(int i, int j) const { return values.count({i, j}) > 0; }
  ExtInt top(int i) const;
};

template <class F>
TorDims tor_between(const QuotientAlgebra<F>& a, const LinearizedModule<F>& l, const LinearizedModule<F>& n,
                    int i_max, int d_max);

/// The four-term sequence 0 -> Tor_1(B_{a-1},N) -> Z_a (x) N -> Z_a(K (x) N) -> Tor_1(C_{a-1},N) -> 0
/// with F = K over R and N = Z_b(K^M), per internal degree.
struct SerraDegree {
  int j = 0;
  std::size_t tor1_b = 0, z_tensor_n = 0, z_of_tensor = 0, tor1_c = 0;
  std::size_t phi_rank = 0;
  bool alternating_sum_zero = false;
  bool phi_matches = false;  // ker(phi) = Tor_1(B), coker(phi) = Tor_1(C)
};

struct SerraReport {
  int a = 0, b = 0, j_max = 0;
  std::vector<SerraDegree> degrees;
  /// Tor_{i+1}(B_{a-1}, N)_j = Tor_i(Z_a, N)_j for 1 <= i <= 2 where computed.
  bool shifted_isomorphism = true;
  Verdict verdict = Verdict::truncated;
  std::string detail;
};

template <class F>
SerraReport check_serra_sequence(const QuotientAlgebra<F>& a, const LinearizedModule<F>& m, int a_deg, int b_deg,
                                 int j_max);

}  // namespace syz
