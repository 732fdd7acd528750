#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/algebra.hpp"
#include "syzygy/extint.hpp"
#include "syzygy/ideal.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/verdict.hpp"

namespace syz {

/// A value that is either exact or only a lower bound (window truncated).
struct Bounded {
  ExtInt value = ExtInt::neg_inf();
  bool exact = true;

  friend Bounded operator+(Bounded a, Bounded b) { return {a.value + b.value, a.exact && b.exact}; }
  friend Bounded operator+(Bounded a, int k) { return {a.value + ExtInt(k), a.exact}; }
  std::string to_string() const { return exact ? value.to_string() : ">=" + value.to_string(); }
};

Bounded max(Bounded a, Bounded b);

/// lhs <= rhs, where both sides may be lower bounds only.
Verdict compare_le(const Bounded& lhs, const Bounded& rhs);

struct AuditOptions {
  std::optional<int> i_max;  // default: number of variables
  int row_cap = 8;           // largest row j - i ever computed
  int gb_degree_cap = 8;
  /// Checks that build Koszul strands of products, splittings and Tor over R
  /// run only when the number of variables is at most this.
  int heavy_max_vars = 6;
  std::set<std::string> only;  // empty: every check
};

/// Certified bound on j for column i of the Betti table of R over S, from
/// the initial ideal (Taylor bound min(i G, lcm)), a declared regularity,
/// a declared Cohen-Macaulay dimension (columns past e - dim vanish) and
/// +inf otherwise. Artinian tops are applied by betti_table itself.
ColumnBound algebra_column_bound(int e, const IdealMetadata& meta, const InitialIdeal& in);

struct AlgebraInvariants {
  int e = 0;
  std::uint32_t characteristic = 0;
  std::optional<int> dim;
  bool dim_declared = false;
  int i_max = 0;
  int row_max = 0;
  BettiTable betti;
  std::vector<Bounded> t;    // t_i(R) over S, i = 0..i_max
  std::vector<Bounded> reg;  // reg_n(R), n = 0..i_max
  std::optional<int> m_R;    // absent when undetermined on the window
  int pd_observed = 0;
  bool pd_exact = false;
  int nq = 0;                // largest certified q with reg_q = 1 (0: none)
  bool nq_unbounded = false; // reg_q = 1 for every q
  std::vector<Bounded> preg_k;  // preg^R_n(k), n = 0..i_max+1
  std::vector<Bounded> t_k;     // t^R_i(k), i = 0..i_max+1
  std::string preg_certificate;
  InitialIdeal gb;
  Bounded t_at(int i) const;
  Bounded reg_at(int n) const;
  Bounded preg_k_at(int n) const;
};

template <class F>
AlgebraInvariants compute_invariants(const QuotientAlgebra<F>& a, const IdealMetadata& meta, const AuditOptions& opt);

struct CheckRecord {
  std::string id;
  std::string statement;
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::truncated;
  std::vector<std::pair<std::string, std::string>> witness;
  bool conjectural = false;
};

struct AuditReport {
  std::string name;
  std::uint32_t characteristic = 0;
  std::optional<std::uint64_t> seed;
  AlgebraInvariants invariants;
  std::vector<CheckRecord> records;
  std::string ideal_json;  // the audited ideal, for reproduction

  /// Worst verdict over the non-conjectural checks; unmet hypotheses count as verified.
  Verdict overall() const;
  /// Conjectural checks that came out violated.
  std::vector<const CheckRecord*> conjecture_counterexamples() const;
  std::string to_json() const;
  std::string summary_table() const;
  /// 0 when nothing is violated or truncated, 2 on a violation, 3 when only truncation remains.
  int exit_code() const;
};

/// Check identifiers, in report order.
const std::vector<std::string>& audit_check_ids();

AuditReport run_audit(const IdealDescription& ideal, const AuditOptions& opt = {});

template <class F>
AuditReport run_audit(const QuotientAlgebra<F>& a, const IdealDescription& ideal, const AuditOptions& opt);

}  // namespace syz
