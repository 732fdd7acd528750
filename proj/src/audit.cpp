#include "syzygy/audit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "syzygy/homprod.hpp"
#include "syzygy/module.hpp"
#include "syzygy/numtheory.hpp"
#include "syzygy/resolve.hpp"

namespace syz {

using Json = nlohmann::ordered_json;

Bounded max(Bounded a, Bounded b) {
  // A lower bound that already exceeds an exact value decides the max.
  if (a.exact && b.exact) return {syz::max(a.value, b.value), true};
  Bounded out{syz::max(a.value, b.value), false};
  if (a.exact && !b.exact && b.value >= a.value) out.exact = false;
  return out;
}

Verdict compare_le(const Bounded& lhs, const Bounded& rhs) {
  if (lhs.value <= rhs.value) return lhs.exact ? Verdict::verified : Verdict::truncated;
  // lhs (a lower bound) already exceeds rhs.
  return rhs.exact ? Verdict::violated : Verdict::truncated;
}

ColumnBound algebra_column_bound(int e, const IdealMetadata& meta, const InitialIdeal& in) {
  return [=](int i) {
    ExtInt b = ExtInt::pos_inf();
    if (i > e) return ExtInt::neg_inf();
    if (i == 0) return ExtInt(0);
    if (in.certified) {
      if (in.generators.empty()) return ExtInt::neg_inf();
      b = min(b, ExtInt(std::min(i * in.gb_degree, in.lcm_degree())));
    }
    if (meta.regularity) b = min(b, ExtInt(i + *meta.regularity));
    if (meta.cohen_macaulay.value_or(false) && meta.dim && i > e - *meta.dim) b = ExtInt::neg_inf();
    return b;
  };
}

Bounded AlgebraInvariants::t_at(int i) const {
  if (i < 0 || i > e) return {ExtInt::neg_inf(), true};
  if (i == 0) return {ExtInt(0), true};
  if (i < static_cast<int>(t.size())) return t[i];
  // Past the window: once a column vanishes exactly, so do all later ones.
  for (int k = 1; k < static_cast<int>(t.size()); ++k)
    if (t[k].exact && t[k].value.is_neg_inf()) return {ExtInt::neg_inf(), true};
  return {ExtInt::neg_inf(), false};
}

Bounded AlgebraInvariants::reg_at(int n) const {
  if (n < 0) return {ExtInt::neg_inf(), true};
  Bounded r{ExtInt::neg_inf(), true};
  for (int i = 0; i <= n; ++i) {
    Bounded ti = t_at(i);
    r = max(r, Bounded{ti.value - i, ti.exact});
  }
  return r;
}

Bounded AlgebraInvariants::preg_k_at(int n) const {
  if (n < 0) return {ExtInt::neg_inf(), true};
  if (n < static_cast<int>(preg_k.size())) return preg_k[n];
  Bounded last = preg_k.empty() ? Bounded{ExtInt(0), false} : preg_k.back();
  return {last.value, false};
}

template <class F>
AlgebraInvariants compute_invariants(const QuotientAlgebra<F>& a, const IdealMetadata& meta, const AuditOptions& opt) {
  AlgebraInvariants inv;
  int e = a.num_vars();
  inv.e = e;
  inv.characteristic = a.field().characteristic();
  inv.i_max = std::min(opt.i_max.value_or(e), e);
  inv.gb = initial_ideal(a, opt.gb_degree_cap);
  auto bound = algebra_column_bound(e, meta, inv.gb);

  int row_max = 0;
  for (int i = 0; i <= inv.i_max; ++i) {
    ExtInt b = bound(i);
    if (b.is_pos_inf()) row_max = opt.row_cap;
    else if (b.is_finite()) row_max = std::max(row_max, b.value() - i);
  }
  row_max = std::min(row_max, opt.row_cap);
  auto r = algebra_module(a, row_max + 1);
  if (r.top().is_finite()) row_max = std::min(row_max, std::max(r.top().value(), 0));
  inv.row_max = row_max;
  KoszulComplex<F> k(r);
  inv.betti = betti_table(k, inv.i_max, inv.i_max + row_max, row_max, bound);

  for (int i = 0; i <= inv.i_max; ++i) inv.t.push_back({inv.betti.t(i), inv.betti.complete(i)});
  for (int n = 0; n <= inv.i_max; ++n) inv.reg.push_back(inv.reg_at(n));

  inv.pd_observed = inv.betti.observed_pd();
  bool all_exact = true;
  for (int i = 0; i <= inv.i_max && !inv.pd_exact; ++i) {
    if (!inv.t[i].exact) all_exact = false;
    if (all_exact && inv.t[i].value.is_neg_inf()) inv.pd_exact = true;
  }
  if (all_exact && inv.i_max == e) inv.pd_exact = true;

  for (int i = 0; i <= e; ++i) {
    Bounded x = inv.t_at(i), y = inv.t_at(i + 1);
    if (!x.exact || !y.exact) break;
    if (x.value >= y.value) {
      inv.m_R = i;
      break;
    }
  }

  for (int q = 1; q <= inv.i_max; ++q) {
    Bounded rq = inv.reg_at(q);
    if (!rq.exact || rq.value != ExtInt(1)) break;
    inv.nq = q;
  }
  if (inv.nq > 0 && inv.pd_exact && inv.nq >= inv.pd_observed) inv.nq_unbounded = true;

  if (meta.dim) {
    inv.dim = *meta.dim;
    inv.dim_declared = true;
  } else {
    auto est = krull_dim_estimate(a, std::max(2 * e, 8));
    if (est.stable) inv.dim = est.dim;
  }

  int n_max = inv.i_max + 1;
  auto preg = preg_R_k(a, n_max, std::nullopt, meta.koszul);
  inv.preg_certificate = preg.certificate;
  if (!preg.profile) {
    for (int n = 0; n <= n_max; ++n) {
      inv.preg_k.push_back({ExtInt(0), !preg.truncated});
      inv.t_k.push_back({ExtInt(n), !preg.truncated});
    }
  } else {
    Bounded run{ExtInt::neg_inf(), true};
    for (int n = 0; n <= n_max; ++n) {
      ExtInt tn = preg.profile->t(n);
      bool exact = preg.profile->complete(n);
      inv.t_k.push_back({tn, exact});
      run = max(run, Bounded{tn.is_finite() ? ExtInt(tn.value() - n) : tn, exact});
      // preg is monotone in n: a lower bound that is already positive stays informative.
      inv.preg_k.push_back(run);
    }
  }
  return inv;
}

// --- checks ---------------------------------------------------------------

namespace {

std::string str(const Bounded& b) { return b.to_string(); }
std::string str(int v) { return std::to_string(v); }

struct Recorder {
  const AuditOptions& opt;
  std::vector<CheckRecord>& out;

  bool wanted(const std::string& id) const {
    if (opt.only.empty()) return true;
    auto dot = id.find('.');
    return opt.only.count(id) || (dot != std::string::npos && opt.only.count(id.substr(0, dot)));
  }

  void add(CheckRecord rec) { out.push_back(std::move(rec)); }
};

/// A hypothesis on preg^R_n(k) = 0: verified, not met, or unresolved.
Verdict koszul_up_to(const AlgebraInvariants& inv, int n) {
  Bounded p = inv.preg_k_at(n);
  if (p.value > ExtInt(0)) return Verdict::hypothesis_not_met;
  return p.exact ? Verdict::verified : Verdict::truncated;
}

bool binomial_invertible(std::uint32_t p, int n, int k) { return p == 0 || binom_mod(n, k, p) != 0; }

CheckRecord make(const std::string& id, const std::string& statement,
                 std::vector<std::pair<std::string, std::string>> params) {
  CheckRecord r;
  r.id = id;
  r.statement = statement;
  r.params = std::move(params);
  return r;
}

/// Fills a record for lhs <= rhs under a hypothesis verdict.
void settle(CheckRecord& r, Verdict hypothesis, const Bounded& lhs, const Bounded& rhs) {
  r.witness.emplace_back("lhs", str(lhs));
  r.witness.emplace_back("rhs", str(rhs));
  if (hypothesis == Verdict::hypothesis_not_met) r.verdict = Verdict::hypothesis_not_met;
  else r.verdict = combine(compare_le(lhs, rhs), hypothesis);
}

void check_basic(const AlgebraInvariants& inv, int max_gen_degree, Recorder& rec) {
  if (rec.wanted("t0_t1")) {
    auto r = make("t0_t1", "t_0 = 0 and t_1 is the top generator degree of J", {});
    Bounded t1 = inv.t_at(1);
    ExtInt expect = max_gen_degree > 0 ? ExtInt(max_gen_degree) : ExtInt::neg_inf();
    r.witness = {{"t_0", str(inv.t_at(0))}, {"t_1", str(t1)}, {"generator_degree", expect.to_string()}};
    if (!t1.exact) r.verdict = Verdict::truncated;
    else r.verdict = inv.t_at(0).value == ExtInt(0) && t1.value == expect ? Verdict::verified : Verdict::violated;
    rec.add(r);
  }
  if (rec.wanted("reg_monotone")) {
    auto r = make("reg_monotone", "reg_n(R) <= reg_{n+1}(R)", {});
    r.verdict = Verdict::verified;
    for (int n = 0; n < inv.i_max; ++n) {
      Bounded x = inv.reg_at(n), y = inv.reg_at(n + 1);
      if (x.exact && y.exact && x.value > y.value) {
        r.verdict = Verdict::violated;
        r.witness = {{"n", str(n)}, {"reg_n", str(x)}, {"reg_n+1", str(y)}};
      }
    }
    rec.add(r);
  }
}

void check_kb(const AlgebraInvariants& inv, Recorder& rec) {
  if (!rec.wanted("koszul_degree_bound")) return;
  for (int i = 1; i <= inv.i_max; ++i) {
    auto r = make("koszul_degree_bound", "t_i(R) <= 2i when preg_{i+1}(k) = 0", {{"i", str(i)}});
    settle(r, koszul_up_to(inv, i + 1), inv.t_at(i), Bounded{ExtInt(2 * i), true});
    r.witness.emplace_back("preg_k", str(inv.preg_k_at(i + 1)));
    rec.add(r);
  }
}

int pd_limit(const AlgebraInvariants& inv) { return std::min(inv.pd_observed, inv.i_max); }

void check_subadditivity(const AlgebraInvariants& inv, Recorder& rec) {
  std::uint32_t p = inv.characteristic;
  int h = pd_limit(inv);
  for (int a = 1; a < h; ++a)
    for (int b = 1; a + b <= h; ++b) {
      bool inv_binom = binomial_invertible(p, a + b, b);
      Verdict hyp = inv_binom ? (inv.pd_exact ? Verdict::verified : Verdict::truncated) : Verdict::hypothesis_not_met;
      Bounded reg_a1 = inv.reg_at(a - 1);
      Bounded pk = inv.preg_k_at(a + b + 1);
      if (rec.wanted("subadditivity.ring")) {
        // M = R: preg^R(R) = 0 and t^S(M) = t(R).
        auto r = make("subadditivity.ring", "three-term bound on t_{a+b}(M) for M = R", {{"a", str(a)}, {"b", str(b)}});
        Bounded t1 = inv.t_at(a) + inv.t_at(b);
        Bounded t2 = reg_a1 + (a + b);
        Bounded t3 = reg_a1 + inv.reg_at(b - 1) + pk + (a + b + 1);
        settle(r, hyp, inv.t_at(a + b), max(max(t1, t2), t3));
        r.witness.insert(r.witness.end(), {{"t_a+t_b", str(t1)}, {"second", str(t2)}, {"third", str(t3)}});
        rec.add(r);
      }
      if (rec.wanted("subadditivity.residue") && a + b <= inv.e) {
        // M = k: t^S_i(k) = i for i <= e, reg^S_{b-1}(k) = 0.
        auto r = make("subadditivity.residue", "three-term bound on t_{a+b}(M) for M = k", {{"a", str(a)}, {"b", str(b)}});
        Bounded t1 = inv.t_at(a) + b;
        Bounded t2 = reg_a1 + inv.preg_k_at(a + b) + (a + b);
        Bounded t3 = reg_a1 + Bounded{ExtInt(0), true} + pk + (a + b + 1);
        settle(r, hyp, Bounded{ExtInt(a + b), true}, max(max(t1, t2), t3));
        rec.add(r);
      }
      if (rec.wanted("subadditivity.linear")) {
        auto r = make("subadditivity.linear", "t_{a+b}(R) <= max{t_a + t_b, reg_{a-1} + reg_{b-1} + a + b + 1} when k is linear through a+b+1",
                      {{"a", str(a)}, {"b", str(b)}});
        Bounded rhs = max(inv.t_at(a) + inv.t_at(b), reg_a1 + inv.reg_at(b - 1) + (a + b + 1));
        settle(r, inv_binom ? combine(koszul_up_to(inv, a + b + 1), hyp) : Verdict::hypothesis_not_met, inv.t_at(a + b),
               rhs);
        rec.add(r);
      }
    }
}

void check_koszul_subadditivity(const AlgebraInvariants& inv, Recorder& rec) {
  std::uint32_t p = inv.characteristic;
  for (int a = 1; a <= inv.i_max; ++a)
    for (int b = 1; a + b <= inv.i_max; ++b) {
      std::vector<std::pair<std::string, std::string>> params{{"a", str(a)}, {"b", str(b)}};
      Verdict hyp = Verdict::verified;
      std::string failing;
      if (!binomial_invertible(p, a + b, a)) {
        hyp = Verdict::hypothesis_not_met;
        failing = "binomial";
      } else if (!inv.m_R) {
        hyp = Verdict::truncated;
        failing = "m(R) undetermined";
      } else if (std::max(a, b) > *inv.m_R) {
        hyp = Verdict::hypothesis_not_met;
        failing = "max{a,b} > m(R)";
      } else {
        hyp = koszul_up_to(inv, a + b + 1);
        if (hyp != Verdict::verified) failing = "preg_{a+b+1}(k)";
      }
      auto note = [&](CheckRecord& r) {
        if (!failing.empty()) r.witness.emplace_back("hypothesis", failing);
        r.witness.emplace_back("m_R", inv.m_R ? str(*inv.m_R) : "undetermined");
      };
      if (rec.wanted("koszul_subadditivity.max")) {
        auto r = make("koszul_subadditivity.max", "t_{a+b} <= max{t_a + t_b, t_{a-1} + t_{b-1} + 3}", params);
        settle(r, hyp, inv.t_at(a + b), max(inv.t_at(a) + inv.t_at(b), inv.t_at(a - 1) + inv.t_at(b - 1) + 3));
        note(r);
        rec.add(r);
      }
      if (b == 1 && rec.wanted("koszul_subadditivity.step")) {
        auto r = make("koszul_subadditivity.step", "t_{a+1} <= t_a + 2", params);
        settle(r, hyp, inv.t_at(a + 1), inv.t_at(a) + 2);
        note(r);
        rec.add(r);
      }
      if (b >= 2 && rec.wanted("koszul_subadditivity.plus_one")) {
        auto r = make("koszul_subadditivity.plus_one", "t_{a+b} <= t_a + t_b + 1", params);
        settle(r, hyp, inv.t_at(a + b), inv.t_at(a) + inv.t_at(b) + 1);
        note(r);
        rec.add(r);
      }
    }
}

void check_partial_regularity(const AlgebraInvariants& inv, Recorder& rec) {
  for (int a = 1; a <= inv.i_max; ++a)
    for (int b = 1; a + b <= inv.i_max; ++b) {
      std::vector<std::pair<std::string, std::string>> params{{"a", str(a)}, {"b", str(b)}};
      Verdict hyp = is_good(inv.characteristic, a + b).good ? koszul_up_to(inv, a + b + 1) : Verdict::hypothesis_not_met;
      if (b == 1 && rec.wanted("partial_regularity.step")) {
        auto r = make("partial_regularity.step", "reg_{a+1} <= reg_a + 1", params);
        settle(r, hyp, inv.reg_at(a + 1), inv.reg_at(a) + 1);
        rec.add(r);
      }
      if (b >= 2 && rec.wanted("partial_regularity.max")) {
        auto r = make("partial_regularity.max", "reg_{a+b} <= max{reg_a + reg_b, reg_{a-1} + reg_{b-1} + 1}", params);
        settle(r, hyp, inv.reg_at(a + b),
               max(inv.reg_at(a) + inv.reg_at(b), inv.reg_at(a - 1) + inv.reg_at(b - 1) + 1));
        rec.add(r);
      }
    }
}

void check_conjecture(const AlgebraInvariants& inv, const IdealMetadata& meta, Recorder& rec) {
  int h = pd_limit(inv);
  for (int a = 1; a < h; ++a)
    for (int b = a; a + b <= h; ++b) {
      std::vector<std::pair<std::string, std::string>> params{{"a", str(a)}, {"b", str(b)}};
      if (rec.wanted("conjecture_subadditivity")) {
        auto r = make("conjecture_subadditivity", "t_{a+b} <= t_a + t_b when k is linear through a+b+1", params);
        r.conjectural = true;
        Verdict hyp = combine(koszul_up_to(inv, a + b + 1), inv.pd_exact ? Verdict::verified : Verdict::truncated);
        settle(r, hyp, inv.t_at(a + b), inv.t_at(a) + inv.t_at(b));
        rec.add(r);
      }
      if (rec.wanted("cm_weak_subadditivity")) {
        auto r = make("cm_weak_subadditivity", "t_{a+b} <= t_a + t_b + 1 for Cohen-Macaulay R linear through pd+1",
                      params);
        Verdict hyp = Verdict::verified;
        if (!meta.cohen_macaulay.value_or(false) || !binomial_invertible(inv.characteristic, a + b, a))
          hyp = Verdict::hypothesis_not_met;
        else if (!inv.pd_exact)
          hyp = Verdict::truncated;
        else
          hyp = koszul_up_to(inv, inv.pd_observed + 1);
        settle(r, hyp, inv.t_at(a + b), inv.t_at(a) + inv.t_at(b) + 1);
        rec.add(r);
      }
    }
}

int floor_bound(int i, int q) { return 2 * (i / (q + 1)) + (i % (q + 1) == 0 ? 0 : 1); }

void check_nq(const AlgebraInvariants& inv, Recorder& rec) {
  // Largest n >= 2 with preg_{n+1}(k) = 0 certified on the window.
  int n = 0;
  for (int m = 2; m <= inv.i_max; ++m)
    if (koszul_up_to(inv, m + 1) == Verdict::verified) n = m;
  int q_hi = inv.nq_unbounded ? inv.i_max : inv.nq;
  auto skipped = [&](const std::string& id, const std::string& statement, const std::string& why) {
    if (!rec.wanted(id)) return;
    auto r = make(id, statement, {});
    r.verdict = Verdict::hypothesis_not_met;
    r.witness = {{"hypothesis", why}, {"N_q", str(inv.nq)}, {"n", str(n)}};
    rec.add(r);
  };
  const std::string s1 = "t_i <= 2i - 1 for 2 <= i <= n under N_q, q >= 2";
  const std::string s2 = "t_i <= 2 floor(i/(q+1)) + i + [(q+1) does not divide i] when p is good for i";
  const std::string s3 = "reg_n <= 2 floor(n/(q+1)) + 1 when p is good for every i <= n";
  if (q_hi < 2 || n < 2) {
    std::string why = q_hi < 2 ? "N_q with q >= 2 not certified" : "preg_{n+1}(k) = 0 not certified for n >= 2";
    skipped("nq_bounds.gap", s1, why);
    skipped("nq_bounds.floor", s2, why);
    skipped("nq_bounds.regularity", s3, why);
    skipped("nq_conditional", "t_i <= ceil(i/q) + i given t_{i+q} <= t_i + t_q", why);
    return;
  }
  for (int q = 2; q <= q_hi; ++q) {
    for (int i = 2; i <= n; ++i) {
      if (rec.wanted("nq_bounds.gap")) {
        auto r = make("nq_bounds.gap", s1, {{"q", str(q)}, {"i", str(i)}, {"n", str(n)}});
        settle(r, Verdict::verified, inv.t_at(i), Bounded{ExtInt(2 * i - 1), true});
        rec.add(r);
      }
    }
    for (int i = 1; i <= n; ++i) {
      if (!rec.wanted("nq_bounds.floor")) break;
      auto r = make("nq_bounds.floor", s2, {{"q", str(q)}, {"i", str(i)}, {"n", str(n)}});
      Verdict hyp = is_good(inv.characteristic, i).good ? Verdict::verified : Verdict::hypothesis_not_met;
      settle(r, hyp, inv.t_at(i), Bounded{ExtInt(floor_bound(i, q) + i), true});
      rec.add(r);
    }
    if (rec.wanted("nq_bounds.regularity")) {
      auto r = make("nq_bounds.regularity", s3, {{"q", str(q)}, {"n", str(n)}});
      bool good = true;
      for (int i = 0; i <= n; ++i) good = good && is_good(inv.characteristic, i).good;
      settle(r, good ? Verdict::verified : Verdict::hypothesis_not_met, inv.reg_at(n),
             Bounded{ExtInt(2 * (n / (q + 1)) + 1), true});
      rec.add(r);
    }
    if (rec.wanted("nq_conditional")) {
      auto r = make("nq_conditional", "t_i <= ceil(i/q) + i and reg <= ceil(h/q) given t_{i+q} <= t_i + t_q",
                    {{"q", str(q)}});
      int h = inv.pd_observed;
      Verdict premise = inv.pd_exact ? Verdict::verified : Verdict::truncated;
      for (int i = 1; i <= h - q; ++i) {
        Verdict v = compare_le(inv.t_at(i + q), inv.t_at(i) + inv.t_at(q));
        if (v == Verdict::violated) premise = Verdict::hypothesis_not_met;
        else premise = combine(premise, v);
      }
      Verdict body = Verdict::verified;
      for (int i = 1; i <= h; ++i)
        body = combine(body, compare_le(inv.t_at(i), Bounded{ExtInt((i + q - 1) / q + i), true}));
      body = combine(body, compare_le(inv.reg_at(h), Bounded{ExtInt((h + q - 1) / q), true}));
      r.verdict = premise == Verdict::hypothesis_not_met ? premise : combine(premise, body);
      r.witness = {{"pd", str(h)}, {"reg", str(inv.reg_at(h))}};
      rec.add(r);
    }
  }
}

void check_m_bounds(const AlgebraInvariants& inv, Recorder& rec) {
  if (!rec.wanted("m_bounds")) return;
  auto r = make("m_bounds", "e - dim R <= m(R) <= pd R", {});
  r.witness = {{"e", str(inv.e)},
               {"dim", inv.dim ? str(*inv.dim) : "undetermined"},
               {"m_R", inv.m_R ? str(*inv.m_R) : "undetermined"},
               {"pd", (inv.pd_exact ? "" : ">=") + str(inv.pd_observed)}};
  if (!inv.dim || !inv.m_R) {
    r.verdict = Verdict::truncated;
  } else {
    bool lower = inv.e - *inv.dim <= *inv.m_R;
    bool upper = *inv.m_R <= inv.pd_observed;
    if (!lower || (!upper && inv.pd_exact)) r.verdict = Verdict::violated;
    else r.verdict = inv.pd_exact ? Verdict::verified : Verdict::truncated;
  }
  rec.add(r);
}

template <class F>
void check_hilbert(const QuotientAlgebra<F>& a, const AlgebraInvariants& inv, Recorder& rec) {
  if (!rec.wanted("hilbert_numerator")) return;
  auto r = make("hilbert_numerator", "sum_i (-1)^i beta_{i,j} equals the coefficient of t^j in HF(t)(1-t)^e", {});
  int e = inv.e;
  int jmax = inv.i_max + inv.row_max;
  // Normal forms in degree j cost about dim S_j; stay where that is modest.
  auto monomials = [e](int d) {
    double c = 1;
    for (int k = 1; k < e; ++k) c = c * (d + k) / k;
    return c;
  };
  while (jmax > 2 && monomials(jmax) > 20000) --jmax;
  auto hf = a.hilbert_function(jmax);
  int checked = 0;
  r.verdict = Verdict::verified;
  for (int j = 0; j <= jmax; ++j) {
    long long lhs = 0;
    bool known = true;
    for (int i = 0; i <= std::min(e, j) && known; ++i) {
      if (i > inv.i_max) {
        known = false;
        break;
      }
      try {
        long long b = static_cast<long long>(inv.betti.at(i, j));
        lhs += i % 2 ? -b : b;
      } catch (const TruncationError&) {
        known = false;
      }
    }
    if (!known) continue;
    long long rhs = 0, c = 1;
    for (int k = 0; k <= e && k <= j; ++k) {
      rhs += (k % 2 ? -c : c) * static_cast<long long>(hf[j - k]);
      c = c * (e - k) / (k + 1);
    }
    ++checked;
    if (lhs != rhs) {
      r.verdict = Verdict::violated;
      r.witness = {{"j", str(j)}, {"alternating_sum", std::to_string(lhs)}, {"numerator", std::to_string(rhs)}};
      break;
    }
  }
  if (checked == 0) r.verdict = Verdict::truncated;
  r.witness.emplace_back("degrees_checked", str(checked));
  rec.add(r);
}

template <class F>
void check_d_squared(const QuotientAlgebra<F>& a, const AlgebraInvariants& inv, Recorder& rec) {
  if (!rec.wanted("d_squared")) return;
  auto r = make("d_squared", "consecutive Koszul differentials compose to zero", {});
  auto m = algebra_module(a, inv.row_max + 2);
  KoszulComplex<F> k(m);
  r.verdict = Verdict::verified;
  int strands = 0;
  for (int i = 2; i <= std::min(inv.i_max, 4); ++i)
    for (int j = i; j <= i + inv.row_max; ++j) {
      try {
        if (!k.differential(i - 1, j).multiply(k.differential(i, j)).is_zero()) {
          r.verdict = Verdict::violated;
          r.witness = {{"i", str(i)}, {"j", str(j)}};
        }
        ++strands;
      } catch (const TruncationError&) {
      }
    }
  r.witness.emplace_back("strands", str(strands));
  rec.add(r);
}

template <class F>
void check_heavy(const QuotientAlgebra<F>& a, const AlgebraInvariants& inv, const IdealMetadata& meta,
                 Recorder& rec) {
  int e = inv.e;
  int jspan = e >= 5 ? 1 : 2;
  if (rec.wanted("splitting") || rec.wanted("gamma_surjective")) {
    ProductContext<F> ctx(a, nullptr, 3 + jspan + 2);
    for (auto [sa, sb] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
      if (sa + sb > e) continue;
      for (int j = sa + sb; j <= sa + sb + jspan; ++j) {
        std::vector<std::pair<std::string, std::string>> params{{"a", str(sa)}, {"b", str(sb)}, {"j", str(j)}};
        if (rec.wanted("splitting")) {
          auto s = verify_splitting(ctx, sa, sb, j);
          auto r = make("splitting", "alpha o beta = C(a+b, a) id on Z_{a+b}(K)_j", params);
          r.verdict = s.verdict;
          r.witness = {{"binomial", s.binomial}, {"cycles", str(static_cast<int>(s.cycles))}};
          if (!s.detail.empty()) r.witness.emplace_back("detail", s.detail);
          rec.add(r);
        }
        if (rec.wanted("gamma_surjective")) {
          auto g = gamma_surjectivity_check(ctx, sa, sb, j);
          auto r = make("gamma_surjective", "alpha(Z(K (x) Z_b)) spans H_{a+b} modulo products", params);
          r.verdict = g.verdict;
          r.witness = {{"cycles", str(static_cast<int>(g.cycles))},
                       {"boundaries", str(static_cast<int>(g.boundaries))},
                       {"products", str(static_cast<int>(g.products))},
                       {"image", str(static_cast<int>(g.image))}};
          rec.add(r);
        }
      }
    }
  }
  if (rec.wanted("decomposable_homology")) {
    int n = std::min(e, 3);
    auto d = decomposability_report(a, n, 2 * n + 2, meta.koszul);
    auto r = make("decomposable_homology", "H_i(K)_j = 0 for j > 2i and H_i(K)_{2i} = (H_1(K)_2)^i, i <= n",
                  {{"n", str(n)}});
    r.verdict = d.verdict;
    r.witness.emplace_back("hypothesis", d.hypothesis);
    for (const auto& row : d.rows)
      r.witness.emplace_back("i=" + str(row.i), str(static_cast<int>(row.h_diagonal)) + "/" +
                                                    str(static_cast<int>(row.power_dim)) + " through " +
                                                    str(row.checked_through));
    if (!d.detail.empty()) r.witness.emplace_back("detail", d.detail);
    rec.add(r);
  }
  if (rec.wanted("cycle_sequence")) {
    int jm = e >= 5 ? 4 : 5;
    auto r_mod = algebra_module(a, jm + 1);
    for (auto [sa, sb] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}}) {
      auto s = check_serra_sequence(a, r_mod, sa, sb, jm);
      auto r = make("cycle_sequence", "0 -> Tor_1(B_{a-1},N) -> Z_a (x) N -> Z_a(K (x) N) -> Tor_1(C_{a-1},N) -> 0 is exact",
                    {{"a", str(sa)}, {"b", str(sb)}, {"j_max", str(jm)}});
      r.verdict = s.verdict;
      r.witness.emplace_back("degrees", str(static_cast<int>(s.degrees.size())));
      r.witness.emplace_back("shifted_isomorphism", s.shifted_isomorphism ? "yes" : "no");
      if (!s.detail.empty()) r.witness.emplace_back("detail", s.detail);
      rec.add(r);
    }
  }
  if (rec.wanted("tor_top")) {
    // top Tor_i(L, N) <= top(L) + t_i(N), with L = R/m^s of finite top and N in {k, R}.
    int i_hi = std::min(e, 3);
    int tk_max = i_hi;
    for (int i = 0; i <= i_hi && i < static_cast<int>(inv.t_k.size()); ++i)
      if (inv.t_k[i].value.is_finite()) tk_max = std::max(tk_max, inv.t_k[i].value.value());
    for (int s = 1; s <= 2; ++s) {
      Presentation pl;
      pl.generator_degrees = {0};
      for (const auto& mu : monomial_basis(e, s)) {
        pl.relation_degrees.push_back(s);
        pl.relations.push_back({Polynomial::monomial(mu)});
      }
      int window = s - 1 + tk_max + 2;
      auto l = linearize_module(a, pl, window + 1);
      for (int which = 0; which < 2; ++which) {
        auto n = which == 0 ? residue_field(a) : algebra_module(a, window + 1);
        auto tor = tor_between(a, l, n, i_hi, window);
        for (int i = 0; i <= i_hi; ++i) {
          auto r = make("tor_top", "top Tor_i(L, N) <= top(L) + t_i(N)",
                        {{"L", "R/m^" + str(s)}, {"N", which == 0 ? "k" : "R"}, {"i", str(i)}});
          Bounded t_n = i == 0 ? Bounded{ExtInt(0), true} : Bounded{ExtInt::neg_inf(), true};
          if (which == 0) t_n = i < static_cast<int>(inv.t_k.size()) ? inv.t_k[i] : Bounded{ExtInt(i), false};
          Bounded lhs{tor.top(i), true};
          Bounded rhs = Bounded{ExtInt(s - 1), true} + t_n;
          settle(r, Verdict::verified, lhs, rhs);
          // The window must reach past the bound for the observed top to mean anything.
          if (rhs.value.is_finite() && rhs.value.value() >= window) r.verdict = combine(r.verdict, Verdict::truncated);
          if (!t_n.exact && r.verdict == Verdict::verified) r.verdict = Verdict::truncated;
          r.witness.emplace_back("window", str(window));
          rec.add(r);
        }
      }
    }
  }
  if (rec.wanted("cycle_betti") && a.is_zero_ideal()) {
    auto m = algebra_module(a, 6);
    auto c = cycle_betti_inequality(a, m, 1, 1, 5);
    auto r = make("cycle_betti", "beta_{a,j}(Z_b(K^M)) >= beta_{a+b,j}(M) over S", {{"a", "1"}, {"b", "1"}});
    r.verdict = c.verdict;
    rec.add(r);
  }
}

}  // namespace

// --- reports --------------------------------------------------------------

const std::vector<std::string>& audit_check_ids() {
  static const std::vector<std::string> ids = {
      "t0_t1",           "reg_monotone",       "koszul_degree_bound",      "subadditivity",
      "koszul_subadditivity", "partial_regularity", "conjecture_subadditivity", "cm_weak_subadditivity",
      "nq_bounds",       "nq_conditional",     "m_bounds",                 "hilbert_numerator",
      "d_squared",       "splitting",          "gamma_surjective",         "decomposable_homology",
      "cycle_sequence",  "tor_top",            "cycle_betti"};
  return ids;
}

template <class F>
AuditReport run_audit(const QuotientAlgebra<F>& a, const IdealDescription& ideal, const AuditOptions& opt) {
  AuditReport rep;
  rep.name = ideal.metadata.name;
  rep.characteristic = a.field().characteristic();
  rep.seed = ideal.metadata.seed;
  rep.ideal_json = ideal_to_json(ideal);
  rep.invariants = compute_invariants(a, ideal.metadata, opt);
  const auto& inv = rep.invariants;
  Recorder rec{opt, rep.records};
  check_basic(inv, a.is_zero_ideal() ? 0 : a.max_generator_degree(), rec);
  check_kb(inv, rec);
  check_subadditivity(inv, rec);
  check_koszul_subadditivity(inv, rec);
  check_partial_regularity(inv, rec);
  check_conjecture(inv, ideal.metadata, rec);
  check_nq(inv, rec);
  check_m_bounds(inv, rec);
  check_hilbert(a, inv, rec);
  check_d_squared(a, inv, rec);
  if (inv.e <= opt.heavy_max_vars) check_heavy(a, inv, ideal.metadata, rec);
  return rep;
}

AuditReport run_audit(const IdealDescription& ideal, const AuditOptions& opt) {
  return visit_field(ideal.field, [&](auto k) {
    using F = decltype(k);
    QuotientAlgebra<F> a(k, ideal.num_vars(), ideal.generators);
    return run_audit(a, ideal, opt);
  });
}

Verdict AuditReport::overall() const {
  Verdict v = Verdict::verified;
  for (const auto& r : records)
    if (!r.conjectural && r.verdict != Verdict::hypothesis_not_met) v = combine(v, r.verdict);
  return v;
}

std::vector<const CheckRecord*> AuditReport::conjecture_counterexamples() const {
  std::vector<const CheckRecord*> out;
  for (const auto& r : records)
    if (r.conjectural && r.verdict == Verdict::violated) out.push_back(&r);
  return out;
}

int AuditReport::exit_code() const {
  switch (overall()) {
    case Verdict::violated: return 2;
    case Verdict::truncated: return 3;
    default: return 0;
  }
}

namespace {

Json bounded_json(const Bounded& b) {
  Json j;
  j["value"] = b.value.to_string();
  j["exact"] = b.exact;
  return j;
}

Json pairs_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Json j = Json::object();
  for (const auto& [k, v] : pairs) j[k] = v;
  return j;
}

}  // namespace

std::string AuditReport::to_json() const {
  const auto& inv = invariants;
  Json doc;
  doc["name"] = name;
  doc["characteristic"] = characteristic;
  if (seed) doc["seed"] = *seed;
  doc["ideal"] = Json::parse(ideal_json);
  doc["window"] = {{"i_max", inv.i_max}, {"row_max", inv.row_max}};
  Json iv;
  iv["e"] = inv.e;
  iv["dim"] = inv.dim ? Json(*inv.dim) : Json(nullptr);
  iv["dim_declared"] = inv.dim_declared;
  iv["t"] = Json::array();
  for (const auto& t : inv.t) iv["t"].push_back(bounded_json(t));
  iv["reg"] = Json::array();
  for (const auto& r : inv.reg) iv["reg"].push_back(bounded_json(r));
  iv["m_R"] = inv.m_R ? Json(*inv.m_R) : Json(nullptr);
  iv["pd"] = {{"value", inv.pd_observed}, {"exact", inv.pd_exact}};
  iv["N_q"] = inv.nq_unbounded ? Json("all") : Json(inv.nq);
  iv["preg_k"] = Json::array();
  for (const auto& p : inv.preg_k) iv["preg_k"].push_back(bounded_json(p));
  iv["preg_certificate"] = inv.preg_certificate;
  iv["groebner"] = {{"certified", inv.gb.certified}, {"degree", inv.gb.gb_degree}};
  iv["betti"] = Json::parse(inv.betti.to_json());
  doc["invariants"] = iv;
  Json checks = Json::array();
  for (const auto& r : records) {
    Json c;
    c["id"] = r.id;
    c["statement"] = r.statement;
    c["params"] = pairs_json(r.params);
    c["verdict"] = to_string(r.verdict);
    c["witness"] = pairs_json(r.witness);
    if (r.conjectural) c["conjectural"] = true;
    checks.push_back(c);
  }
  doc["checks"] = checks;
  std::map<std::string, int> counts;
  for (const auto& r : records) ++counts[to_string(r.verdict)];
  doc["summary"] = counts;
  doc["overall"] = to_string(overall());
  Json ce = Json::array();
  for (const auto* r : conjecture_counterexamples())
    ce.push_back({{"check", pairs_json(r->params)}, {"ideal", Json::parse(ideal_json)}, {"betti", Json::parse(inv.betti.to_json())}});
  doc["counterexamples"] = ce;
  return doc.dump(2) + "\n";
}

std::string AuditReport::summary_table() const {
  std::map<std::string, std::array<int, 4>> rows;
  std::vector<std::string> order;
  for (const auto& r : records) {
    if (!rows.count(r.id)) order.push_back(r.id);
    ++rows[r.id][static_cast<int>(r.verdict)];
  }
  std::ostringstream os;
  os << (name.empty() ? "(unnamed)" : name) << "  char " << characteristic << "\n";
  const auto& inv = invariants;
  os << "t:";
  for (const auto& t : inv.t) os << ' ' << t.to_string();
  os << "\nreg:";
  for (const auto& r : inv.reg) os << ' ' << r.to_string();
  os << "\nm(R): " << (inv.m_R ? std::to_string(*inv.m_R) : "undetermined") << "  pd: " << (inv.pd_exact ? "" : ">=")
     << inv.pd_observed << "  N_q: " << (inv.nq_unbounded ? "all" : std::to_string(inv.nq))
     << "  preg(k): " << inv.preg_certificate << "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-30s %9s %9s %9s %9s\n", "check", "verified", "violated", "not-met", "truncated");
  os << line;
  for (const auto& id : order) {
    const auto& c = rows[id];
    std::snprintf(line, sizeof line, "%-30s %9d %9d %9d %9d\n", id.c_str(), c[0], c[1], c[2], c[3]);
    os << line;
  }
  os << "overall: " << to_string(overall()) << "\n";
  return os.str();
}

template AlgebraInvariants compute_invariants(const QuotientAlgebra<PrimeField>&, const IdealMetadata&,
                                              const AuditOptions&);
template AlgebraInvariants compute_invariants(const QuotientAlgebra<RationalField>&, const IdealMetadata&,
                                              const AuditOptions&);
template AuditReport run_audit(const QuotientAlgebra<PrimeField>&, const IdealDescription&, const AuditOptions&);
template AuditReport run_audit(const QuotientAlgebra<RationalField>&, const IdealDescription&, const AuditOptions&);

}  // namespace syz
