// Acceptance run: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "syzygy/audit.hpp"
#include "syzygy/corpus.hpp"
#include "syzygy/homprod.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/numtheory.hpp"
#include "syzygy/resolve.hpp"
#include "syzygy/template.hpp"

using namespace syz;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& ex) {
    o.fail(std::string("exception: ") + ex.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) o.fail("over time limit " + std::to_string(limit_s) + " s");
  if (!o.pass) ++failures;
  std::printf("criterion %2d: %s  %-48s %8.2f s", n, o.pass ? "PASS" : "FAIL", title.c_str(), secs);
  if (!o.detail.empty()) std::printf("  [%s]", o.detail.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

template <class F>
QuotientAlgebra<F> algebra(const F& f, const IdealDescription& id) {
  return QuotientAlgebra<F>(f, id.num_vars(), id.generators);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_legend(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.rfind("#", 0) != 0) out += line + "\n";
  return out;
}

// 1. Lucas and good primes against Pascal's triangle.
Outcome good_primes() {
  Outcome o;
  for (std::uint32_t p = 2; p <= 47; ++p) {
    if (!is_prime(p)) continue;
    std::vector<std::uint32_t> row{1};
    for (int n = 0; n <= 300; ++n) {
      if (n > 0) {
        std::vector<std::uint32_t> next(n + 1, 1);
        for (int i = 1; i < n; ++i) next[i] = (row[i - 1] + row[i]) % p;
        row = std::move(next);
      }
      bool all = true;
      for (auto x : row) all = all && x % p != 0;
      if (is_good(p, n).good != all) o.fail("p=" + std::to_string(p) + " n=" + std::to_string(n));
    }
  }
  for (int n = 1; n <= 300; ++n) {
    int count = 0;
    for (std::uint32_t p = 2; p <= static_cast<std::uint32_t>(n); ++p)
      if (is_prime(p) && is_good(p, n).good) ++count;
    if (count > 1) o.fail("two good primes for n=" + std::to_string(n));
  }
  std::vector<std::pair<int, std::uint32_t>> bottom{{5, 3}, {7, 2}, {8, 3}, {9, 5}, {13, 7}, {14, 5}, {15, 2}};
  for (auto [n, p] : bottom)
    if (exceptional_prime(n) != p) o.fail("bottom row at column " + std::to_string(n));
  return o;
}

// 2. alpha o beta = C(a+b, a) id.
template <class F>
void splitting_on(const F& f, const CorpusEntry& entry, Outcome& o, int& checked) {
  auto a = algebra(f, entry.ideal);
  auto k = residue_field(a);
  for (int use_k = 0; use_k <= 1; ++use_k) {
    ProductContext<F> ctx(a, use_k ? &k : nullptr, 10);
    int e = a.num_vars();
    for (int s = 2; s <= std::min(4, e); ++s)
      for (int sa = 1; sa < s; ++sa)
        for (int j = s; j <= 8; ++j) {
          auto r = verify_splitting(ctx, sa, s - sa, j);
          ++checked;
          if (r.verdict != Verdict::verified)
            o.fail(entry.ideal.metadata.name + " char " + std::to_string(f.characteristic()) + " a=" +
                   std::to_string(sa) + " b=" + std::to_string(s - sa) + " j=" + std::to_string(j) + " " +
                   to_string(r.verdict) + " " + r.detail);
        }
  }
}

Outcome splitting() {
  Outcome o;
  std::vector<CorpusEntry> algebras{edge_ideal(Graph{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}),
                                    edge_ideal(Graph{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}}),
                                    segre_presentation({1, 1})};
  int checked = 0;
  for (const auto& entry : algebras) {
    splitting_on(RationalField{}, entry, o, checked);
    splitting_on(PrimeField(2), entry, o, checked);
    splitting_on(PrimeField(3), entry, o, checked);
  }
  if (o.pass) o.detail = std::to_string(checked) + " strands";
  return o;
}

// 3. Betti golden tables.
Outcome golden_tables() {
  Outcome o;
  auto expect = [&](const std::string& label, const BettiTable& b, int i, int j, std::size_t v) {
    if (b.at(i, j) != v)
      o.fail(label + " beta_" + std::to_string(i) + "," + std::to_string(j) + " = " + std::to_string(b.at(i, j)));
  };
  {
    auto ci = complete_intersection_quadrics(2, 2);
    auto inv = compute_invariants(algebra(RationalField{}, ci.ideal), ci.ideal.metadata, {});
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 6; ++j) expect("ci", inv.betti, i, j, i == 0 && j == 0 ? 1 : (j == 2 * i ? (i == 1 ? 2 : 1) : 0));
  }
  const std::vector<std::tuple<int, int, std::size_t>> gor{
      {0, 0, 1}, {1, 2, 10}, {2, 3, 16}, {3, 5, 16}, {4, 6, 10}, {5, 8, 1}};
  for (std::uint64_t seed : {1u, 2u}) {
    auto g = apolarity_gorenstein(seed);
    auto inv = compute_invariants(algebra(PrimeField(kGenericPrime), g.ideal), g.ideal.metadata, {});
    std::string label = "gorenstein seed " + std::to_string(seed);
    for (int i = 0; i <= 5; ++i)
      for (int j = i; j <= i + 3; ++j) {
        std::size_t want = 0;
        for (auto [gi, gj, v] : gor)
          if (gi == i && gj == j) want = v;
        expect(label, inv.betti, i, j, want);
      }
  }
  for (int e : {4, 5, 6}) {
    auto g = generic_quadrics(e, e + 1, 1);
    AuditOptions opt;
    opt.i_max = 2;
    auto inv = compute_invariants(algebra(PrimeField(kGenericPrime), g.ideal), g.ideal.metadata, opt);
    auto t2 = inv.t_at(2);
    if (!t2.exact || t2.value != ExtInt(e / 2 + 2))
      o.fail("generic e=" + std::to_string(e) + " t_2 " + t2.to_string());
  }
  return o;
}

// 4. Tor over S against Koszul homology.
Outcome cross_oracle() {
  Outcome o;
  std::vector<CorpusEntry> mods{edge_ideal(Graph{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}),
                                power_hypersurface(2, 3),
                                complete_intersection_quadrics(3, 3),
                                veronese_presentation(2, 1),
                                segre_presentation({1, 1})};
  int cells = 0;
  for (const auto& entry : mods) {
    int e = entry.ideal.num_vars();
    QuotientAlgebra<RationalField> s(RationalField{}, e, {});
    auto r = algebra(RationalField{}, entry.ideal);
    auto rm = algebra_module(r, 8);
    auto tor = tor_between(s, residue_field(s), rm, e, 7);
    KoszulComplex<RationalField> k(rm);
    for (int i = 0; i <= e; ++i)
      for (int j = i; j <= 7; ++j)
        if (tor.known(i, j)) {
          ++cells;
          if (tor.at(i, j) != k.betti(i, j))
            o.fail(entry.ideal.metadata.name + " (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
  }
  o.detail = std::to_string(cells) + " cells";
  return o;
}

// 5. Decomposable Koszul homology of quadratic monomial algebras.
Outcome decomposable() {
  Outcome o;
  int count = 0;
  for (int v = 1; v <= 5; ++v)
    for (const auto& g : all_graphs(v)) {
      auto entry = edge_ideal(g);
      auto a = algebra(RationalField{}, entry.ideal);
      auto d = decomposability_report(a, v, 2 * v + 2);
      ++count;
      if (d.verdict != Verdict::verified)
        o.fail(entry.ideal.metadata.name + " " + to_string(d.verdict) + " " + d.detail);
    }
  if (o.pass) o.detail = std::to_string(count) + " graphs";
  return o;
}

// 6. Inequality audits on the corpus, and the conjecture on small graphs.
std::vector<AuditReport> corpus_reports;

Outcome audits() {
  Outcome o;
  std::size_t records = 0;
  for (const auto& entry : builtin_corpus()) {
    auto rep = run_audit(entry.ideal);
    for (const auto& r : rep.records) {
      ++records;
      if (r.verdict == Verdict::violated || r.verdict == Verdict::truncated)
        o.fail(rep.name + " " + r.id + " " + to_string(r.verdict));
    }
    corpus_reports.push_back(std::move(rep));
  }
  std::size_t conj = 0;
  AuditOptions opt;
  opt.only = {"conjecture_subadditivity"};
  opt.heavy_max_vars = 0;
  for (std::uint32_t p : {0u, 2u, 3u, 5u})
    for (int v = 1; v <= 6; ++v)
      for (const auto& g : all_graphs(v)) {
        auto rep = run_audit(edge_ideal(g, p).ideal, opt);
        for (const auto& r : rep.records) {
          ++conj;
          if (r.verdict != Verdict::verified)
            o.fail(rep.name + " char " + std::to_string(p) + " conjecture " + to_string(r.verdict));
        }
      }
  o.detail = std::to_string(records) + " corpus records, " + std::to_string(conj) + " conjecture records";
  return o;
}

// 7. d^2 = 0, exterior identities, Hilbert numerator.
template <class F>
void d_squared(const F& f, const IdealDescription& id, Outcome& o, int& strands) {
  auto a = algebra(f, id);
  int e = a.num_vars();
  int top = e <= 6 ? 5 : 3;
  auto m = algebra_module(a, top);
  KoszulComplex<F> k(m);
  for (int i = 2; i <= e; ++i)
    for (int j = i; j <= i + top - 2; ++j) {
      try {
        ++strands;
        if (!k.differential(i - 1, j).multiply(k.differential(i, j)).is_zero())
          o.fail(id.metadata.name + " d^2 at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      } catch (const TruncationError&) {
        --strands;
      }
    }
}

Outcome structured_maps() {
  Outcome o;
  int strands = 0;
  for (const auto& entry : builtin_corpus()) {
    if (entry.ideal.num_vars() > 8) continue;
    visit_field(entry.ideal.field, [&](auto f) {
      d_squared(f, entry.ideal, o, strands);
      return 0;
    });
  }
  for (int e = 0; e <= 5; ++e)
    if (!check_exterior_identities(e).all()) o.fail("exterior identities at e=" + std::to_string(e));
  for (const auto& rep : corpus_reports)
    for (const auto& r : rep.records)
      if (r.id == "hilbert_numerator" && r.verdict != Verdict::verified)
        o.fail(rep.name + " hilbert numerator " + to_string(r.verdict));
  if (corpus_reports.empty()) o.fail("no corpus reports");
  if (o.pass) o.detail = std::to_string(strands) + " strands";
  return o;
}

// 8. Templates.
Outcome templates() {
  Outcome o;
  std::filesystem::path dir(SYZYGY_GOLDEN_DIR);
  if (strip_legend(render_template(2, 14, 9).to_text()) != read_file(dir / "template_q2.txt")) o.fail("q=2 grid");
  if (strip_legend(render_template(3, 17, 9).to_text()) != read_file(dir / "template_q3.txt")) o.fail("q=3 grid");
  return o;
}

// 9. Segre P1 x P1 x P1.
Outcome segre111() {
  Outcome o;
  auto s = segre_presentation({1, 1, 1}, kGenericPrime);
  auto a = algebra(PrimeField(kGenericPrime), s.ideal);
  for (int d = 0; d <= 6; ++d)
    if (a.dim(d) != static_cast<std::size_t>((d + 1) * (d + 1) * (d + 1))) o.fail("HF at " + std::to_string(d));
  auto rep = run_audit(s.ideal);
  const auto& inv = rep.invariants;
  for (int i = 1; i <= 3; ++i) {
    auto t = inv.t_at(i);
    if (!t.exact || t.value != ExtInt(i + 1)) o.fail("t_" + std::to_string(i) + " = " + t.to_string());
  }
  if (inv.nq < 3 && !inv.nq_unbounded) o.fail("N_3 not certified");
  for (int i = 0; i <= 4; ++i)
    if (!inv.betti.complete(i)) o.fail("column " + std::to_string(i) + " incomplete");
  bool m_ok = false;
  for (const auto& r : rep.records)
    if (r.id == "m_bounds") m_ok = r.verdict == Verdict::verified && inv.m_R && *inv.m_R == 4 && inv.dim == 4;
  if (!m_ok) o.fail("m(R) bounds");
  return o;
}

// 10. Veronese q = 2.
Outcome veronese() {
  Outcome o;
  for (int n : {1, 2}) {
    auto v = veronese_presentation(2, n);
    auto rep = run_audit(v.ideal);
    const auto& inv = rep.invariants;
    auto reg = inv.reg_at(inv.i_max);
    if (!reg.exact || reg.value != ExtInt(n)) o.fail("n=" + std::to_string(n) + " reg " + reg.to_string());
    if (inv.nq < 2 && !inv.nq_unbounded) o.fail("n=" + std::to_string(n) + " N_2 not certified");
  }
  return o;
}

}  // namespace

int main() {
  criterion(1, "Lucas / good primes", 1.0, good_primes);
  criterion(2, "splitting alpha o beta = C(a+b,a) id", 60.0, splitting);
  criterion(3, "Betti golden tables", 300.0, golden_tables);
  criterion(4, "Tor over S vs Koszul homology", 0, cross_oracle);
  criterion(5, "decomposable homology, graphs on <= 5 vertices", 600.0, decomposable);
  criterion(6, "inequality audits and conjecture", 0, audits);
  criterion(7, "d^2, exterior identities, Hilbert numerator", 0, structured_maps);
  criterion(8, "Betti templates q=2, q=3", 0, templates);
  criterion(9, "Segre (1,1,1)", 600.0, segre111);
  criterion(10, "Veronese q=2, n in {1,2}", 0, veronese);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
