#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "syzygy/audit.hpp"
#include "syzygy/corpus.hpp"

using namespace syz;

namespace {

// Number of graphs on v vertices up to isomorphism, by Burnside's lemma over
// the action of S_v on vertex pairs.
long long burnside_graph_count(int v) {
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
  long long fixed = 0, group = 0;
  do {
    std::vector<bool> seen(pairs.size());
    int cycles = 0;
    for (std::size_t s = 0; s < pairs.size(); ++s) {
      if (seen[s]) continue;
      ++cycles;
      std::size_t c = s;
      while (!seen[c]) {
        seen[c] = true;
        int x = perm[pairs[c].first], y = perm[pairs[c].second];
        std::pair<int, int> img{std::min(x, y), std::max(x, y)};
        c = std::find(pairs.begin(), pairs.end(), img) - pairs.begin();
      }
    }
    fixed += 1LL << cycles;
    ++group;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return fixed / group;
}

Polynomial mono(const Exponents& m) { return Polynomial::monomial(m); }

}  // namespace

TEST_CASE("graph enumeration up to isomorphism") {
  for (int v = 1; v <= 6; ++v)
    CHECK(static_cast<long long>(all_graphs(v).size()) == burnside_graph_count(v));
  CHECK(all_graphs(4).size() == 11);
  auto g = graph_from_mask(4, edge_mask(Graph{4, {{0, 1}, {2, 3}}}));
  CHECK(g.edges.size() == 2);
  CHECK(canonical_form(Graph{3, {{0, 1}}}) == canonical_form(Graph{3, {{1, 2}}}));
  CHECK(independence_number(Graph{4, {{0, 1}, {1, 2}, {2, 3}}}) == 2);
}

TEST_CASE("edge ideals") {
  auto path = edge_ideal(Graph{3, {{0, 1}, {1, 2}}});
  REQUIRE(path.ideal.generators.size() == 2);
  CHECK(path.ideal.generators[0] == mono({1, 1, 0}));
  CHECK(path.ideal.generators[1] == mono({0, 1, 1}));
  CHECK(edge_ideal(Graph{3, {{0, 1}, {0, 2}, {1, 2}}}).ideal.generators.size() == 3);
}

TEST_CASE("toric presentations") {
  auto v21 = veronese_presentation(2, 1);
  REQUIRE(v21.ideal.generators.size() == 1);
  CHECK(v21.ideal.num_vars() == 3);
  CHECK(segre_presentation({1, 1}).ideal.generators.size() == 1);
  CHECK(segre_presentation({2, 1}).ideal.generators.size() == 3);
  auto s111 = segre_presentation({1, 1, 1}, kGenericPrime);
  CHECK(s111.ideal.num_vars() == 8);
  CHECK(s111.ideal.generators.size() == 9);
  CHECK(veronese_presentation(3, 1).ideal.num_vars() == 10);
  CHECK(veronese_presentation(3, 1).ideal.generators.size() == 27);
  CHECK(veronese_presentation(2, 2).ideal.num_vars() == 10);
  CHECK_THROWS(veronese_presentation(4, 4));
}

TEST_CASE("toric Hilbert functions have closed forms") {
  auto s111 = segre_presentation({1, 1, 1}, kGenericPrime);
  QuotientAlgebra<PrimeField> a(PrimeField(kGenericPrime), 8, s111.ideal.generators);
  for (int d = 0; d <= 6; ++d) CHECK(a.dim(d) == static_cast<std::size_t>((d + 1) * (d + 1) * (d + 1)));
  auto v22 = veronese_presentation(2, 2);
  QuotientAlgebra<RationalField> b(RationalField{}, 10, v22.ideal.generators);
  // Even-degree monomials in 4 variables: C(2d+3, 3).
  for (int d = 0; d <= 3; ++d) CHECK(b.dim(d) == binomial(2 * d + 3, 3));
}

TEST_CASE("generic constructions are seeded and reproducible") {
  auto a = generic_quadrics(4, 5, 7), b = generic_quadrics(4, 5, 7), c = generic_quadrics(4, 5, 8);
  CHECK(a.ideal == b.ideal);
  CHECK_FALSE(a.ideal == c.ideal);
  CHECK(a.ideal.field.characteristic() == kGenericPrime);
  auto g = apolarity_gorenstein(1);
  CHECK(g.ideal.generators.size() == 10);
  CHECK(g.reseeds <= 3);
}

TEST_CASE("expected facts of the built-in corpus hold") {
  for (const auto& entry : builtin_corpus()) {
    CAPTURE(entry.ideal.metadata.name);
    AuditOptions opt;
    opt.only = {"t0_t1"};
    opt.heavy_max_vars = 0;
    auto rep = run_audit(entry.ideal, opt);
    const auto& inv = rep.invariants;
    // Veronese and Segre entries are quadratically generated.
    CHECK(rep.overall() == Verdict::verified);
    visit_field(entry.ideal.field, [&](auto f) {
      QuotientAlgebra<decltype(f)> a(f, entry.ideal.num_vars(), entry.ideal.generators);
      for (const auto& fact : entry.expected) {
        CAPTURE(fact.source);
        CAPTURE(fact.i);
        CAPTURE(fact.j);
        switch (fact.kind) {
          case ExpectedFact::Kind::betti:
            CHECK(static_cast<long long>(inv.betti.at(fact.i, fact.j)) == fact.value);
            break;
          case ExpectedFact::Kind::t_value:
            CHECK(inv.t_at(fact.i).value == ExtInt(static_cast<int>(fact.value)));
            CHECK(inv.t_at(fact.i).exact);
            break;
          case ExpectedFact::Kind::hilbert:
            CHECK(static_cast<long long>(a.dim(fact.i)) == fact.value);
            break;
          case ExpectedFact::Kind::regularity:
            CHECK(inv.reg_at(inv.i_max).value == ExtInt(static_cast<int>(fact.value)));
            break;
        }
      }
      return 0;
    });
  }
}

TEST_CASE("family dispatcher") {
  auto e = generate_family("edge", {3, 0, 1, 1, 2}, 1, std::nullopt);
  CHECK(e.ideal.generators.size() == 2);
  auto g = generate_family("generic", {3, 2}, 5, 101u);
  CHECK(g.ideal.field.characteristic() == 101);
  CHECK(g.ideal.metadata.seed == 5u);
  CHECK_THROWS(generate_family("veronese", {2}, 1, std::nullopt));
  CHECK_THROWS(generate_family("nonsense", {}, 1, std::nullopt));
  auto back = ideal_from_json(ideal_to_json(g.ideal));
  CHECK(back == g.ideal);
}
