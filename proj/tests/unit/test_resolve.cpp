#include <doctest.h>

#include "syzygy/corpus.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/resolve.hpp"

using namespace syz;

namespace {

Polynomial mono(const Exponents& m) { return Polynomial::monomial(m); }

}  // namespace

TEST_CASE("residue field over a cubic hypersurface") {
  // k[x]/(x^3): the resolution of k is periodic with degrees 0,1,3,4,6,...
  QuotientAlgebra<RationalField> a(RationalField{}, 1, {mono({3})});
  auto k = residue_field(a);
  auto res = minimal_resolution(a, k, 4, 7);
  CHECK(res.profile.t(0) == ExtInt(0));
  CHECK(res.profile.t(1) == ExtInt(1));
  CHECK(res.profile.t(2) == ExtInt(3));
  CHECK(res.profile.t(3) == ExtInt(4));
  CHECK(res.profile.t(4) == ExtInt(6));
  CHECK(resolution_is_minimal_complex(a, k, res));
  auto p = preg_R_k(a, 3);
  CHECK_FALSE(p.truncated);
  CHECK(p.value == ExtInt(1));
}

TEST_CASE("Koszul algebras have linear resolutions of k") {
  auto entry = complete_intersection_quadrics(2, 2);
  QuotientAlgebra<RationalField> a(RationalField{}, 2, entry.ideal.generators);
  auto res = minimal_resolution(a, residue_field(a), 4, 4);
  for (int i = 0; i <= 4; ++i) {
    CHECK(res.profile.at(i, i) == static_cast<std::size_t>(i + 1));
    CHECK(res.profile.t(i) == ExtInt(i));
  }
  auto p = preg_R_k(a, 5);
  CHECK(p.value == ExtInt(0));
  CHECK_FALSE(p.truncated);
}

TEST_CASE("generic quadrics fail to be Koszul at the expected step") {
  auto entry = generic_quadrics(4, 5, 1);
  QuotientAlgebra<PrimeField> a(PrimeField(entry.ideal.field.characteristic()), 4, entry.ideal.generators);
  auto p = preg_R_k(a, 4);
  CHECK(p.value == ExtInt(1));
}

TEST_CASE("Tor over a polynomial ring equals Koszul homology") {
  for (auto entry : {edge_ideal(Graph{4, {{0, 1}, {1, 2}, {2, 3}}}), power_hypersurface(2, 3),
                     complete_intersection_quadrics(2, 3)}) {
    const auto& id = entry.ideal;
    int e = id.num_vars();
    QuotientAlgebra<RationalField> s(RationalField{}, e, {});
    QuotientAlgebra<RationalField> r(RationalField{}, e, id.generators);
    auto rm = algebra_module(r, 8);
    auto tor = tor_between(s, residue_field(s), rm, e, 7);
    KoszulComplex<RationalField> k(rm);
    for (int i = 0; i <= e; ++i)
      for (int j = i; j <= 7; ++j)
        if (tor.known(i, j)) CHECK(tor.at(i, j) == k.betti(i, j));
  }
}

TEST_CASE("Tor is balanced on small modules") {
  QuotientAlgebra<RationalField> a(RationalField{}, 2, {mono({2, 0}), mono({1, 1})});
  auto k = residue_field(a);
  auto r = algebra_module(a, 6);
  auto kr = tor_between(a, k, r, 3, 5);
  CHECK(kr.at(0, 0) == 1);
  for (int i = 1; i <= 3; ++i) CHECK(kr.top(i) == ExtInt::neg_inf());
  auto res = minimal_resolution(a, k, 3, 5);
  auto kk = tor_between(a, k, k, 3, 5);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 5; ++j) CHECK(kk.at(i, j) == res.profile.at(i, j));
}

TEST_CASE("cycle sequence exactness") {
  QuotientAlgebra<RationalField> a(RationalField{}, 1, {mono({3})});
  auto r = algebra_module(a, 6);
  for (auto [sa, sb] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}}) {
    auto s = check_serra_sequence(a, r, sa, sb, 5);
    CHECK(s.verdict == Verdict::verified);
    CHECK(s.shifted_isomorphism);
    for (const auto& d : s.degrees) {
      CHECK(d.alternating_sum_zero);
      CHECK(d.phi_matches);
    }
  }
}

TEST_CASE("profiles render unknown cells") {
  QuotientAlgebra<RationalField> a(RationalField{}, 1, {mono({3})});
  auto res = minimal_resolution(a, residue_field(a), 2, 2);
  auto text = res.profile.to_tsv();
  CHECK(text.find('?') != std::string::npos);
  CHECK_THROWS_AS(res.profile.at(2, 3), TruncationError);
}
