#include <doctest.h>

#include <json.hpp>

#include "syzygy/audit.hpp"
#include "syzygy/corpus.hpp"

using namespace syz;

namespace {

const CheckRecord* find(const AuditReport& rep, const std::string& id,
                        std::vector<std::pair<std::string, std::string>> params = {}) {
  for (const auto& r : rep.records) {
    if (r.id != id) continue;
    bool ok = true;
    for (const auto& p : params) ok = ok && std::find(r.params.begin(), r.params.end(), p) != r.params.end();
    if (ok) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("bounded comparisons") {
  Bounded exact3{ExtInt(3), true}, lower3{ExtInt(3), false}, exact2{ExtInt(2), true};
  CHECK(compare_le(exact2, exact3) == Verdict::verified);
  CHECK(compare_le(exact3, exact2) == Verdict::violated);
  CHECK(compare_le(exact2, lower3) == Verdict::verified);
  CHECK(compare_le(lower3, exact3) == Verdict::truncated);
  CHECK(compare_le(lower3, exact2) == Verdict::violated);
  CHECK(compare_le(exact3, Bounded{ExtInt(2), false}) == Verdict::truncated);
  CHECK(compare_le(Bounded{ExtInt::neg_inf(), true}, exact2) == Verdict::verified);
  CHECK((exact3 + lower3).exact == false);
  CHECK(max(exact2, lower3).value == ExtInt(3));
  CHECK(lower3.to_string() == ">=3");
}

TEST_CASE("verdicts combine to the worst") {
  CHECK(combine(Verdict::verified, Verdict::truncated) == Verdict::truncated);
  CHECK(combine(Verdict::violated, Verdict::truncated) == Verdict::violated);
  CHECK(combine(Verdict::hypothesis_not_met, Verdict::verified) == Verdict::hypothesis_not_met);
}

TEST_CASE("invariants of k[x,y]/(x^2,y^2)") {
  auto entry = complete_intersection_quadrics(2, 2);
  auto rep = run_audit(entry.ideal);
  const auto& inv = rep.invariants;
  REQUIRE(inv.t.size() == 3);
  CHECK(inv.t[0].value == ExtInt(0));
  CHECK(inv.t[1].value == ExtInt(2));
  CHECK(inv.t[2].value == ExtInt(4));
  for (const auto& t : inv.t) CHECK(t.exact);
  REQUIRE(inv.m_R);
  CHECK(*inv.m_R == 2);
  CHECK(inv.nq == 1);
  CHECK_FALSE(inv.nq_unbounded);
  CHECK(inv.pd_exact);
  CHECK(inv.pd_observed == 2);
  CHECK(rep.overall() == Verdict::verified);
  CHECK(rep.exit_code() == 0);
  // q = 1 only, so the N_q statements are out of scope.
  CHECK(find(rep, "nq_bounds.gap")->verdict == Verdict::hypothesis_not_met);
  // t_{a+1} <= t_a + 2 is an equality along the chain t_a = 2a.
  auto step = find(rep, "koszul_subadditivity.step", {{"a", "1"}});
  REQUIRE(step);
  CHECK(step->verdict == Verdict::verified);
  CHECK(std::find(step->witness.begin(), step->witness.end(), std::pair<std::string, std::string>{"lhs", "4"}) !=
        step->witness.end());
}

TEST_CASE("quadric hypersurface satisfies N_q for every q") {
  auto rep = run_audit(power_hypersurface(3, 2).ideal);
  CHECK(rep.invariants.nq_unbounded);
  CHECK(rep.overall() == Verdict::verified);
}

TEST_CASE("cubic generators leave the linearity hypotheses unmet") {
  auto rep = run_audit(power_hypersurface(2, 3).ideal);
  CHECK(find(rep, "koszul_degree_bound")->verdict == Verdict::hypothesis_not_met);
  CHECK(rep.exit_code() == 0);
}

TEST_CASE("characteristic 2 kills C(2,1)") {
  auto rep = run_audit(edge_ideal(Graph{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}, 2).ideal);
  auto r = find(rep, "koszul_subadditivity.max", {{"a", "1"}, {"b", "1"}});
  REQUIRE(r);
  CHECK(r->verdict == Verdict::hypothesis_not_met);
  bool named = false;
  for (const auto& [k, v] : r->witness) named = named || (k == "hypothesis" && v == "binomial");
  CHECK(named);
  CHECK(rep.overall() == Verdict::verified);
}

TEST_CASE("m(R) bounds and declared dimension") {
  auto rep = run_audit(segre_presentation({2, 1}).ideal);
  auto r = find(rep, "m_bounds");
  REQUIRE(r);
  CHECK(r->verdict == Verdict::verified);
}

TEST_CASE("check filter and report formats") {
  AuditOptions opt;
  opt.only = {"m_bounds", "koszul_subadditivity.step"};
  auto rep = run_audit(complete_intersection_quadrics(2, 2).ideal, opt);
  for (const auto& r : rep.records) CHECK((r.id == "m_bounds" || r.id == "koszul_subadditivity.step"));
  auto doc = nlohmann::json::parse(rep.to_json());
  CHECK(doc["overall"] == "verified");
  CHECK(doc["invariants"]["m_R"] == 2);
  CHECK(doc["ideal"]["field"]["characteristic"] == 0);
  CHECK(doc["checks"].size() == rep.records.size());
  CHECK(rep.summary_table().find("m_bounds") != std::string::npos);
}

TEST_CASE("exit codes") {
  AuditReport rep;
  CheckRecord ok;
  ok.verdict = Verdict::verified;
  rep.records.push_back(ok);
  CHECK(rep.exit_code() == 0);
  CheckRecord conj;
  conj.conjectural = true;
  conj.verdict = Verdict::violated;
  rep.records.push_back(conj);
  CHECK(rep.exit_code() == 0);
  CHECK(rep.conjecture_counterexamples().size() == 1);
  CheckRecord cut;
  cut.verdict = Verdict::truncated;
  rep.records.push_back(cut);
  CHECK(rep.exit_code() == 3);
  CheckRecord bad;
  bad.verdict = Verdict::violated;
  rep.records.push_back(bad);
  CHECK(rep.exit_code() == 2);
}

TEST_CASE("column bounds from metadata") {
  IdealMetadata meta;
  meta.cohen_macaulay = true;
  meta.dim = 1;
  meta.regularity = 1;
  InitialIdeal in;
  auto bound = algebra_column_bound(4, meta, in);
  CHECK(bound(0) == ExtInt(0));
  CHECK(bound(2) == ExtInt(3));
  CHECK(bound(4) == ExtInt::neg_inf());
  CHECK(bound(5) == ExtInt::neg_inf());
}
