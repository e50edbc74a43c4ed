#include <doctest.h>

#include <set>

#include "misere/claims.hpp"
#include "misere/game.hpp"
#include "misere/notation.hpp"
#include "misere/outcome.hpp"

using namespace misere;

namespace {

ClaimReport strip_time(ClaimReport r) {
  r.duration_ms = 0;
  return r;
}

}  // namespace

TEST_CASE("registry") {
  auto const& reg = claim_registry();
  CHECK(reg.size() == 23);
  std::set<std::string_view> ids;
  for (auto const& c : reg) {
    ids.insert(c.id);
    CHECK_FALSE(c.statement.empty());
    CHECK(is_claim(c.id));
  }
  CHECK(ids.size() == 23);
  CHECK(reg.front().id == "lemma:follower-closed");
  CHECK(reg.back().id == "fact:star-squared");
  CHECK_FALSE(is_claim("lemma:nonexistent"));
  CHECK_THROWS_AS(run_claim("lemma:nonexistent", Bounds{}), std::out_of_range);
}

TEST_CASE("exact claims at larger bounds") {
  Bounds b;
  b.b = 4;
  ClaimReport const r = run_claim("lemma:end-sum-outcome", b);
  CHECK(r.status == ClaimStatus::Pass);
  CHECK(r.mode == "exact within bounds");
  CHECK(r.cases > 1000);
  CHECK(r.witnesses_found == 0);
  CHECK(r.bounds == b);
}

TEST_CASE("integer monoid") {
  ClaimReport const r = run_claim("thm:int-monoid", Bounds{});
  CHECK(r.status == ClaimStatus::Pass);
  CHECK(r.cases == 81);
  CHECK(r.mode == "bounded pass");
  CHECK_FALSE(r.tests.empty());
}

TEST_CASE("star squared records a replayable witness") {
  ClaimReport const r = run_claim("fact:star-squared", Bounds{});
  CHECK(r.status == ClaimStatus::Pass);
  REQUIRE_FALSE(r.witnesses.empty());
  ClaimWitness const& w = r.witnesses.front();
  CHECK(w.lhs != w.rhs);
  GameStore s;
  OutcomeSolver o(s);
  GameId const x = parse_and_elaborate(s, w.notation);
  GameId const ss = s.sum(s.star(), s.star());
  CHECK(outcome_name(o.misere(s.sum(ss, x))) == w.lhs);
  CHECK(outcome_name(o.misere(x)) == w.rhs);
}

TEST_CASE("run_all") {
  auto const skipped = run_all(Bounds{}, 0.0);
  REQUIRE(skipped.size() == 23);
  for (auto const& r : skipped) CHECK(r.status == ClaimStatus::Skipped);

  auto const one = run_all(Bounds{}, std::nullopt, "lemma:simplicity-length");
  REQUIRE(one.size() == 1);
  CHECK(strip_time(one[0]) ==
        strip_time(run_claim("lemma:simplicity-length", Bounds{})));
}

TEST_CASE("determinism and serialization") {
  for (char const* id : {"prop:dyadic-options", "lemma:non-invertible-family",
                         "thm:geq-implies-normal"}) {
    ClaimReport const a = run_claim(id, Bounds{});
    ClaimReport const b = run_claim(id, Bounds{});
    CHECK(strip_time(a) == strip_time(b));
    CHECK(a.status == ClaimStatus::Pass);

    nlohmann::json const j = a;
    ClaimReport const back = j.get<ClaimReport>();
    CHECK(back == a);
    CHECK(nlohmann::json(back) == j);
  }
}

TEST_CASE("witness coverage is a ratio, not a verdict") {
  ClaimReport const r = run_claim("thm:geq-implies-normal", Bounds{});
  CHECK(r.status == ClaimStatus::Pass);
  REQUIRE(r.coverage);
  CHECK(*r.coverage > 0.0);
  CHECK(*r.coverage <= 1.0);
}
