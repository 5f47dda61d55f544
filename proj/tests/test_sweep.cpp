#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "twoadic/sweep.hpp"

using namespace twoadic;
using namespace twoadic::sweep;
using sequences::Family;
using sequences::FamilySpec;

namespace {

SweepOptions only(Family f) {
  SweepOptions o;
  o.msequence = f == Family::msequence;
  o.legendre = f == Family::legendre;
  o.twinprime = f == Family::twinprime;
  return o;
}

std::string csv_of(const std::vector<SweepRecord>& records, bool timing = false) {
  std::ostringstream out;
  write_csv(out, records, timing);
  return out.str();
}

} // namespace

TEST_CASE("enumerate_members pinned lists") {
  SECTION("legendre primes 3 mod 4 up to 20") {
    SweepOptions o = only(Family::legendre);
    o.pmax = 20;
    REQUIRE(enumerate_members(o) ==
            std::vector<FamilySpec>{{Family::legendre, 3},
                                    {Family::legendre, 7},
                                    {Family::legendre, 11},
                                    {Family::legendre, 19}});
  }
  SECTION("twin primes with period at most 150") {
    SweepOptions o = only(Family::twinprime);
    o.tpmax = 150;
    REQUIRE(enumerate_members(o) ==
            std::vector<FamilySpec>{{Family::twinprime, 3},
                                    {Family::twinprime, 5},
                                    {Family::twinprime, 11}});
  }
  SECTION("m-sequence degrees") {
    SweepOptions o = only(Family::msequence);
    o.nmax = 4;
    REQUIRE(enumerate_members(o) ==
            std::vector<FamilySpec>{{Family::msequence, 1},
                                    {Family::msequence, 2},
                                    {Family::msequence, 3},
                                    {Family::msequence, 4}});
  }
}

TEST_CASE("enumerate_members enforces the hard caps") {
  for (auto tweak : {+[](SweepOptions& o) { o.nmax = nmax_cap + 1; },
                     +[](SweepOptions& o) { o.pmax = pmax_cap + 1; },
                     +[](SweepOptions& o) { o.tpmax = tpmax_cap + 1; }}) {
    SweepOptions o;
    tweak(o);
    try {
      enumerate_members(o);
      FAIL("expected the cap to reject the request");
    } catch (const error& e) {
      REQUIRE(e.code() == errc::bound_exceeded);
    }
  }
}

TEST_CASE("small sweep: every member passes, except the vacuous degree-1 row") {
  SweepOptions o;
  o.nmax = 4;
  o.pmax = 20;
  o.tpmax = 150;
  const std::vector<SweepRecord> records = run_sweep(o);
  REQUIRE(records.size() == 11);

  for (const SweepRecord& r : records) {
    INFO(sequences::family_name(r.family) << " " << r.parameter);
    REQUIRE(r.is_ideal);
    REQUIRE(r.is_max);
    REQUIRE(r.gcd_claim == adic::Verdict::holds);
    const bool vacuous = r.family == Family::msequence && r.parameter == 1;
    REQUIRE(r.theorem1 == (vacuous ? adic::Verdict::degenerate : adic::Verdict::holds));
    REQUIRE(r.product_congruence == (vacuous ? adic::Verdict::degenerate : adic::Verdict::holds));
    switch (r.family) {
      case Family::msequence:
        REQUIRE(r.period == (std::uint64_t{1} << r.parameter) - 1);
        break;
      case Family::legendre:
        REQUIRE(r.period == r.parameter);
        break;
      case Family::twinprime:
        REQUIRE(r.period == std::uint64_t{r.parameter} * (r.parameter + 2));
        break;
    }
  }
  REQUIRE(count_all_true(records) == 10);
}

TEST_CASE("csv output is byte-identical across jobs counts") {
  SweepOptions o;
  o.nmax = 6;
  o.pmax = 60;
  o.tpmax = 200;

  o.jobs = 1;
  const std::string serial = csv_of(run_sweep(o));
  for (unsigned jobs : {2u, 4u, 64u}) {
    o.jobs = jobs;
    INFO("jobs " << jobs);
    REQUIRE(csv_of(run_sweep(o)) == serial);
  }
}

TEST_CASE("csv exact form") {
  SweepOptions o = only(Family::msequence);
  o.nmax = 2;
  const std::vector<SweepRecord> records = run_sweep(o);
  REQUIRE(csv_of(records) ==
          "# schema=1\n"
          "family,parameter,period,is_ideal,is_max,theorem1,product_congruence,gcd_claim,q_digits\n"
          "msequence,1,1,true,true,degenerate,degenerate,true,1\n"
          "msequence,2,3,true,true,true,true,true,1\n");

  const std::string timed = csv_of(records, true);
  REQUIRE(timed.substr(0, timed.find('\n')) == "# schema=1 timing=1");
  REQUIRE(timed.find(",elapsed_ms\n") != std::string::npos);
  std::istringstream lines(timed);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#')
      REQUIRE(std::count(line.begin(), line.end(), ',') == 9);
}

TEST_CASE("empty selection") {
  SweepOptions o;
  o.msequence = o.legendre = o.twinprime = false;
  const std::vector<SweepRecord> records = run_sweep(o);
  REQUIRE(records.empty());
  REQUIRE(count_all_true(records) == 0);
  REQUIRE(csv_of(records) ==
          "# schema=1\n"
          "family,parameter,period,is_ideal,is_max,theorem1,product_congruence,gcd_claim,q_digits\n");
}
