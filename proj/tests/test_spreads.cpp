#include <random>

#include "baire/spreads.hpp"
#include "doctest.h"

using namespace baire;
using namespace baire::seq;
using namespace baire::spreads;

namespace {

Seq codes_of(const std::vector<Seq>& seqs) {
  Seq out;
  for (const Seq& s : seqs) out.push_back(encode(s));
  return out;
}

// Admits sequences of even numbers only.
SpreadLaw even_law() {
  SpreadLaw law;
  law.admit = [](const Seq& s) {
    for (const Nat& e : s) {
      if (e % 2 != 0) return false;
    }
    return true;
  };
  law.child_witness = [](const Seq&) { return Nat(0); };
  return law;
}

// Admits only the all-zero sequence.
SpreadLaw singleton_law() {
  SpreadLaw law;
  law.admit = [](const Seq& s) {
    for (const Nat& e : s) {
      if (e != 0) return false;
    }
    return true;
  };
  law.child_witness = [](const Seq&) { return Nat(0); };
  law.fan_bound = [](const Seq&) { return Nat(0); };
  return law;
}

}  // namespace

TEST_CASE("builtin laws admit what they should") {
  SpreadLaw cantor = cantor_law();
  CHECK(cantor.admit(Seq{}));
  CHECK(cantor.admit(make_seq({0, 1, 1})));
  CHECK_FALSE(cantor.admit(make_seq({0, 2})));
  REQUIRE(cantor.fan_bound.has_value());
  CHECK((*cantor.fan_bound)(Seq{}) == 1);

  SpreadLaw baire = baire_law();
  CHECK(baire.admit(make_seq({9, 100, 3})));
  CHECK_FALSE(baire.fan_bound.has_value());

  SpreadLaw three = kary_law(3);
  CHECK(three.admit(make_seq({2, 2})));
  CHECK_FALSE(three.admit(make_seq({3})));
}

TEST_CASE("law checker passes the builtins and flags broken laws") {
  CHECK(check_spread_law(cantor_law(), 4).violations.empty());
  CHECK(check_spread_law(kary_law(3), 3).violations.empty());
  CHECK(check_spread_law(baire_law(), 2, 3).violations.empty());

  SUBCASE("downward closure violation") {
    SpreadLaw bad;
    bad.admit = [](const Seq& s) { return s.size() != 1; };  // drops level one only
    bad.child_witness = [](const Seq&) { return Nat(0); };
    LawReport report = check_spread_law(bad, 2, 2);
    REQUIRE_FALSE(report.violations.empty());
    bool found = false;
    for (const auto& v : report.violations)
      if (v.kind == LawViolation::DownwardClosure) found = true;
    CHECK(found);
  }

  SUBCASE("child witness violation") {
    SpreadLaw bad;
    bad.admit = [](const Seq& s) { return s.size() <= 1 && (s.empty() || s[0] == 1); };
    bad.child_witness = [](const Seq&) { return Nat(0); };  // names a rejected child
    LawReport report = check_spread_law(bad, 1, 2);
    bool found = false;
    for (const auto& v : report.violations)
      if (v.kind == LawViolation::ChildWitness) found = true;
    CHECK(found);
  }

  SUBCASE("fan bound violation") {
    SpreadLaw bad = kary_law(4);
    bad.fan_bound = [](const Seq&) { return Nat(1); };  // bound too small
    LawReport report = check_spread_law(bad, 1);
    bool found = false;
    for (const auto& v : report.violations)
      if (v.kind == LawViolation::FanBound) found = true;
    CHECK(found);
  }

  SUBCASE("node budget marks truncation") {
    LawReport report = check_spread_law(baire_law(), 8, 8, 64);
    CHECK(report.truncated);
  }
}

TEST_CASE("retraction traces") {
  std::vector<unsigned long> vals = {0, 5, 1};
  SequenceOracle alpha = [&](std::uint64_t i) { return Nat(i < 3 ? vals[i] : 0); };
  auto out = retract(cantor_law(), alpha, 3);
  CHECK(out == std::vector<Nat>{0, 0, 0});

  SequenceOracle member = [](std::uint64_t i) { return Nat(i % 2); };
  auto copy = retract(cantor_law(), member, 8);
  for (std::uint64_t i = 0; i < 8; ++i) CHECK(copy[i] == i % 2);

  std::vector<unsigned long> odd = {3, 4, 7};
  SequenceOracle beta = [&](std::uint64_t i) { return Nat(i < 3 ? odd[i] : 0); };
  CHECK(retract(even_law(), beta, 3) == std::vector<Nat>{0, 0, 0});
}

TEST_CASE("retraction throws when the law starves") {
  SpreadLaw starved;
  starved.admit = [](const Seq& s) { return s.empty(); };  // no children at all
  starved.child_witness = [](const Seq&) { return Nat(0); };
  SequenceOracle alpha = [](std::uint64_t) { return Nat(0); };
  CHECK_THROWS_AS(retract(starved, alpha, 1, 100), LawError);
}

TEST_CASE("retraction properties on random laws") {
  std::mt19937_64 rng(414243);
  std::uniform_int_distribution<unsigned long> arity(1, 4);
  std::uniform_int_distribution<unsigned long> value(0, 6);
  for (int round = 0; round < 300; ++round) {
    SpreadLaw law = kary_law(arity(rng));
    std::vector<Nat> vals;
    for (int i = 0; i < 10; ++i) vals.emplace_back(value(rng));
    SequenceOracle alpha = [&vals](std::uint64_t i) { return vals[i % vals.size()]; };
    auto out = retract(law, alpha, 10);
    Seq prefix;
    for (const Nat& v : out) {
      prefix.push_back(v);
      CHECK(law.admit(prefix));
    }
    SequenceOracle reread = [&out](std::uint64_t i) { return out[i]; };
    CHECK(retract(law, reread, 10) == out);
  }
}

TEST_CASE("level enumeration needs a fan bound and counts correctly") {
  CHECK(enumerate_admitted(cantor_law(), 2).size() == 4);
  CHECK(enumerate_admitted(kary_law(3), 3).size() == 27);
  CHECK(codes_of(enumerate_admitted(cantor_law(), 2)) == make_seq({2, 5, 7, 12}));
  CHECK_THROWS_AS(enumerate_admitted(baire_law(), 2), InputError);
}

TEST_CASE("uniform bar bound on the binary fan") {
  SeqPredicate bar = [](const Seq& s) {
    if (s.size() >= 3) return true;
    for (const Nat& e : s)
      if (e == 1) return true;
    return false;
  };
  auto bound = bar_uniform_bound(cantor_law(), bar, 10);
  REQUIRE(bound.has_value());
  CHECK(*bound == 3);

  SeqPredicate never = [](const Seq&) { return false; };
  CHECK_FALSE(bar_uniform_bound(cantor_law(), never, 6).has_value());

  SeqPredicate deep = [](const Seq& s) { return s.size() >= 7; };
  auto single = bar_uniform_bound(singleton_law(), deep, 10);
  REQUIRE(single.has_value());
  CHECK(*single == 7);
}

TEST_CASE("finite subbar is the frozen antichain") {
  SeqPredicate bar = [](const Seq& s) {
    if (s.size() >= 3) return true;
    for (const Nat& e : s)
      if (e == 1) return true;
    return false;
  };
  auto sub = finite_subbar(cantor_law(), bar, 10);
  REQUIRE(sub.has_value());
  CHECK(codes_of(*sub) == make_seq({3, 4, 5, 8}));
  for (const Seq& s : *sub) CHECK(bar(s));
  for (const Seq& s : *sub) {
    for (const Seq& t : *sub) {
      if (s != t) CHECK(prefix_rel(s, t) == PrefixRel::Incomparable);
    }
  }

  SeqPredicate deep = [](const Seq& s) { return s.size() >= 7; };
  auto single = finite_subbar(singleton_law(), deep, 10);
  REQUIRE(single.has_value());
  CHECK(codes_of(*single) == make_seq({2598061}));

  SeqPredicate never = [](const Seq&) { return false; };
  CHECK_FALSE(finite_subbar(cantor_law(), never, 5).has_value());
}

TEST_CASE("almost-fan probe finds the first rejected direction") {
  SpreadLaw three = kary_law(3);
  auto hit = almost_fan_probe(three, Seq{}, make_seq({0, 2, 5}));
  REQUIRE(hit.has_value());
  CHECK(*hit == 2);

  CHECK_FALSE(almost_fan_probe(kary_law(10), Seq{}, make_seq({0, 2, 5})).has_value());
  CHECK_THROWS_AS(almost_fan_probe(three, Seq{}, make_seq({2, 2})), InputError);
  CHECK_THROWS_AS(almost_fan_probe(three, make_seq({7}), make_seq({0, 1})), InputError);
}
