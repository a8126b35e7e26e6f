#include <map>

#include "baire/stumps.hpp"
#include "doctest.h"

using namespace baire;
using namespace baire::seq;
using namespace baire::stumps;

namespace {

const HrsPtr kBasic = HrsStump::basic();
const HrsPtr kNode1 = HrsStump::node({kBasic});          // plays end at length 2
const HrsPtr kNode2 = HrsStump::node({kNode1});          // plays end at length 3
const HrsPtr kMixed = HrsStump::node({kBasic, kNode1});  // children alternate by label

Strategy constant(unsigned long v) {
  return [v](const Seq&) { return Nat(v); };
}

PayoffOracle zero_payoff() {
  return [](const Seq&) { return Nat(0); };
}

}  // namespace

TEST_CASE("plain stumps: containment and borders") {
  StumpPtr empty = Stump::empty();
  CHECK_FALSE(empty->contains(Seq{}));
  CHECK(border_member(empty, Seq{}));

  StumpPtr leaf = Stump::node({}, Stump::empty());
  CHECK(leaf->contains(Seq{}));
  CHECK_FALSE(leaf->contains(make_seq({0})));
  CHECK(border_member(leaf, make_seq({4})));

  StumpPtr two = Stump::node({{Nat(1), leaf}}, Stump::empty());
  CHECK(two->contains(make_seq({1})));
  CHECK_FALSE(two->contains(make_seq({0})));
  CHECK(border_member(two, make_seq({0})));
  CHECK(border_member(two, make_seq({1, 5})));
  CHECK_FALSE(border_member(two, make_seq({0, 5})));  // prefix already outside
}

TEST_CASE("hrs stumps: membership is periodic in the label pair") {
  CHECK(kBasic->contains(Seq{}));
  CHECK_FALSE(kBasic->contains(make_seq({0})));
  CHECK(kBasic->height() == 0);

  CHECK(kNode1->contains(make_seq({0})));
  CHECK(kNode1->contains(make_seq({17})));
  CHECK_FALSE(kNode1->contains(make_seq({0, 0})));
  CHECK(kNode1->height() == 1);

  // kMixed: child at label l is subs[second(unpair(l)) % 2]; label 0 = (0,0)
  // picks the basic sub, label 2 = (0,1) picks the deeper one.
  CHECK(kMixed->contains(make_seq({0})));
  CHECK_FALSE(kMixed->contains(make_seq({0, 0})));
  CHECK(kMixed->contains(make_seq({2, 0})));
  CHECK_FALSE(kMixed->contains(make_seq({2, 0, 0})));
  CHECK(kMixed->height() == 2);
}

TEST_CASE("borders and endpoints of hrs stumps") {
  for (unsigned long n : {0ul, 1ul, 7ul}) CHECK(border_member(kBasic, make_seq({n})));
  CHECK_FALSE(border_member(kBasic, Seq{}));
  CHECK_FALSE(border_member(kBasic, make_seq({0, 0})));  // proper prefix already out

  CHECK(is_endpoint(kBasic, Seq{}));
  CHECK_FALSE(is_endpoint(kNode1, Seq{}));
  CHECK(is_endpoint(kNode1, make_seq({0})));
  CHECK_FALSE(is_endpoint(kNode1, make_seq({0, 0})));  // not a member at all
}

TEST_CASE("json round trip for stumps") {
  CHECK(hrs_to_json_text(kBasic) == "[]");
  CHECK(hrs_to_json_text(kNode1) == "[[]]");
  CHECK(hrs_to_json_text(kMixed) == "[[],[[]]]");
  for (const char* text : {"[]", "[[]]", "[[],[[]]]", "[[[]],[]]"}) {
    CHECK(hrs_to_json_text(hrs_from_json_text(text)) == text);
  }
  CHECK_THROWS_AS(hrs_from_json_text("{\"a\":1}"), InputError);
  CHECK_THROWS_AS(hrs_from_json_text("not json"), InputError);
}

TEST_CASE("plays run to the border and score by parity") {
  PayoffOracle alpha = [](const Seq& pos) { return Nat(pos == make_seq({3}) ? 1 : 0); };
  PlayRecord rec = play_game(kBasic, alpha, constant(3), constant(0));
  CHECK(rec.position == make_seq({3}));
  CHECK(rec.player_one_wins);  // odd length, payoff nonzero

  PlayRecord rec2 = play_game(kNode1, zero_payoff(), constant(2), constant(5));
  CHECK(rec2.position == make_seq({2, 5}));
  CHECK(rec2.player_one_wins);  // even length, payoff zero

  PlayRecord rec3 = play_game(kBasic, zero_payoff(), constant(3), constant(0));
  CHECK_FALSE(rec3.player_one_wins);  // odd length, payoff zero
}

TEST_CASE("winning verification over a bounded alphabet") {
  PayoffOracle alpha = [](const Seq& pos) { return Nat(pos == make_seq({3}) ? 1 : 0); };
  WinVerdict v = check_winning(kBasic, Player::One, constant(3), alpha, 4);
  CHECK(v.holds);

  WinVerdict loss = check_winning(kBasic, Player::One, constant(3), zero_payoff(), 4);
  CHECK_FALSE(loss.holds);
  REQUIRE(loss.counterexample.has_value());
  CHECK(*loss.counterexample == make_seq({3}));

  // player two wins the basic game whenever the payoff vanishes on the border
  WinVerdict two = check_winning(kBasic, Player::Two, constant(0), zero_payoff(), 4);
  CHECK(two.holds);
}

TEST_CASE("canonical payoffs decide every play for their player") {
  PayoffOracle eps = canonical_element(kBasic, Canonical::EpsilonStar);
  CHECK(eps(make_seq({5})) == 1);
  CHECK(eps(Seq{}) == 0);
  PayoffOracle ast = canonical_element(kBasic, Canonical::AlphaStar);
  CHECK(ast(make_seq({5})) == 0);
  CHECK(ast(Seq{}) == 0);

  for (const HrsPtr& S : {kBasic, kNode1, kNode2, kMixed}) {
    PayoffOracle e = canonical_element(S, Canonical::EpsilonStar);
    PayoffOracle a = canonical_element(S, Canonical::AlphaStar);
    for (unsigned long sigma_move : {0ul, 1ul, 2ul}) {
      CHECK(check_winning(S, Player::One, constant(sigma_move), e, 3).holds);
      CHECK(check_winning(S, Player::Two, constant(sigma_move), a, 3).holds);
    }
  }
}

TEST_CASE("strategies unfold to witnesses and back") {
  PayoffOracle alpha = [](const Seq& pos) { return Nat(pos == make_seq({3}) ? 1 : 0); };
  MembershipWitness w = strategy_to_membership(kBasic, Player::One, constant(3), alpha, 4);
  CHECK(w.kind == MembershipWitness::Kind::Exists);
  CHECK(w.choice == 3);
  CHECK(w.sub.empty());
  CHECK(validate_witness(kBasic, Player::One, w, alpha));

  Strategy sigma = membership_to_strategy(kBasic, Player::One, w);
  CHECK(sigma(Seq{}) == 3);
  CHECK(check_winning(kBasic, Player::One, sigma, alpha, 4).holds);

  MembershipWitness wa = strategy_to_membership(kBasic, Player::Two, constant(0), zero_payoff(), 3);
  CHECK(wa.kind == MembershipWitness::Kind::Forall);
  CHECK(wa.sub.empty());
  CHECK(validate_witness(kBasic, Player::Two, wa, zero_payoff()));
  Strategy tau = membership_to_strategy(kBasic, Player::Two, wa);
  CHECK(check_winning(kBasic, Player::Two, tau, zero_payoff(), 3).holds);
}

TEST_CASE("losing or out-of-alphabet strategies are refused") {
  CHECK_THROWS_AS(strategy_to_membership(kBasic, Player::One, constant(3), zero_payoff(), 4),
                  InputError);
  PayoffOracle live = [](const Seq&) { return Nat(1); };
  // wins every play but moves outside the declared alphabet
  CHECK_THROWS_AS(strategy_to_membership(kBasic, Player::One, constant(9), live, 4), InputError);

  MembershipWitness bad;
  bad.kind = MembershipWitness::Kind::Exists;
  bad.alphabet = 2;
  bad.choice = 5;  // outside the alphabet
  CHECK_THROWS_AS(membership_to_strategy(kBasic, Player::One, bad), InputError);
}

TEST_CASE("a depth-two witness nests one fan per opponent move") {
  PayoffOracle mix = [](const Seq& pos) {
    return Nat(pos.size() == 3 && pos[0] == 1 && pos[2] == 1 ? 1 : 0);
  };
  Strategy sigma = [](const Seq& pos) { return Nat(pos.empty() ? 1 : 1); };
  REQUIRE(check_winning(kNode2, Player::One, sigma, mix, 2).holds);
  MembershipWitness w = strategy_to_membership(kNode2, Player::One, sigma, mix, 2);
  CHECK(w.kind == MembershipWitness::Kind::Exists);
  CHECK(w.choice == 1);
  REQUIRE(w.sub.size() == 1);
  CHECK(w.sub[0].kind == MembershipWitness::Kind::Forall);
  REQUIRE(w.sub[0].sub.size() == 2);  // one branch per opponent move
  for (const auto& leaf : w.sub[0].sub) {
    CHECK(leaf.kind == MembershipWitness::Kind::Exists);
    CHECK(leaf.choice == 1);
  }
  CHECK(validate_witness(kNode2, Player::One, w, mix));
  Strategy back = membership_to_strategy(kNode2, Player::One, w);
  CHECK(check_winning(kNode2, Player::One, back, mix, 2).holds);
  CHECK(back(make_seq({0, 0})) == 0);  // off the committed first move
}

TEST_CASE("payoff correction hands every border to player two") {
  PayoffOracle base = [](const Seq& pos) { return Nat(pos.size() == 1 && pos[0] == 2 ? 7 : 0); };
  PayoffOracle fixed = correct_by_strategy(kBasic, constant(0), base);
  for (unsigned long n : {0ul, 2ul, 9ul}) CHECK(fixed(make_seq({n})) == 0);
  CHECK(fixed(Seq{}) == 0);  // interior unchanged

  PayoffOracle even_fix = correct_by_strategy(kNode1, constant(0), zero_payoff());
  CHECK(even_fix(make_seq({4, 4})) == 1);  // even border forced nonzero
  CHECK(even_fix(make_seq({4})) == 0);     // interior unchanged

  for (const HrsPtr& S : {kBasic, kNode1, kNode2, kMixed}) {
    PayoffOracle fixed_any = correct_by_strategy(S, constant(0), base);
    CHECK(check_winning(S, Player::Two, constant(0), fixed_any, 3).holds);
  }

  // a payoff already won by player two is untouched on probed positions
  PayoffOracle ast = canonical_element(kBasic, Canonical::AlphaStar);
  PayoffOracle re = correct_by_strategy(kBasic, constant(0), ast);
  for (unsigned long n : {0ul, 1ul, 6ul}) CHECK(re(make_seq({n})) == ast(make_seq({n})));
}

TEST_CASE("reduction to the basic game matches the direct check") {
  std::function<Nat(const Seq&)> beta = [](const Seq& prefix) {
    Nat sum = 0;
    for (const Nat& v : prefix) sum += v;
    return Nat(sum % 3 == 1 ? 1 : 0);
  };
  auto phi = reduce_basic(beta);

  // all sequences with support <= 4 and values < 3, padded with zeros
  for (unsigned long v0 = 0; v0 < 3; ++v0) {
    for (unsigned long v1 = 0; v1 < 3; ++v1) {
      for (unsigned long v2 = 0; v2 < 3; ++v2) {
        for (unsigned long v3 = 0; v3 < 3; ++v3) {
          std::vector<unsigned long> vals = {v0, v1, v2, v3, 0, 0, 0};
          SequenceOracle alpha = [&vals](std::uint64_t i) {
            return Nat(i < vals.size() ? vals[i] : 0);
          };
          bool direct = false;
          for (std::size_t n = 0; n < vals.size(); ++n) {
            Seq prefix;
            for (std::size_t i = 0; i < n; ++i) prefix.push_back(vals[i]);
            if (beta(prefix) != 0) direct = true;
          }
          PayoffOracle pay = phi(alpha);
          bool via_game = false;
          for (unsigned long n = 0; n < 7; ++n) {
            if (pay(make_seq({n})) != 0) via_game = true;
          }
          CHECK(direct == via_game);
        }
      }
    }
  }

  // vanish-everywhere payoff sits in the player-two set
  auto zero_transform = reduce_basic([](const Seq&) { return Nat(0); });
  PayoffOracle all_zero = zero_transform([](std::uint64_t) { return Nat(0); });
  CHECK(all_zero(make_seq({4})) == 0);
  CHECK(check_winning(kBasic, Player::Two, constant(0), all_zero, 3).holds);
}
