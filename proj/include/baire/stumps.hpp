#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "baire/seqcode.hpp"

namespace baire::stumps {

using seq::Seq;

class Stump;
using StumpPtr = std::shared_ptr<const Stump>;

// Well-founded tree of finite sequences. The empty stump contains nothing; a
// node contains <> together with <n>*t for every t in its child at n. Children
// are a finitely supported map plus a fallback for all labels beyond it.
class Stump {
 public:
  static StumpPtr empty();
  static StumpPtr node(std::map<Nat, StumpPtr> special, StumpPtr fallback);

  bool is_empty() const { return empty_; }
  const StumpPtr& child(const Nat& label) const;
  bool contains(const Seq& s) const;

 private:
  Stump() : empty_(true) {}
  Stump(std::map<Nat, StumpPtr> special, StumpPtr fallback)
      : empty_(false), special_(std::move(special)), fallback_(std::move(fallback)) {}
  bool empty_;
  std::map<Nat, StumpPtr> special_;
  StumpPtr fallback_;
};

class HrsStump;
using HrsPtr = std::shared_ptr<const HrsStump>;

// Hereditarily repetitive members of a restricted stump class: either the
// basic stump containing exactly <>, or a node with a nonempty list of
// sub-stumps repeated periodically over labels. The child at label l is
// subs[second(unpair(l)) mod subs.size()], so every node has, up to
// repetition, finitely many distinct children.
class HrsStump {
 public:
  static HrsPtr basic();
  static HrsPtr node(std::vector<HrsPtr> subs);

  bool is_basic() const { return subs_.empty(); }
  const std::vector<HrsPtr>& subs() const { return subs_; }
  const HrsPtr& child(const Nat& label) const;
  bool contains(const Seq& s) const;
  std::uint64_t height() const;  // basic: 0; node: 1 + max over subs

 private:
  explicit HrsStump(std::vector<HrsPtr> subs) : subs_(std::move(subs)) {}
  std::vector<HrsPtr> subs_;
};

// s lies on the border of S: s is outside S while every proper prefix is in S.
bool border_member(const HrsPtr& S, const Seq& s);
bool border_member(const StumpPtr& S, const Seq& s);

// s is an endpoint of S: s in S but s*<0> already outside.
bool is_endpoint(const HrsPtr& S, const Seq& s);

// Nested-array serialization: basic is [], a node is the list of its subs.
HrsPtr hrs_from_json_text(const std::string& text);
std::string hrs_to_json_text(const HrsPtr& S);

// --- Games on stumps ---------------------------------------------------
//
// Players extend a position alternately, player one moving at even lengths,
// until the position crosses the border of S. Player one wins the finished
// play p when (len(p) even and alpha(p) = 0) or (len(p) odd and alpha(p) != 0).

using Strategy = std::function<Nat(const Seq&)>;      // next move at a position
using PayoffOracle = std::function<Nat(const Seq&)>;  // alpha, evaluated at positions

struct PlayRecord {
  Seq position;  // the finished play, a border member of S
  std::vector<Nat> moves;
  bool player_one_wins;
};

PlayRecord play_game(const HrsPtr& S, const PayoffOracle& alpha, const Strategy& sigma,
                     const Strategy& tau);

enum class Player { One, Two };

struct WinVerdict {
  bool holds;
  std::optional<Seq> counterexample;  // a finished play lost by the player
};

// Exhaustively verifies that strat wins for `who` against every opponent
// playing moves below `alphabet`.
WinVerdict check_winning(const HrsPtr& S, Player who, const Strategy& strat,
                         const PayoffOracle& alpha, std::uint64_t alphabet);

// Alternating membership witness for the game sets: an Exists stage commits to
// one move, a Forall stage carries one sub-witness per opponent move below the
// alphabet. At the basic stump the claim bottoms out on alpha alone.
struct MembershipWitness {
  enum class Kind { Exists, Forall };
  Kind kind = Kind::Exists;
  std::uint64_t alphabet = 1;
  Nat choice;  // Exists stages only
  std::vector<MembershipWitness> sub;
};

bool validate_witness(const HrsPtr& S, Player who, const MembershipWitness& w,
                      const PayoffOracle& alpha);

// Unfolds a verified winning strategy into a membership witness. Refuses (with
// the losing play) when check_winning finds a counterexample, and refuses any
// strategy choosing a move outside the alphabet.
MembershipWitness strategy_to_membership(const HrsPtr& S, Player who, const Strategy& strat,
                                         const PayoffOracle& alpha, std::uint64_t alphabet);

// Reads a strategy back off a structurally valid witness; off-witness
// positions get move 0.
Strategy membership_to_strategy(const HrsPtr& S, Player who, const MembershipWitness& w);

// Payoff correction making every even border position a player-one loss while
// keeping values elsewhere; the strategy argument is accepted for interface
// parity but the corrected value depends on alpha alone.
PayoffOracle correct_by_strategy(const HrsPtr& S, const Strategy& tau, const PayoffOracle& alpha);

enum class Canonical { EpsilonStar, AlphaStar };

// Canonical payoffs: EpsilonStar is won by player one on every border, and
// AlphaStar by player two.
PayoffOracle canonical_element(const HrsPtr& S, Canonical which);

using SequenceOracle = std::function<Nat(std::uint64_t)>;

// Reduction to games over the basic stump: the returned transform maps a
// sequence alpha to the payoff sending <n> to beta(first n values of alpha)
// and every other position to 0.
std::function<PayoffOracle(SequenceOracle)> reduce_basic(std::function<Nat(const Seq&)> beta);

}  // namespace baire::stumps
