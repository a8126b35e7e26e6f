#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "baire/seqcode.hpp"

namespace baire::spreads {

using seq::Seq;

// An infinite sequence of naturals, given value by value.
using SequenceOracle = std::function<Nat(std::uint64_t)>;

// Decidable predicate on finite sequences (bars and the like).
using SeqPredicate = std::function<bool(const Seq&)>;

// A spread-law: admit decides which finite sequences lie on the tree,
// child_witness names an admitted child of every admitted node, and fan_bound
// (when present) bounds the labels of admitted children, making the law
// finitary.
struct SpreadLaw {
  std::function<bool(const Seq&)> admit;
  std::function<Nat(const Seq&)> child_witness;
  std::optional<std::function<Nat(const Seq&)>> fan_bound;
};

SpreadLaw cantor_law();                 // entries < 2
SpreadLaw baire_law();                  // every sequence admitted
SpreadLaw kary_law(std::uint64_t arity);  // entries < arity

enum class LawViolation { DownwardClosure, ChildWitness, FanBound };

struct LawReport {
  struct Entry {
    LawViolation kind;
    Seq at;
  };
  std::vector<Entry> violations;
  bool truncated = false;  // node budget hit before the requested depth
};

// Validates the spread-law conditions on all sequences of length <= depth with
// entries < probe_width (or within the fan bound when one is present).
LawReport check_spread_law(const SpreadLaw& law, std::uint64_t depth,
                           std::uint64_t probe_width = 8,
                           std::uint64_t node_budget = std::uint64_t{1} << 18);

// First n values of the retraction of alpha onto the spread: copies alpha
// while its prefix stays admitted, otherwise extends by the least admitted
// child. Throws LawError if no admitted child is found within search_cap.
std::vector<Nat> retract(const SpreadLaw& law, const SequenceOracle& alpha, std::uint64_t n,
                         std::uint64_t search_cap = kDefaultSearchCap);

// All admitted codes of exactly the given length, sorted by code value.
// Requires a fan bound.
std::vector<Seq> enumerate_admitted(const SpreadLaw& law, std::uint64_t depth);

// Least N <= max_depth such that every admitted node of length N has a prefix
// in the bar; absent when no such N was found (inconclusive, not a refutation).
std::optional<std::uint64_t> bar_uniform_bound(const SpreadLaw& law, const SeqPredicate& bar,
                                               std::uint64_t max_depth);

// The minimal barred prefixes jointly barring the fan: a finite subset of the
// bar, an antichain under the prefix order. Absent when bar_uniform_bound is.
std::optional<std::vector<Seq>> finite_subbar(const SpreadLaw& law, const SeqPredicate& bar,
                                              std::uint64_t max_depth);

// Least n with s*<zeta(n)> rejected, else absent (inconclusive on this prefix).
// zeta must be strictly increasing and s admitted.
std::optional<std::uint64_t> almost_fan_probe(const SpreadLaw& law, const Seq& s,
                                              const Seq& zeta);

}  // namespace baire::spreads
