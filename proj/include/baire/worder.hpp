#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "baire/seqcode.hpp"

namespace baire::worder {

using seq::Seq;

// Witness tree for an inductively well-ordered finite set of rationals: a
// leaf denotes one rational, a chain denotes the union of its children, which
// must sit strictly one below the next.
struct WOTree;
using WOTreePtr = std::shared_ptr<const WOTree>;

struct WOTree {
  enum class Kind { Empty, Singleton, Chain };
  Kind kind = Kind::Empty;
  Rat q;                            // Singleton payload
  std::vector<WOTreePtr> children;  // Chain payload

  static WOTreePtr empty();
  static WOTreePtr singleton(Rat value);
  static WOTreePtr chain(std::vector<WOTreePtr> parts);
};

struct WOValidation {
  bool valid = true;
  std::vector<Rat> denoted;                    // sorted ascending
  std::optional<std::pair<Rat, Rat>> violation;  // an out-of-order pair, if any
};

// Checks the chain constraint recursively (each child entirely below the
// next) and computes the denoted finite set.
WOValidation validate_wo(const WOTreePtr& tree);

// JSON round trip for trees, schema:
//   {"kind":"empty"} | {"kind":"singleton","q":"p/q"}
//   | {"kind":"chain","children":[...]}
std::string wo_to_json_text(const WOTreePtr& tree);
WOTreePtr wo_from_json_text(const std::string& text);

// Enumeration of a set of rationals: alpha(m) = n+1 means the rational with
// index n is emitted at step m, and alpha(m) = 0 means nothing is emitted.
struct EnumSet {
  std::function<Nat(std::uint64_t)> alpha;
};

// Least n such that either some step i <= n+1 emits nothing, or steps n and
// n+1 both emit and their rationals fail to descend strictly; absent when the
// probed prefix is a strictly descending chain of emissions.
std::optional<std::uint64_t> wf_probe(const EnumSet& en, const Seq& gamma);

// Record-keeping decomposition: scanning the elements in the given order,
// every running maximum opens a block reaching down to the previous record;
// the blocks, in order, witness the well-ordering.
WOTreePtr decompose(const std::vector<Rat>& elements, const std::vector<std::uint64_t>& order);

// Membership in the bar of enumeration probes: some step of s emits nothing,
// or the last two steps both emit and their rationals fail to descend.
bool bar_b_alpha(const std::function<Nat(std::uint64_t)>& alpha, const Seq& s);

}  // namespace baire::worder
