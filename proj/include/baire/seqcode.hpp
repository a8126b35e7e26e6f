#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "baire/core.hpp"

namespace baire::seq {

// A finite sequence of naturals, the decoded form of a sequence code.
using Seq = std::vector<Nat>;

Seq make_seq(std::initializer_list<unsigned long> entries);

// Cantor pairing (a+b)(a+b+1)/2 + b and its inverse.
Nat pair(const Nat& a, const Nat& b);
std::pair<Nat, Nat> unpair(const Nat& v);

// Sequence coding: encode(<>) = 0, encode(s*<n>) = pair(encode(s), n) + 1.
// Strictly monotone under extension, so codes grow doubly fast in length.
Nat encode(const Seq& s);
Seq decode(const Nat& code);

Seq concat(const Seq& s, const Seq& t);

// First n entries of s; n must not exceed its length.
Seq take(const Seq& s, std::size_t n);

enum class PrefixRel { StrictPrefix, Equal, StrictExtension, Incomparable };

PrefixRel prefix_rel(const Seq& s, const Seq& t);

// True iff s is a (not necessarily proper) prefix of t.
bool is_prefix(const Seq& s, const Seq& t);

// u with u(i) = s(t(i)); every entry of t must be < length(s).
Seq compose(const Seq& s, const Seq& t);

bool is_increasing(const Seq& s);

// Membership in [m]^k: strictly increasing with all entries < m.
bool is_bounded_below(const Seq& s, const Nat& m);

}  // namespace baire::seq
