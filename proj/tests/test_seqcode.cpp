#include <random>

#include "baire/seqcode.hpp"
#include "doctest.h"

using namespace baire;
using namespace baire::seq;

TEST_CASE("pairing constants and inverse") {
  CHECK(pair(0, 0) == 0);
  CHECK(pair(1, 2) == 8);
  auto [a, b] = unpair(8);
  CHECK(a == 1);
  CHECK(b == 2);
  for (unsigned long v = 0; v < 2000; ++v) {
    auto [x, y] = unpair(v);
    CHECK(pair(x, y) == v);
  }
}

TEST_CASE("sequence codes of small sequences") {
  CHECK(encode({}) == 0);
  CHECK(encode(make_seq({1})) == 3);
  CHECK(encode(make_seq({1, 2})) == 18);
  CHECK(encode(make_seq({0})) == 1);
  CHECK(encode(make_seq({0, 0})) == 2);
  CHECK(encode(make_seq({0, 0, 0})) == 4);
  CHECK(encode(make_seq({0, 1})) == 5);
  CHECK(encode(make_seq({0, 0, 1})) == 8);
  CHECK(encode(make_seq({5, 7, 9})) == 89686);
  CHECK(decode(18) == make_seq({1, 2}));
  CHECK(decode(0).empty());
}

TEST_CASE("round trip below one hundred thousand") {
  for (unsigned long code = 0; code < 100000; ++code) {
    CHECK(encode(decode(code)) == code);
  }
}

TEST_CASE("concatenation matches code arithmetic") {
  Seq one = decode(3);
  Seq two = decode(6);
  CHECK(encode(concat(one, two)) == 18);
  CHECK(concat(Seq{}, one) == one);
  CHECK(concat(one, Seq{}) == one);
}

TEST_CASE("take and the prefix order") {
  Seq s = make_seq({4, 2, 9});
  CHECK(take(s, 0).empty());
  CHECK(take(s, 2) == make_seq({4, 2}));
  CHECK(take(s, 3) == s);
  CHECK(is_prefix(take(s, 2), s));
  CHECK(is_prefix(s, s));
  CHECK_FALSE(is_prefix(s, take(s, 2)));
  CHECK(prefix_rel(take(s, 1), s) == PrefixRel::StrictPrefix);
  CHECK(prefix_rel(s, take(s, 1)) == PrefixRel::StrictExtension);
  CHECK(prefix_rel(s, s) == PrefixRel::Equal);
  CHECK(prefix_rel(make_seq({4, 3}), s) == PrefixRel::Incomparable);
}

TEST_CASE("composition reindexes and rejects bad indices") {
  CHECK(compose(make_seq({5, 7, 9}), make_seq({2, 0})) == make_seq({9, 5}));
  CHECK(compose(make_seq({5, 7, 9}), Seq{}).empty());
  CHECK_THROWS_AS(compose(make_seq({4}), make_seq({1})), InputError);
}

TEST_CASE("increasing and bounded tuple predicates") {
  CHECK(is_increasing(Seq{}));
  CHECK(is_increasing(make_seq({1, 4, 6})));
  CHECK_FALSE(is_increasing(make_seq({1, 4, 4})));
  CHECK(is_bounded_below(make_seq({0, 2, 4}), 5));
  CHECK_FALSE(is_bounded_below(make_seq({0, 2, 5}), 5));
  CHECK_FALSE(is_bounded_below(make_seq({2, 1}), 5));
}

TEST_CASE("codes grow strictly under extension and prefix order embeds") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<unsigned long> entry(0, 49);
  std::uniform_int_distribution<std::size_t> len(0, 7);
  for (int round = 0; round < 2000; ++round) {
    Seq s;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) s.push_back(entry(rng));
    Seq ext = s;
    ext.push_back(entry(rng));
    CHECK(encode(ext) > encode(s));
    Seq longer = ext;
    longer.push_back(entry(rng));
    CHECK(encode(longer) > encode(s));
  }
}
