#include <map>
#include <vector>

#include "baire/ramsey.hpp"
#include "doctest.h"

using namespace baire;
using namespace baire::ramsey;
using seq::Seq;
using seq::make_seq;

namespace {

ColorOracle constant_color(unsigned long c) {
  return [c](const Seq&) { return Nat(c); };
}

ColorOracle sum_parity() {
  return [](const Seq& t) {
    Nat s = 0;
    for (const Nat& v : t) s += v;
    return Nat(s % 2);
  };
}

ColorOracle last_parity() {
  return [](const Seq& t) { return Nat(t.empty() ? 0 : Nat(t.back() % 2)); };
}

}  // namespace

TEST_CASE("finiteness probes inspect a window above the bound") {
  NatPredicate below_ten = [](const Nat& m) { return m < 10; };
  ProbeResult held = finiteness_probe(below_ten, FiniteMode{Nat(10), 64});
  CHECK(held.status == ProbeResult::Status::Holds);
  CHECK_FALSE(held.witness.has_value());

  ProbeResult broken = finiteness_probe(below_ten, FiniteMode{Nat(5), 64});
  CHECK(broken.status == ProbeResult::Status::Violated);
  REQUIRE(broken.witness.has_value());
  CHECK(*broken.witness == 6);  // the first member above the bound
}

TEST_CASE("bounded probes scan a tuple for an escape") {
  NatPredicate even = [](const Nat& m) { return m % 2 == 0; };
  BoundedMode mode{2, make_seq({2, 4, 7})};
  ProbeResult escape = finiteness_probe(even, mode);
  CHECK(escape.status == ProbeResult::Status::Holds);
  REQUIRE(escape.witness.has_value());
  CHECK(*escape.witness == 2);  // position of the escaping entry

  ProbeResult trapped = finiteness_probe(even, BoundedMode{2, make_seq({0, 2, 4})});
  CHECK(trapped.status == ProbeResult::Status::Violated);
  CHECK_FALSE(trapped.witness.has_value());

  CHECK_THROWS_AS(finiteness_probe(even, BoundedMode{2, make_seq({0, 2})}), InputError);
  CHECK_THROWS_AS(finiteness_probe(even, BoundedMode{2, make_seq({4, 2, 7})}), InputError);
}

TEST_CASE("almost-finiteness probes scan a prefix") {
  NatPredicate odd = [](const Nat& m) { return m % 2 == 1; };
  ProbeResult open = finiteness_probe(odd, AlmostMode{make_seq({1, 3, 5})});
  CHECK(open.status == ProbeResult::Status::Inconclusive);

  NatPredicate not_three = [](const Nat& m) { return m != 3; };
  ProbeResult found = finiteness_probe(not_three, AlmostMode{make_seq({1, 3, 5})});
  CHECK(found.status == ProbeResult::Status::Holds);
  REQUIRE(found.witness.has_value());
  CHECK(*found.witness == 1);

  CHECK_THROWS_AS(finiteness_probe(odd, AlmostMode{make_seq({3, 1})}), InputError);
}

TEST_CASE("union probes thin the stream before testing the second set") {
  NatPredicate in_b = [](const Nat& m) { return m % 2 == 0; };
  NatPredicate in_c = [](const Nat& m) { return m % 3 == 0; };
  ProbeResult out = almost_union_probe(in_b, in_c, make_seq({0, 1, 2, 3, 4, 5}));
  CHECK(out.status == ProbeResult::Status::Holds);
  REQUIRE(out.witness.has_value());
  CHECK(*out.witness == 1);  // zeta(1) = 1 escapes both sets

  NatPredicate odd = [](const Nat& m) { return m % 2 == 1; };
  ProbeResult covered = almost_union_probe(in_b, odd, make_seq({0, 1, 2, 3, 4, 5}));
  CHECK(covered.status == ProbeResult::Status::Inconclusive);

  CHECK_THROWS_AS(almost_union_probe(in_b, in_c, make_seq({2, 1})), InputError);
}

TEST_CASE("monochromatic and pre-monochromatic tuple scans") {
  CHECK(is_monochromatic(make_seq({0, 2, 4}), sum_parity(), 1));
  CHECK_FALSE(is_monochromatic(make_seq({0, 1, 2}), sum_parity(), 1));
  CHECK(is_monochromatic(make_seq({1, 2, 3, 4}), constant_color(7), 2));

  // color depends only on the first entry: pre-monochromatic, not monochromatic
  ColorOracle front = [](const Seq& t) { return Nat(t.front() % 2); };
  CHECK(is_pre_monochromatic(make_seq({0, 1, 2}), front, 2));
  CHECK_FALSE(is_monochromatic(make_seq({0, 1, 2}), front, 1));

  CHECK_FALSE(is_pre_monochromatic(make_seq({0, 1, 2}), last_parity(), 2));

  CHECK_THROWS_AS(is_monochromatic(make_seq({0, 1}), sum_parity(), 0), InputError);
  CHECK_THROWS_AS(is_monochromatic(make_seq({1, 0}), sum_parity(), 1), InputError);
  CHECK_THROWS_AS(is_monochromatic(make_seq({1}), sum_parity(), 2), InputError);
  CHECK_THROWS_AS(is_pre_monochromatic(make_seq({1}), sum_parity(), 2), InputError);
}

TEST_CASE("the admission tree grows one spine under constant colors") {
  ErdosRadoTree tree = erdos_rado_tree(constant_color(0), constant_color(1), 1, 5);
  REQUIRE(tree.nodes.size() == 5);
  const unsigned long expected_codes[] = {0, 1, 5, 31, 599};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(tree.nodes[i].code == Nat(expected_codes[i]));
    CHECK(tree.nodes[i].code == seq::encode(tree.nodes[i].s));
    if (i == 0) {
      CHECK_FALSE(tree.nodes[i].parent.has_value());
      CHECK_FALSE(tree.nodes[i].attached.has_value());
    } else {
      REQUIRE(tree.nodes[i].parent.has_value());
      CHECK(*tree.nodes[i].parent == i - 1);
      REQUIRE(tree.nodes[i].attached.has_value());
      CHECK(*tree.nodes[i].attached == Nat(static_cast<unsigned long>(i - 1)));
    }
  }
  CHECK(tree.truncated);

  ErdosRadoTree by_admission =
      erdos_rado_tree(constant_color(0), constant_color(1), 1, 5, TreeOrder::AdmissionOrder);
  REQUIRE(by_admission.nodes.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(by_admission.nodes[i].s == tree.nodes[i].s);
  }

  CHECK_THROWS_AS(erdos_rado_tree(constant_color(0), constant_color(0), 0, 5), InputError);
  CHECK_THROWS_AS(erdos_rado_tree(constant_color(0), constant_color(0), 1, 0), InputError);
}

TEST_CASE("the admission tree attaches every element and branches modestly") {
  ErdosRadoTree tree = erdos_rado_tree(sum_parity(), last_parity(), 1, 16);
  REQUIRE(tree.nodes.size() == 16);
  CHECK(tree.truncated);
  std::map<std::size_t, int> children;
  std::vector<bool> attached_seen(15, false);
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    REQUIRE(node.parent.has_value());
    CHECK(*node.parent < i);
    REQUIRE(node.attached.has_value());
    CHECK(node.attached->fits_ulong_p());
    attached_seen[node.attached->get_ui()] = true;
    CHECK(node.s.back() == *node.attached);
    children[*node.parent] += 1;
    CHECK(node.code == seq::encode(node.s));
  }
  for (std::size_t n = 0; n < attached_seen.size(); ++n) CHECK(attached_seen[n]);
  for (const auto& [parent, count] : children) CHECK(count <= 4);
}

TEST_CASE("explicit colorings are validated for totality and range") {
  Coloring c;
  c.r = 2;
  c.k = 2;
  c.M = 3;
  c.table = {{{0, 1}, 0}, {{0, 2}, 1}, {{1, 2}, 0}};
  CHECK_NOTHROW(validate_coloring(c));

  Coloring missing = c;
  missing.table.erase({1, 2});
  CHECK_THROWS_AS(validate_coloring(missing), InputError);

  Coloring out_of_range = c;
  out_of_range.table[{0, 1}] = 2;
  CHECK_THROWS_AS(validate_coloring(out_of_range), InputError);

  Coloring bad_entry = c;
  bad_entry.table.erase({1, 2});
  bad_entry.table[{1, 3}] = 0;
  CHECK_THROWS_AS(validate_coloring(bad_entry), InputError);

  Coloring not_increasing = c;
  not_increasing.table.erase({1, 2});
  not_increasing.table[{2, 1}] = 0;
  CHECK_THROWS_AS(validate_coloring(not_increasing), InputError);

  Coloring zero = c;
  zero.r = 0;
  CHECK_THROWS_AS(validate_coloring(zero), InputError);
}

TEST_CASE("arrow checks match the classical small cases") {
  CHECK(arrow_check(6, 3, 2, 2));
  CHECK_FALSE(arrow_check(5, 3, 2, 2));
  CHECK(min_arrow(3, 2, 2, 10, false) == 6);
  CHECK_FALSE(min_arrow(3, 2, 2, 5, false).has_value());
  CHECK(min_arrow(2, 1, 2, 10, false) == 3);

  // single-color tuples are always monochromatic
  CHECK(arrow_check(3, 3, 3, 1));
}

TEST_CASE("pigeonhole thresholds are exact for small parameters") {
  CHECK(arrow_check(7, 4, 1, 2));
  CHECK_FALSE(arrow_check(6, 4, 1, 2));
  CHECK(arrow_check(7, 3, 1, 3));
  CHECK_FALSE(arrow_check(6, 3, 1, 3));
  CHECK(min_arrow(3, 1, 3, 20, false) == 7);
}

TEST_CASE("relatively large tuples cost more ground elements") {
  CHECK(arrow_star_check(2, 1, 1, 2));
  CHECK(arrow_star_check(3, 1, 1, 2));
  CHECK(arrow_star_check(4, 2, 1, 2));
  CHECK(arrow_star_check(5, 2, 1, 2));
  CHECK_FALSE(arrow_star_check(2, 2, 1, 2));
  CHECK(min_arrow(2, 1, 2, 8, true) == 3);

  // wherever the relatively-large property holds, the plain one follows
  for (std::uint64_t M = 2; M <= 5; ++M) {
    for (std::uint64_t n = 1; n <= 3 && n <= M; ++n) {
      for (std::uint64_t k = 1; k <= 2 && k <= n; ++k) {
        if (arrow_star_check(M, n, k, 2)) CHECK(arrow_check(M, n, k, 2));
      }
    }
  }
}

TEST_CASE("arrow checks refuse oversized or ill-formed instances") {
  CHECK_THROWS_AS(arrow_check(65, 3, 2, 2), InputError);
  CHECK_THROWS_AS(arrow_check(10, 3, 2, 256), InputError);
  CHECK_THROWS_AS(arrow_check(3, 2, 3, 2), InputError);   // k > n
  CHECK_THROWS_AS(arrow_check(2, 3, 1, 2), InputError);   // n > M
  CHECK_THROWS_AS(arrow_check(0, 0, 0, 0), InputError);
  CHECK_THROWS_AS(arrow_check(20, 3, 2, 2), BudgetError);  // 2^190 colorings
  CHECK_THROWS_AS(arrow_check(64, 5, 4, 2), BudgetError);  // tuple count too high
}
