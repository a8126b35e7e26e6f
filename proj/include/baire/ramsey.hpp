#pragma once

#include <functional>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "baire/seqcode.hpp"

namespace baire::ramsey {

using seq::Seq;

// Membership oracle of a decidable set of naturals.
using NatPredicate = std::function<bool(const Nat&)>;

// Color oracle over increasing tuples.
using ColorOracle = std::function<Nat(const Seq&)>;

struct ProbeResult {
  enum class Status { Holds, Violated, Inconclusive };
  Status status;
  std::optional<Nat> witness;
};

struct FiniteMode {
  Nat bound;
  std::uint64_t window = 64;  // elements probed above the bound
};
struct BoundedMode {
  std::uint64_t k = 0;
  Seq tuple;  // strictly increasing, length k+1
};
struct AlmostMode {
  Seq zeta;  // strictly increasing prefix
};
using ProbeMode = std::variant<FiniteMode, BoundedMode, AlmostMode>;

// Probes the three finiteness notions on the given evidence: finite checks a
// window above the bound, bounded looks for a tuple entry outside the set,
// almost scans an increasing prefix for an escape.
ProbeResult finiteness_probe(const NatPredicate& in_set, const ProbeMode& mode);

// Thinned probe for a union: enumerates the positions where zeta escapes b,
// then scans those for an escape from c as well.
ProbeResult almost_union_probe(const NatPredicate& in_b, const NatPredicate& in_c,
                               const Seq& zeta);

// All k-tuples drawn from the positions of s get the same color.
bool is_monochromatic(const Seq& s, const ColorOracle& alpha, std::uint64_t k);

// All (k+1)-tuples drawn from s that share their first k entries get the same
// color: the last entry does not matter yet.
bool is_pre_monochromatic(const Seq& s, const ColorOracle& alpha, std::uint64_t k_plus_1);

enum class TreeOrder {
  NumericCode,     // largest candidate by sequence code
  AdmissionOrder,  // most recently admitted candidate
};

struct ErdosRadoTree {
  struct Node {
    Seq s;
    Nat code;
    std::optional<std::size_t> parent;  // index into nodes; root has none
    std::optional<Nat> attached;        // the element whose admission created this node
  };
  std::vector<Node> nodes;  // nodes[0] is the root <>
  bool truncated = false;
};

// Grows the admission tree: each element n attaches below the largest already
// admitted node t (empty, or ending below n) whose extension by n stays
// pre-monochromatic for both oracles; extensions shorter than k+1 are
// vacuously pre-monochromatic. Stops at the node budget.
ErdosRadoTree erdos_rado_tree(const ColorOracle& alpha_dag, const ColorOracle& beta_dag,
                              std::uint64_t k, std::uint64_t node_budget,
                              TreeOrder order = TreeOrder::NumericCode);

// Explicit finite coloring table, total on the increasing k-tuples over M.
struct Coloring {
  std::uint64_t r = 1;
  std::uint64_t k = 1;
  std::uint64_t M = 1;
  std::map<std::vector<std::uint64_t>, std::uint64_t> table;
};

void validate_coloring(const Coloring& c);

inline constexpr std::uint64_t kDefaultArrowBudget = std::uint64_t{1} << 33;

// True iff every r-coloring of the increasing k-tuples over M admits a
// monochromatic increasing n-tuple.
bool arrow_check(std::uint64_t M, std::uint64_t n, std::uint64_t k, std::uint64_t r,
                 std::uint64_t budget = kDefaultArrowBudget);

// The relatively-large variant: the monochromatic tuple must have length at
// least n and at least its own first element.
bool arrow_star_check(std::uint64_t M, std::uint64_t n, std::uint64_t k, std::uint64_t r,
                      std::uint64_t budget = kDefaultArrowBudget);

// Least M <= cap with the (star-)arrow property.
std::optional<std::uint64_t> min_arrow(std::uint64_t n, std::uint64_t k, std::uint64_t r,
                                       std::uint64_t cap, bool star,
                                       std::uint64_t budget = kDefaultArrowBudget);

}  // namespace baire::ramsey
