#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "baire/reals.hpp"
#include "baire/seqcode.hpp"
#include "baire/spreads.hpp"

namespace baire::measure {

using reals::RealNumber;
using seq::Seq;

// Codes every rational segment (q, r) with q <= r as one natural: the pair of
// the left endpoint's index among all rationals and the width's index among
// the nonnegative rationals. Index 0 is the degenerate segment (0, 0).
struct PairEnum {
  static std::pair<Rat, Rat> at(const Nat& n);
  static Nat index_of(const Rat& q, const Rat& r);
};

// A finite union of rational segments, kept as PairEnum codes.
using IntervalList = std::vector<Nat>;

std::vector<std::pair<Rat, Rat>> pairs_of(const IntervalList& a);
IntervalList list_of(const std::vector<std::pair<Rat, Rat>>& pairs);

// Canonical form: degenerate segments dropped, the rest sorted, segments with
// properly overlapping interiors merged. Segments that merely touch stay
// separate.
IntervalList neaten(const IntervalList& a);
std::vector<std::pair<Rat, Rat>> neaten_pairs(std::vector<std::pair<Rat, Rat>> ps);

// Total length of the union of the listed segments.
Rat mu_finite(const IntervalList& a);
Rat mu_of_pairs(const std::vector<std::pair<Rat, Rat>>& ps);

// Intersection of two segments; (0, 0) when they are disjoint.
std::pair<Rat, Rat> intersect_pair(const std::pair<Rat, Rat>& s, const std::pair<Rat, Rat>& t);

// A measurable set generator: a stream of segment codes together with a
// modulus giving, for each k, a prefix length whose union length is within
// 2^-k of the whole set's.
struct MeasurableGen {
  std::function<Nat(std::uint64_t)> index_at;
  std::function<Nat(std::uint64_t)> mu_modulus;
};

MeasurableGen finite_gen(IntervalList a);
IntervalList gen_prefix(const MeasurableGen& g, std::uint64_t n);
Rat gen_prefix_mu(const MeasurableGen& g, std::uint64_t n);

// Union length underestimate within 2^-k, read off at the modulus.
Rat mu_approx(const MeasurableGen& g, std::uint64_t k);

// The generator of the intersection with the window [q, r]; the modulus is
// inherited, as localization never increases increments.
MeasurableGen localize(const MeasurableGen& g, const Rat& q, const Rat& r);

enum class CoverVerdict {
  CoversMoreThan,  // the set covers more than (1 - 1/n) of the window
  NeverCovers,     // the set never covers the whole window
};

// Decides, for a nondegenerate window [q, r] and positive n, which of the two
// (jointly exhaustive) verdicts holds, by one localized length approximation.
CoverVerdict cover_decision(const MeasurableGen& g, const Rat& q, const Rat& r, std::uint64_t n);

// Given evidence that beta's first gap_witness segments outweigh alpha, digs a
// shrinking sequence of cells, each carrying a certified length deficit, whose
// limit lies inside the beta-cover but escapes the alpha-cover.
RealNumber point_outside(const MeasurableGen& alpha, const MeasurableGen& beta,
                         std::uint64_t gap_witness);

// The fan of binary cells escaping a set of mass below 2^-(n+2): at every
// admitted cell one child is kept by a certified deficit and the other is
// admitted or rejected by cover_decision with n = 2. alpha_dagger collects the
// rejected children of admitted cells; alpha_plus interleaves that collection
// with a shrinking cover of all rationals.
struct ComplementFan {
  spreads::SpreadLaw law;
  MeasurableGen alpha_dagger;
  MeasurableGen alpha_plus;
};

ComplementFan complement_fan(const MeasurableGen& alpha, std::uint64_t n);

// A step approximation of a function on [0, 1]: constant on 2^m half-open
// grid cells, trusted outside a small exceptional cover.
struct StepApprox {
  std::uint64_t m = 0;
  std::vector<Rat> values;  // 2^m entries, each inside [-1, 1]
  IntervalList exceptional;
  std::uint64_t accuracy = 0;  // exceptional mass below 2^-(accuracy+2)
};

void validate_step(const StepApprox& step);

// Mean of the cell values: the integral of the step function.
Rat integral_estimate(const StepApprox& step);

// The integral as a real: estimates(i) must be accurate to 2^-i, enforced
// pairwise at probe time; the value is the common point of the running
// intersections of the estimate segments.
RealNumber integral_of(const std::function<StepApprox(std::uint64_t)>& estimates);

struct LevelCut {
  Rat s;
  Rat t;
  IntervalList avoided;  // mass below 2^-n; off it, no cell value meets [s, t]
};

// Finds q < s < t < r such that the approximating step function avoids [s, t]
// outside a cover of mass below 2^-n.
LevelCut level_cut(const std::function<StepApprox(std::uint64_t)>& estimates, const Rat& q,
                   const Rat& r, std::uint64_t n);

}  // namespace baire::measure
