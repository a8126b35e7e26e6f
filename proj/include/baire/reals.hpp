#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "baire/seqcode.hpp"

namespace baire::reals {

using seq::Seq;

using SequenceOracle = std::function<Nat(std::uint64_t)>;

// Zero-based enumeration of all rationals: 0 first, then the positive
// rationals in tree order interleaved with their negatives.
struct RationalEnum {
  static Rat at(const Nat& n);
  static Nat index_of(const Rat& q);
};

// Same scheme restricted to the nonnegative rationals (used as widths).
struct NonnegEnum {
  static Rat at(const Nat& n);
  static Nat index_of(const Rat& q);
};

// A real given by a stream of nested rational segments plus a modulus: the
// pair at modulus(m) is narrower than 2^-m. Probes are memoized and checked;
// a stream that widens, or a modulus that fails to shrink the width, raises
// InputError at probe time.
class RealNumber {
 public:
  using ApproxFn = std::function<std::pair<Rat, Rat>(std::uint64_t)>;
  using ModulusFn = std::function<std::uint64_t(std::uint64_t)>;

  RealNumber(ApproxFn approx, ModulusFn modulus);

  std::pair<Rat, Rat> approx(std::uint64_t n) const;
  std::uint64_t modulus(std::uint64_t m) const;
  Rat lower(std::uint64_t n) const { return approx(n).first; }
  Rat upper(std::uint64_t n) const { return approx(n).second; }

 private:
  struct State {
    ApproxFn approx_fn;
    ModulusFn modulus_fn;
    std::map<std::uint64_t, std::pair<Rat, Rat>> approx_memo;
    std::map<std::uint64_t, std::uint64_t> modulus_memo;
    std::mutex mu;
  };
  std::shared_ptr<State> state_;
};

struct RealValidation {
  bool ok;
  std::string issue;  // empty when ok
};

// Probes segments 0..depth and moduli 0..depth, checking nesting and width.
RealValidation validate_real(const RealNumber& x, std::uint64_t depth);

RealNumber from_rational(const Rat& q);

// Least n < fuel with upper(x, n) < lower(y, n): rational evidence for x < y.
std::optional<std::uint64_t> lt_with_fuel(const RealNumber& x, const RealNumber& y,
                                          std::uint64_t fuel);

struct LeCheck {
  bool refuted;                        // found n with lower(x, n) > upper(y, n)
  std::optional<std::uint64_t> index;  // the refuting probe
};

// Searches n <= depth for a refutation of x <= y; a refutation is conclusive,
// a pass is only evidence up to the probed depth.
LeCheck le_check(const RealNumber& x, const RealNumber& y, std::uint64_t depth);

struct CotransResult {
  enum class Side { XBelowZ, ZBelowY };
  Side side;
  std::uint64_t index;  // probe at which the chosen inequality is rational-evident
};

// From rational evidence x < y at `witness`, decides x < z or z < y, preferring
// the x < z side when both hold at the probed index.
CotransResult cotrans(const RealNumber& x, const RealNumber& y, std::uint64_t witness,
                      const RealNumber& z);

// A stream of real segments [x_n, y_n] with a modulus certifying
// y_n - x_n < 2^-m at modulus(m).
struct SegmentStream {
  std::function<std::pair<RealNumber, RealNumber>(std::uint64_t)> at;
  std::function<std::uint64_t(std::uint64_t)> modulus;
};

// The common point of a shrinking nested stream of real segments. Violations
// of shrinking are detected at probe time and raise InputError naming the
// offending stream index.
RealNumber cantor_intersection(const SegmentStream& segments);

// Index stream forced to be 2^-n-Cauchy: keeps alpha(n+1) only when its
// rational is within 2^-n of the current one. phi(0) = 0.
SequenceOracle converge_force(const SequenceOracle& alpha);

// The limit of the forced stream, centred on the forced rationals.
RealNumber converge_limit(const SequenceOracle& alpha);

// Binary-digit halving map: the dyadic segment selected by the digits of s.
std::pair<Rat, Rat> binary_cell(const Seq& s);

// The real coded by a binary sequence through binary_cell.
RealNumber from_binary(const SequenceOracle& gamma);

// Overlapping trisection: digit 0 keeps the left two thirds, digit 1 the
// right two thirds.
std::pair<Rat, Rat> trisect(const Seq& s);

}  // namespace baire::reals
