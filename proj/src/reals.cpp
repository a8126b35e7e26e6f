#include "baire/reals.hpp"

#include <algorithm>

namespace baire::reals {

namespace {

// Positive rationals in breadth-first tree order, one-based: node k has value
// a/b, its left child a/(a+b) at 2k, its right child (a+b)/b at 2k+1.
Rat tree_value(const Nat& k) {
  Nat a = 1, b = 1;
  std::size_t len = mpz_sizeinbase(k.get_mpz_t(), 2);
  // Consume bits below the leading one in runs; a run of c equal bits is one
  // big-integer update.
  std::size_t i = len - 1;
  while (i > 0) {
    int bit = mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(i - 1));
    std::size_t run = 1;
    while (i - run > 0 &&
           mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(i - run - 1)) == bit)
      ++run;
    Nat c(static_cast<unsigned long>(run));
    if (bit == 0)
      b += c * a;
    else
      a += c * b;
    i -= run;
  }
  return Rat(a) / Rat(b);
}

// Inverse of tree_value for a positive rational in lowest terms.
Nat tree_index(const Rat& q) {
  Nat p = q.get_num();
  Nat b = q.get_den();
  // Runs from the leaf up: repeatedly strip maximal left or right descents.
  std::vector<std::pair<int, Nat>> runs;
  while (p != b) {
    if (p > b) {
      Nat c = (p - 1) / b;
      runs.emplace_back(1, c);
      p -= c * b;
    } else {
      Nat c = (b - 1) / p;
      runs.emplace_back(0, c);
      b -= c * p;
    }
  }
  Nat k = 1;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    if (!it->second.fits_ulong_p()) throw BudgetError("rational index exceeds the build budget");
    mp_bitcnt_t c = static_cast<mp_bitcnt_t>(it->second.get_ui());
    mpz_mul_2exp(k.get_mpz_t(), k.get_mpz_t(), c);
    if (it->first == 1) {
      Nat ones = 1;
      mpz_mul_2exp(ones.get_mpz_t(), ones.get_mpz_t(), c);
      k += ones - 1;
    }
  }
  return k;
}

}  // namespace

Rat RationalEnum::at(const Nat& n) {
  if (n == 0) return Rat(0);
  Nat k = (n + 1) / 2;
  Rat v = tree_value(k);
  bool positive = mpz_odd_p(n.get_mpz_t());
  return positive ? v : Rat(-v);
}

Nat RationalEnum::index_of(const Rat& q) {
  if (q == 0) return Nat(0);
  Nat k = tree_index(abs(q));
  return q > 0 ? Nat(2 * k - 1) : Nat(2 * k);
}

Rat NonnegEnum::at(const Nat& n) {
  if (n == 0) return Rat(0);
  return tree_value(n);
}

Nat NonnegEnum::index_of(const Rat& q) {
  if (q < 0) throw InputError("NonnegEnum: negative rational");
  if (q == 0) return Nat(0);
  return tree_index(q);
}

RealNumber::RealNumber(ApproxFn approx, ModulusFn modulus) : state_(std::make_shared<State>()) {
  if (!approx || !modulus) throw InputError("RealNumber: missing stream or modulus");
  state_->approx_fn = std::move(approx);
  state_->modulus_fn = std::move(modulus);
}

std::pair<Rat, Rat> RealNumber::approx(std::uint64_t n) const {
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->approx_memo.find(n);
    if (it != state_->approx_memo.end()) return it->second;
  }
  std::pair<Rat, Rat> p = state_->approx_fn(n);
  if (p.first > p.second)
    throw InputError("real stream: inverted segment at index " + std::to_string(n));
  std::lock_guard<std::mutex> lock(state_->mu);
  auto next = state_->approx_memo.lower_bound(n);
  if (next != state_->approx_memo.end() &&
      (next->second.first < p.first || next->second.second > p.second))
    throw InputError("real stream: not nested between indices " + std::to_string(n) + " and " +
                     std::to_string(next->first));
  if (next != state_->approx_memo.begin()) {
    auto prev = std::prev(next);
    if (p.first < prev->second.first || p.second > prev->second.second)
      throw InputError("real stream: not nested between indices " + std::to_string(prev->first) +
                       " and " + std::to_string(n));
  }
  state_->approx_memo.emplace(n, p);
  return p;
}

std::uint64_t RealNumber::modulus(std::uint64_t m) const {
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->modulus_memo.find(m);
    if (it != state_->modulus_memo.end()) return it->second;
  }
  std::uint64_t n = state_->modulus_fn(m);
  auto p = approx(n);
  if (!(p.second - p.first < pow2(-static_cast<long>(m))))
    throw InputError("real stream: modulus fails to shrink at precision " + std::to_string(m));
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->modulus_memo.emplace(m, n);
  return n;
}

RealValidation validate_real(const RealNumber& x, std::uint64_t depth) {
  try {
    std::pair<Rat, Rat> prev;
    for (std::uint64_t n = 0; n <= depth; ++n) {
      auto p = x.approx(n);
      if (n > 0 && (p.first < prev.first || p.second > prev.second))
        return {false, "segments not nested at index " + std::to_string(n)};
      prev = p;
    }
    for (std::uint64_t m = 0; m <= depth; ++m) {
      std::uint64_t n = x.modulus(m);
      auto p = x.approx(n);
      if (!(p.second - p.first < pow2(-static_cast<long>(m))))
        return {false, "modulus too wide at precision " + std::to_string(m)};
    }
  } catch (const InputError& e) {
    return {false, e.what()};
  }
  return {true, ""};
}

RealNumber from_rational(const Rat& q) {
  return RealNumber([q](std::uint64_t) { return std::make_pair(q, q); },
                    [](std::uint64_t) { return std::uint64_t{0}; });
}

std::optional<std::uint64_t> lt_with_fuel(const RealNumber& x, const RealNumber& y,
                                          std::uint64_t fuel) {
  for (std::uint64_t n = 0; n < fuel; ++n) {
    if (x.upper(n) < y.lower(n)) return n;
  }
  return std::nullopt;
}

LeCheck le_check(const RealNumber& x, const RealNumber& y, std::uint64_t depth) {
  for (std::uint64_t n = 0; n <= depth; ++n) {
    if (x.lower(n) > y.upper(n)) return {true, n};
  }
  return {false, std::nullopt};
}

CotransResult cotrans(const RealNumber& x, const RealNumber& y, std::uint64_t witness,
                      const RealNumber& z) {
  Rat gap = y.lower(witness) - x.upper(witness);
  if (!(gap > 0)) throw InputError("cotrans: no rational evidence of x < y at the witness");
  long m = 0;
  while (pow2(-m) >= gap) ++m;
  std::uint64_t n = z.modulus(static_cast<std::uint64_t>(m));
  std::uint64_t k = std::max(n, witness);
  if (x.upper(k) < z.lower(k)) return {CotransResult::Side::XBelowZ, k};
  if (z.upper(k) < y.lower(k)) return {CotransResult::Side::ZBelowY, k};
  throw InputError("cotrans: probe failed to separate at index " + std::to_string(k));
}

RealNumber cantor_intersection(const SegmentStream& segments) {
  if (!segments.at || !segments.modulus) throw InputError("cantor_intersection: missing stream");
  struct State {
    std::vector<std::pair<Rat, Rat>> hull;  // running intersections
    std::mutex mu;
  };
  auto st = std::make_shared<State>();
  auto seg = segments;
  auto ensure = [st, seg](std::uint64_t i) {
    std::lock_guard<std::mutex> lock(st->mu);
    while (st->hull.size() <= i) {
      std::uint64_t j = st->hull.size();
      std::uint64_t idx = seg.modulus(j + 2);
      auto [xr, yr] = seg.at(idx);
      std::uint64_t k = std::max(xr.modulus(j + 2), yr.modulus(j + 2));
      Rat lo = xr.lower(k);
      Rat hi = yr.upper(k);
      if (lo > hi)
        throw InputError("segment stream: inverted segment at index " + std::to_string(idx));
      if (!st->hull.empty()) {
        lo = std::max(lo, st->hull.back().first);
        hi = std::min(hi, st->hull.back().second);
      }
      if (lo > hi)
        throw InputError("segment stream: not shrinking at index " + std::to_string(idx));
      if (!(hi - lo < pow2(-static_cast<long>(j))))
        throw InputError("segment stream: modulus violation at index " + std::to_string(idx));
      st->hull.emplace_back(std::move(lo), std::move(hi));
    }
    return st->hull[i];
  };
  return RealNumber([ensure](std::uint64_t n) { return ensure(n); },
                    [](std::uint64_t m) { return m; });
}

SequenceOracle converge_force(const SequenceOracle& alpha) {
  struct State {
    std::vector<Nat> phi;
    std::mutex mu;
  };
  auto st = std::make_shared<State>();
  return [st, alpha](std::uint64_t n) -> Nat {
    std::lock_guard<std::mutex> lock(st->mu);
    while (st->phi.size() <= n) {
      std::size_t i = st->phi.size();
      if (i == 0) {
        st->phi.emplace_back(0);
        continue;
      }
      Nat cand = alpha(i);
      Rat step = abs(RationalEnum::at(cand) - RationalEnum::at(st->phi[i - 1]));
      st->phi.push_back(step <= pow2(-static_cast<long>(i - 1)) ? cand : st->phi[i - 1]);
    }
    return st->phi[n];
  };
}

RealNumber converge_limit(const SequenceOracle& alpha) {
  SequenceOracle phi = converge_force(alpha);
  return RealNumber(
      [phi](std::uint64_t n) -> std::pair<Rat, Rat> {
        Rat c = RationalEnum::at(phi(n + 2));
        Rat r = pow2(-static_cast<long>(n + 1));
        return {c - r, c + r};
      },
      [](std::uint64_t m) { return m + 1; });
}

std::pair<Rat, Rat> binary_cell(const Seq& s) {
  Rat l = 0, r = 1;
  for (const Nat& bit : s) {
    if (bit > 1) throw InputError("binary_cell: digit outside {0,1}");
    Rat mid = (l + r) / 2;
    if (bit == 0)
      r = mid;
    else
      l = mid;
  }
  return {l, r};
}

RealNumber from_binary(const SequenceOracle& gamma) {
  return RealNumber(
      [gamma](std::uint64_t n) {
        Seq prefix;
        prefix.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) {
          Nat bit = gamma(i);
          if (bit > 1) throw InputError("from_binary: digit outside {0,1}");
          prefix.push_back(std::move(bit));
        }
        return binary_cell(prefix);
      },
      [](std::uint64_t m) { return m + 1; });
}

std::pair<Rat, Rat> trisect(const Seq& s) {
  Rat l = 0, r = 1;
  for (const Nat& bit : s) {
    if (bit > 1) throw InputError("trisect: digit outside {0,1}");
    if (bit == 0)
      r = l / 3 + r * 2 / 3;
    else
      l = l * 2 / 3 + r / 3;
  }
  return {l, r};
}

}  // namespace baire::reals
