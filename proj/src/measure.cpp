#include "baire/measure.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace baire::measure {

std::pair<Rat, Rat> PairEnum::at(const Nat& n) {
  auto [k1, k2] = seq::unpair(n);
  Rat q = reals::RationalEnum::at(k1);
  Rat w = reals::NonnegEnum::at(k2);
  return {q, q + w};
}

Nat PairEnum::index_of(const Rat& q, const Rat& r) {
  if (r < q) throw InputError("PairEnum: inverted segment");
  return seq::pair(reals::RationalEnum::index_of(q), reals::NonnegEnum::index_of(r - q));
}

std::vector<std::pair<Rat, Rat>> pairs_of(const IntervalList& a) {
  std::vector<std::pair<Rat, Rat>> out;
  out.reserve(a.size());
  for (const Nat& idx : a) out.push_back(PairEnum::at(idx));
  return out;
}

IntervalList list_of(const std::vector<std::pair<Rat, Rat>>& pairs) {
  IntervalList out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(PairEnum::index_of(p.first, p.second));
  return out;
}

std::vector<std::pair<Rat, Rat>> neaten_pairs(std::vector<std::pair<Rat, Rat>> ps) {
  std::erase_if(ps, [](const std::pair<Rat, Rat>& p) { return p.first >= p.second; });
  std::sort(ps.begin(), ps.end());
  std::vector<std::pair<Rat, Rat>> out;
  for (auto& p : ps) {
    if (!out.empty() && p.first < out.back().second) {
      if (p.second > out.back().second) out.back().second = p.second;
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

IntervalList neaten(const IntervalList& a) { return list_of(neaten_pairs(pairs_of(a))); }

Rat mu_of_pairs(const std::vector<std::pair<Rat, Rat>>& ps) {
  Rat total = 0;
  for (const auto& p : neaten_pairs(ps)) total += p.second - p.first;
  return total;
}

Rat mu_finite(const IntervalList& a) { return mu_of_pairs(pairs_of(a)); }

std::pair<Rat, Rat> intersect_pair(const std::pair<Rat, Rat>& s, const std::pair<Rat, Rat>& t) {
  if (s.first > s.second || t.first > t.second) throw InputError("intersect_pair: inverted pair");
  Rat lo = std::max(s.first, t.first);
  Rat hi = std::min(s.second, t.second);
  if (lo > hi) return {Rat(0), Rat(0)};
  return {lo, hi};
}

MeasurableGen finite_gen(IntervalList a) {
  Nat len(static_cast<unsigned long>(a.size()));
  auto data = std::make_shared<IntervalList>(std::move(a));
  MeasurableGen g;
  g.index_at = [data](std::uint64_t j) -> Nat {
    return j < data->size() ? (*data)[j] : Nat(0);
  };
  g.mu_modulus = [len](std::uint64_t) { return len; };
  return g;
}

IntervalList gen_prefix(const MeasurableGen& g, std::uint64_t n) {
  IntervalList out;
  out.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) out.push_back(g.index_at(j));
  return out;
}

Rat gen_prefix_mu(const MeasurableGen& g, std::uint64_t n) {
  return mu_finite(gen_prefix(g, n));
}

namespace {

std::uint64_t modulus_length(const MeasurableGen& g, std::uint64_t k) {
  Nat p = g.mu_modulus(k);
  if (!p.fits_ulong_p()) throw BudgetError("measure: modulus prefix beyond probe budget");
  return p.get_ui();
}

// Least k with 2^-k <= bound.
std::uint64_t precision_for(const Rat& bound) {
  if (!(bound > 0)) throw InputError("measure: nonpositive precision bound");
  std::uint64_t k = 0;
  Rat v = 1;
  while (v > bound) {
    v /= 2;
    ++k;
  }
  return k;
}

// Length of the prefix at precision k, clipped to the window [lo, hi]:
// the localized underestimate, computed without the index round trip.
Rat window_mu(const MeasurableGen& g, const Rat& lo, const Rat& hi, std::uint64_t k) {
  std::uint64_t len = modulus_length(g, k);
  std::vector<std::pair<Rat, Rat>> clipped;
  clipped.reserve(len);
  for (std::uint64_t j = 0; j < len; ++j) {
    auto w = intersect_pair(PairEnum::at(g.index_at(j)), {lo, hi});
    if (w.first < w.second) clipped.push_back(std::move(w));
  }
  return mu_of_pairs(clipped);
}

}  // namespace

Rat mu_approx(const MeasurableGen& g, std::uint64_t k) {
  return gen_prefix_mu(g, modulus_length(g, k));
}

MeasurableGen localize(const MeasurableGen& g, const Rat& q, const Rat& r) {
  if (!(q < r)) throw InputError("localize: window must satisfy q < r");
  MeasurableGen out;
  out.index_at = [g, q, r](std::uint64_t j) {
    auto w = intersect_pair(PairEnum::at(g.index_at(j)), {q, r});
    return PairEnum::index_of(w.first, w.second);
  };
  out.mu_modulus = g.mu_modulus;
  return out;
}

CoverVerdict cover_decision(const MeasurableGen& g, const Rat& q, const Rat& r, std::uint64_t n) {
  if (n == 0) throw InputError("cover_decision: n must be positive");
  if (!(q < r)) throw InputError("cover_decision: window must satisfy q < r");
  Rat w = r - q;
  Rat nn(static_cast<unsigned long>(n));
  std::uint64_t k = precision_for(w / (2 * nn));
  Rat approximant = window_mu(g, q, r, k);
  Rat threshold = (1 - 1 / nn) * w;
  return approximant > threshold ? CoverVerdict::CoversMoreThan : CoverVerdict::NeverCovers;
}

RealNumber point_outside(const MeasurableGen& alpha, const MeasurableGen& beta,
                         std::uint64_t gap_witness) {
  Rat covered = gen_prefix_mu(beta, gap_witness);
  std::optional<Rat> gap;
  for (std::uint64_t k = 0; k <= 63 && !gap; ++k) {
    Rat prefix = gen_prefix_mu(alpha, modulus_length(alpha, k));
    Rat step = pow2(-static_cast<long>(k));
    if (covered > prefix + 2 * step) gap = covered - (prefix + step);
  }
  if (!gap) throw InputError("point_outside: measure gap not certified within 64 probes");
  auto cells = neaten_pairs(pairs_of(gen_prefix(beta, gap_witness)));
  if (cells.empty()) throw InputError("point_outside: beta prefix covers nothing");
  Rat len(static_cast<unsigned long>(cells.size()));
  Rat slack = *gap / (4 * len);
  std::uint64_t kj = precision_for(slack);
  std::optional<std::pair<Rat, Rat>> chosen;
  Rat gap0;
  for (const auto& c : cells) {
    Rat w = c.second - c.first;
    Rat a = window_mu(alpha, c.first, c.second, kj);
    if (w - a >= *gap / len) {
      chosen = c;
      gap0 = w - a - slack;
      break;
    }
  }
  if (!chosen) throw LawError("point_outside: no deficient component (internal)");
  struct State {
    std::vector<std::pair<Rat, Rat>> cell;
    std::vector<Rat> gap;
    std::mutex mu;
  };
  auto st = std::make_shared<State>();
  st->cell.push_back(*chosen);
  st->gap.push_back(gap0);
  MeasurableGen a = alpha;
  auto ensure = [st, a](std::uint64_t t) {
    std::lock_guard<std::mutex> lock(st->mu);
    while (st->cell.size() <= t) {
      auto [lo, hi] = st->cell.back();
      Rat g = st->gap.back();
      Rat mid = (lo + hi) / 2;
      std::uint64_t kk = precision_for(g / 8);
      Rat eighth = g / 8;
      Rat left_gap = (mid - lo) - (window_mu(a, lo, mid, kk) + eighth);
      Rat nlo, nhi, ng;
      if (left_gap >= g / 4) {
        nlo = lo;
        nhi = mid;
        ng = left_gap;
      } else {
        nlo = mid;
        nhi = hi;
        ng = (hi - mid) - (window_mu(a, mid, hi, kk) + eighth);
        if (!(ng > 0)) throw LawError("point_outside: certificate lost (internal)");
      }
      Rat eta = std::min(Rat(ng / 4), Rat((nhi - nlo) / 8));
      st->cell.emplace_back(nlo + eta, nhi - eta);
      st->gap.push_back(ng - 2 * eta);
    }
    return st->cell[t];
  };
  return RealNumber([ensure](std::uint64_t n) { return ensure(n); },
                    [ensure](std::uint64_t m) {
                      Rat width_bound = pow2(-static_cast<long>(m));
                      for (std::uint64_t t = 0;; ++t) {
                        auto c = ensure(t);
                        if (c.second - c.first < width_bound) return t;
                      }
                    });
}

namespace {

struct FanCore {
  MeasurableGen alpha;
  std::uint64_t n = 0;
  Rat upper;  // certified strict upper bound on the total mass
  struct Info {
    bool admitted;
    Rat gap;  // certified deficit: clipped mass <= width - gap
  };
  std::map<Seq, Info> nodes;
  std::map<Seq, int> pick;
  std::mutex mu;

  Info get(const Seq& path) {
    std::lock_guard<std::mutex> lock(mu);
    return get_unlocked(path);
  }

  int witness(const Seq& path) {
    std::lock_guard<std::mutex> lock(mu);
    Info info = get_unlocked(path);
    if (!info.admitted) return 0;
    Seq child = path;
    child.push_back(0);
    get_unlocked(child);  // forces the children decision
    return pick.at(path);
  }

  Info get_unlocked(const Seq& path) {
    auto it = nodes.find(path);
    if (it != nodes.end()) return it->second;
    if (path.empty()) {
      Info root{true, Rat(1) - upper};
      nodes.emplace(path, root);
      return root;
    }
    Seq parent(path.begin(), path.end() - 1);
    Info pi = get_unlocked(parent);
    if (!pi.admitted) {
      Info dead{false, Rat(0)};
      nodes.emplace(path, dead);
      return dead;
    }
    decide_children(parent, pi);
    return nodes.at(path);
  }

  void decide_children(const Seq& parent, const Info& pi) {
    auto [plo, phi] = reals::binary_cell(parent);
    Rat mid = (plo + phi) / 2;
    Rat half = mid - plo;
    Rat eighth = pi.gap / 8;
    std::uint64_t k = precision_for(eighth);
    Rat g0 = half - (window_mu(alpha, plo, mid, k) + eighth);
    Rat g1 = half - (window_mu(alpha, mid, phi, k) + eighth);
    int cert = (g0 >= pi.gap / 4) ? 0 : 1;
    Rat cert_gap = cert == 0 ? g0 : g1;
    if (!(cert_gap > 0)) throw LawError("complement_fan: certificate lost (internal)");
    int sib = 1 - cert;
    Rat slo = sib == 0 ? plo : mid;
    Rat shi = sib == 0 ? mid : phi;
    CoverVerdict verdict = cover_decision(alpha, slo, shi, 2);
    Seq cert_path = parent;
    cert_path.push_back(cert);
    Seq sib_path = parent;
    sib_path.push_back(sib);
    nodes[cert_path] = Info{true, cert_gap};
    nodes[sib_path] = verdict == CoverVerdict::NeverCovers ? Info{true, half / 4}
                                                           : Info{false, Rat(0)};
    pick[parent] = cert;
  }
};

bool binary_path(const Seq& s) {
  for (const Nat& e : s) {
    if (e > 1) return false;
  }
  return true;
}

}  // namespace

ComplementFan complement_fan(const MeasurableGen& alpha, std::uint64_t n) {
  if (n == 0) throw InputError("complement_fan: n must be positive");
  auto core = std::make_shared<FanCore>();
  core->alpha = alpha;
  core->n = n;
  Rat cap = pow2(-static_cast<long>(n + 2));
  std::optional<Rat> upper;
  for (std::uint64_t k = n + 4; k <= n + 12 && !upper; ++k) {
    Rat candidate = mu_approx(alpha, k) + pow2(-static_cast<long>(k));
    if (candidate < cap) upper = candidate;
  }
  if (!upper) throw InputError("complement_fan: mass bound 2^-(n+2) not certified");
  core->upper = *upper;

  ComplementFan out;
  out.law.admit = [core](const Seq& s) {
    if (!binary_path(s)) return false;
    return core->get(s).admitted;
  };
  out.law.child_witness = [core](const Seq& s) -> Nat {
    if (!binary_path(s)) return Nat(0);
    return Nat(core->witness(s));
  };
  out.law.fan_bound = [](const Seq&) { return Nat(1); };

  auto dagger_at = [core](std::uint64_t m) -> Nat {
    Nat idx(static_cast<unsigned long>(m));
    auto [q, r] = PairEnum::at(idx);
    Rat w = r - q;
    if (!(w > 0) || q < 0) return Nat(0);
    if (w.get_num() != 1) return Nat(0);
    Nat den = w.get_den();
    if (mpz_popcount(den.get_mpz_t()) != 1) return Nat(0);
    std::size_t depth = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
    if (depth == 0) return Nat(0);
    if (depth > 64) throw BudgetError("complement_fan: cell depth beyond decision budget");
    Rat scaled = q * Rat(den);
    if (scaled.get_den() != 1) return Nat(0);
    Nat cell = scaled.get_num();
    if (cell >= den) return Nat(0);
    Seq path;
    path.reserve(depth);
    for (std::size_t i = depth; i-- > 0;)
      path.push_back(mpz_tstbit(cell.get_mpz_t(), static_cast<mp_bitcnt_t>(i)) ? 1 : 0);
    Seq parent(path.begin(), path.end() - 1);
    if (!core->get(parent).admitted) return Nat(0);
    if (core->get(path).admitted) return Nat(0);
    return idx;
  };
  auto dagger_mod = [core](std::uint64_t k) -> Nat {
    if (k <= core->n + 1) return Nat(0);
    Nat p = core->alpha.mu_modulus(k + 3);
    std::size_t bits = p > 0 ? mpz_sizeinbase(p.get_mpz_t(), 2) : 1;
    std::uint64_t depth = k + 5 + bits;
    if (depth > 24) throw BudgetError("complement_fan: modulus depth beyond build budget");
    // Every dyadic cell of depth <= `depth` has its code below this bound.
    Nat iq = 1;
    mpz_mul_2exp(iq.get_mpz_t(), iq.get_mpz_t(),
                 (mp_bitcnt_t{1} << (depth + 1)) + 2);
    Nat iw = 1;
    mpz_mul_2exp(iw.get_mpz_t(), iw.get_mpz_t(), static_cast<mp_bitcnt_t>(depth));
    return seq::pair(iq, iw) + 1;
  };
  out.alpha_dagger.index_at = dagger_at;
  out.alpha_dagger.mu_modulus = dagger_mod;

  out.alpha_plus.index_at = [core, dagger_at](std::uint64_t i) -> Nat {
    if (i % 2 == 0) return dagger_at(i / 2);
    std::uint64_t a = (i - 1) / 2;
    if (a > 32) throw BudgetError("complement_fan: rational-cover index beyond build budget");
    Rat qa = reals::RationalEnum::at(Nat(static_cast<unsigned long>(a)));
    Rat h = pow2(-static_cast<long>(core->n + a + 3));
    return PairEnum::index_of(qa - h, qa + h);
  };
  out.alpha_plus.mu_modulus = [core, dagger_mod](std::uint64_t k) -> Nat {
    if (k <= core->n) return Nat(2);
    Nat tail = dagger_mod(k + 1);
    Nat rational_tail(static_cast<unsigned long>(k - core->n));
    return 2 * std::max(tail, rational_tail) + 2;
  };
  return out;
}

void validate_step(const StepApprox& step) {
  if (step.m > 20) throw BudgetError("validate_step: grid beyond build budget");
  if (step.values.size() != (std::size_t{1} << step.m))
    throw InputError("validate_step: expected 2^m values");
  for (const Rat& v : step.values) {
    if (v < -1 || v > 1) throw InputError("validate_step: value outside [-1,1]");
  }
  Rat bound = pow2(-static_cast<long>(step.accuracy + 2));
  if (!(mu_finite(step.exceptional) < bound))
    throw InputError("validate_step: exceptional mass not below 2^-(accuracy+2)");
}

Rat integral_estimate(const StepApprox& step) {
  validate_step(step);
  Rat total = 0;
  for (const Rat& v : step.values) total += v;
  return total * pow2(-static_cast<long>(step.m));
}

RealNumber integral_of(const std::function<StepApprox(std::uint64_t)>& estimates) {
  if (!estimates) throw InputError("integral_of: missing estimate stream");
  struct State {
    std::vector<Rat> est;
    std::vector<std::pair<Rat, Rat>> hull;
    std::mutex mu;
  };
  auto st = std::make_shared<State>();
  auto ensure = [st, estimates](std::uint64_t j) {
    std::lock_guard<std::mutex> lock(st->mu);
    while (st->hull.size() <= j) {
      std::uint64_t i = st->hull.size();
      StepApprox sa = estimates(i);
      if (sa.accuracy != i)
        throw InputError("integral_of: stream accuracy mismatch at index " + std::to_string(i));
      Rat e = integral_estimate(sa);
      Rat step = pow2(-static_cast<long>(i));
      for (std::uint64_t p = 0; p < i; ++p) {
        if (abs(st->est[p] - e) > pow2(-static_cast<long>(p)) + step)
          throw InputError("integral_of: estimates at accuracies " + std::to_string(p) + " and " +
                           std::to_string(i) + " are inconsistent");
      }
      Rat lo = e - step;
      Rat hi = e + step;
      if (!st->hull.empty()) {
        lo = std::max(lo, st->hull.back().first);
        hi = std::min(hi, st->hull.back().second);
      }
      st->est.push_back(std::move(e));
      st->hull.emplace_back(std::move(lo), std::move(hi));
    }
    return st->hull[j];
  };
  reals::SegmentStream stream;
  stream.at = [ensure](std::uint64_t j) {
    auto h = ensure(j);
    return std::make_pair(reals::from_rational(h.first), reals::from_rational(h.second));
  };
  stream.modulus = [](std::uint64_t k) { return k + 1; };
  return reals::cantor_intersection(stream);
}

LevelCut level_cut(const std::function<StepApprox(std::uint64_t)>& estimates, const Rat& q,
                   const Rat& r, std::uint64_t n) {
  if (!estimates) throw InputError("level_cut: missing estimate stream");
  if (!(q >= -1 && q < r && r <= 1)) throw InputError("level_cut: need -1 <= q < r <= 1");
  if (n > 24) throw BudgetError("level_cut: class count beyond build budget");
  Rat span = r - q;
  std::uint64_t l = 0;
  while (!(pow2(-static_cast<long>(l)) < span * pow2(-static_cast<long>(n + 1)))) ++l;
  StepApprox sa = estimates(l);
  validate_step(sa);
  if (sa.accuracy != l) throw InputError("level_cut: provider accuracy mismatch");
  Rat cell_width = pow2(-static_cast<long>(l));
  std::uint64_t j0 = 0;
  while (!(r < q + Rat(static_cast<unsigned long>(j0 + 1)) * cell_width)) ++j0;
  std::vector<std::vector<std::uint64_t>> classes(j0);
  std::size_t grid = std::size_t{1} << sa.m;
  for (std::uint64_t i = 0; i < grid; ++i) {
    Rat offset = (sa.values[i] - q) / cell_width;
    if (offset < 0) continue;
    Nat cls;
    mpz_fdiv_q(cls.get_mpz_t(), offset.get_num_mpz_t(), offset.get_den_mpz_t());
    if (cls >= Nat(static_cast<unsigned long>(j0))) continue;
    classes[cls.get_ui()].push_back(i);
  }
  std::uint64_t j1 = 0;
  for (std::uint64_t j = 1; j < j0; ++j) {
    if (classes[j].size() < classes[j1].size()) j1 = j;
  }
  Rat quarter = pow2(-static_cast<long>(l + 2));
  Rat s = q + Rat(static_cast<unsigned long>(j1)) * cell_width + quarter;
  Rat t = q + Rat(static_cast<unsigned long>(j1 + 1)) * cell_width - quarter;
  std::vector<std::pair<Rat, Rat>> added;
  Rat grid_step = pow2(-static_cast<long>(sa.m));
  for (std::uint64_t i : classes[j1]) {
    Rat lo = Rat(static_cast<unsigned long>(i)) * grid_step;
    added.emplace_back(lo, lo + grid_step);
  }
  Rat radius = pow2(-static_cast<long>(l + 3)) / (Rat(static_cast<unsigned long>(grid)) + 1);
  for (std::uint64_t i = 0; i <= grid; ++i) {
    Rat point = Rat(static_cast<unsigned long>(i)) * grid_step;
    added.emplace_back(point - radius, point + radius);
  }
  IntervalList avoided = sa.exceptional;
  for (const auto& p : added) avoided.push_back(PairEnum::index_of(p.first, p.second));
  if (!(mu_finite(avoided) < pow2(-static_cast<long>(n))))
    throw LawError("level_cut: certificate failed (internal)");
  return {std::move(s), std::move(t), std::move(avoided)};
}

}  // namespace baire::measure
