#include "baire/spreads.hpp"

#include <algorithm>

namespace baire::spreads {

namespace {

bool entries_below(const Seq& s, const Nat& bound) {
  for (const Nat& e : s) {
    if (e >= bound) return false;
  }
  return true;
}

}  // namespace

SpreadLaw cantor_law() { return kary_law(2); }

SpreadLaw baire_law() {
  SpreadLaw law;
  law.admit = [](const Seq&) { return true; };
  law.child_witness = [](const Seq&) { return Nat(0); };
  return law;
}

SpreadLaw kary_law(std::uint64_t arity) {
  if (arity == 0) throw InputError("kary_law: arity must be positive");
  Nat bound(static_cast<unsigned long>(arity));
  SpreadLaw law;
  law.admit = [bound](const Seq& s) { return entries_below(s, bound); };
  law.child_witness = [](const Seq&) { return Nat(0); };
  law.fan_bound = [bound](const Seq&) { return Nat(bound - 1); };
  return law;
}

LawReport check_spread_law(const SpreadLaw& law, std::uint64_t depth, std::uint64_t probe_width,
                           std::uint64_t node_budget) {
  LawReport report;
  std::uint64_t visited = 0;
  // Depth-first over the full probe tree, admitted or not: downward-closure
  // breaches live below rejected nodes.
  std::function<void(const Seq&, std::uint64_t)> visit = [&](const Seq& s, std::uint64_t d) {
    if (report.truncated) return;
    if (++visited > node_budget) {
      report.truncated = true;
      return;
    }
    bool admitted = law.admit(s);
    Nat width(static_cast<unsigned long>(probe_width));
    if (law.fan_bound && admitted) width = (*law.fan_bound)(s) + 2;
    if (admitted) {
      Nat w = law.child_witness(s);
      Seq child = s;
      child.push_back(w);
      if (!law.admit(child)) report.violations.push_back({LawViolation::ChildWitness, s});
    }
    for (Nat n(0); n < width; ++n) {
      Seq child = s;
      child.push_back(n);
      bool child_admitted = law.admit(child);
      if (child_admitted && !admitted)
        report.violations.push_back({LawViolation::DownwardClosure, child});
      if (child_admitted && admitted && law.fan_bound && n > (*law.fan_bound)(s))
        report.violations.push_back({LawViolation::FanBound, child});
      if (d + 1 <= depth) visit(child, d + 1);
    }
  };
  visit(Seq{}, 0);
  return report;
}

std::vector<Nat> retract(const SpreadLaw& law, const SequenceOracle& alpha, std::uint64_t n,
                         std::uint64_t search_cap) {
  std::vector<Nat> out;
  Seq alpha_prefix;
  Seq rho_prefix;
  for (std::uint64_t i = 0; i < n; ++i) {
    alpha_prefix.push_back(alpha(i));
    Nat value;
    if (law.admit(alpha_prefix)) {
      value = alpha_prefix.back();
    } else {
      bool found = false;
      Seq probe = rho_prefix;
      probe.push_back(0);
      for (std::uint64_t k = 0; k < search_cap; ++k) {
        probe.back() = static_cast<unsigned long>(k);
        if (law.admit(probe)) {
          value = probe.back();
          found = true;
          break;
        }
      }
      if (!found)
        throw LawError("retract: no admitted child found within cap at position " +
                       std::to_string(i));
    }
    out.push_back(value);
    rho_prefix.push_back(value);
  }
  return out;
}

std::vector<Seq> enumerate_admitted(const SpreadLaw& law, std::uint64_t depth) {
  if (!law.fan_bound) throw InputError("enumerate_admitted: law has no fan bound");
  std::vector<Seq> level;
  if (law.admit(Seq{})) level.push_back(Seq{});
  for (std::uint64_t d = 0; d < depth; ++d) {
    std::vector<Seq> next;
    for (const Seq& s : level) {
      Nat bound = (*law.fan_bound)(s);
      for (Nat n(0); n <= bound; ++n) {
        Seq child = s;
        child.push_back(n);
        if (law.admit(child)) next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(),
            [](const Seq& a, const Seq& b) { return seq::encode(a) < seq::encode(b); });
  return level;
}

std::optional<std::uint64_t> bar_uniform_bound(const SpreadLaw& law, const SeqPredicate& bar,
                                               std::uint64_t max_depth) {
  if (!law.fan_bound) throw InputError("bar_uniform_bound: law has no fan bound");
  // Frontier of admitted nodes with no prefix in the bar; empty frontier at
  // length N means N bounds the bar uniformly.
  std::vector<Seq> frontier;
  if (law.admit(Seq{}) && !bar(Seq{})) frontier.push_back(Seq{});
  for (std::uint64_t depth = 0;; ++depth) {
    if (frontier.empty()) return depth;
    if (depth == max_depth) return std::nullopt;
    std::vector<Seq> next;
    for (const Seq& s : frontier) {
      Nat bound = (*law.fan_bound)(s);
      for (Nat n(0); n <= bound; ++n) {
        Seq child = s;
        child.push_back(n);
        if (law.admit(child) && !bar(child)) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
}

std::optional<std::vector<Seq>> finite_subbar(const SpreadLaw& law, const SeqPredicate& bar,
                                              std::uint64_t max_depth) {
  auto bound = bar_uniform_bound(law, bar, max_depth);
  if (!bound) return std::nullopt;
  // Collect the first barred node down each admitted branch: every prefix of a
  // collected node is admitted and unbarred, so the set is an antichain of
  // minimal barred sequences.
  std::vector<Seq> collected;
  std::vector<Seq> frontier;
  if (law.admit(Seq{})) {
    if (bar(Seq{}))
      collected.push_back(Seq{});
    else
      frontier.push_back(Seq{});
  }
  for (std::uint64_t depth = 0; depth < *bound; ++depth) {
    std::vector<Seq> next;
    for (const Seq& s : frontier) {
      Nat fb = (*law.fan_bound)(s);
      for (Nat n(0); n <= fb; ++n) {
        Seq child = s;
        child.push_back(n);
        if (!law.admit(child)) continue;
        if (bar(child))
          collected.push_back(std::move(child));
        else
          next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  std::sort(collected.begin(), collected.end(),
            [](const Seq& a, const Seq& b) { return seq::encode(a) < seq::encode(b); });
  return collected;
}

std::optional<std::uint64_t> almost_fan_probe(const SpreadLaw& law, const Seq& s,
                                              const Seq& zeta) {
  if (!seq::is_increasing(zeta)) throw InputError("almost_fan_probe: zeta must be increasing");
  if (!law.admit(s)) throw InputError("almost_fan_probe: s is not admitted");
  for (std::uint64_t n = 0; n < zeta.size(); ++n) {
    Seq child = s;
    child.push_back(zeta[n]);
    if (!law.admit(child)) return n;
  }
  return std::nullopt;
}

}  // namespace baire::spreads
