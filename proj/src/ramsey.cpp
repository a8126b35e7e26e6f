#include "baire/ramsey.hpp"

#include <algorithm>

namespace baire::ramsey {

ProbeResult finiteness_probe(const NatPredicate& in_set, const ProbeMode& mode) {
  if (const auto* finite = std::get_if<FiniteMode>(&mode)) {
    for (std::uint64_t d = 1; d <= finite->window; ++d) {
      Nat m = finite->bound + Nat(static_cast<unsigned long>(d));
      if (in_set(m)) return {ProbeResult::Status::Violated, m};
    }
    return {ProbeResult::Status::Holds, std::nullopt};
  }
  if (const auto* bounded = std::get_if<BoundedMode>(&mode)) {
    if (bounded->tuple.size() != bounded->k + 1)
      throw InputError("finiteness_probe: tuple must have length k+1");
    if (!seq::is_increasing(bounded->tuple))
      throw InputError("finiteness_probe: tuple must be strictly increasing");
    for (std::size_t i = 0; i < bounded->tuple.size(); ++i) {
      if (!in_set(bounded->tuple[i])) return {ProbeResult::Status::Holds, Nat(i)};
    }
    return {ProbeResult::Status::Violated, std::nullopt};
  }
  const auto& almost = std::get<AlmostMode>(mode);
  if (!seq::is_increasing(almost.zeta))
    throw InputError("finiteness_probe: zeta must be strictly increasing");
  for (std::size_t i = 0; i < almost.zeta.size(); ++i) {
    if (!in_set(almost.zeta[i])) return {ProbeResult::Status::Holds, Nat(i)};
  }
  return {ProbeResult::Status::Inconclusive, std::nullopt};
}

ProbeResult almost_union_probe(const NatPredicate& in_b, const NatPredicate& in_c,
                               const Seq& zeta) {
  if (!seq::is_increasing(zeta))
    throw InputError("almost_union_probe: zeta must be strictly increasing");
  for (std::size_t p = 0; p < zeta.size(); ++p) {
    if (in_b(zeta[p])) continue;  // eta enumerates exactly the escapes from b
    if (!in_c(zeta[p])) return {ProbeResult::Status::Holds, Nat(p)};
  }
  return {ProbeResult::Status::Inconclusive, std::nullopt};
}

namespace {

// Visits the strictly increasing k-tuples over positions [0, len).
template <typename Fn>
bool for_each_tuple(std::size_t len, std::uint64_t k, const Fn& fn) {
  std::vector<std::size_t> t(k);
  for (std::uint64_t i = 0; i < k; ++i) {
    if (i >= len) return true;  // no tuples at all
    t[i] = i;
  }
  if (k == 0) return fn(t);
  while (true) {
    if (!fn(t)) return false;
    std::size_t i = k;
    while (i-- > 0) {
      if (t[i] + (k - i) + 1 <= len) {
        ++t[i];
        for (std::size_t j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
        break;
      }
      if (i == 0) return true;
    }
  }
}

Seq select(const Seq& s, const std::vector<std::size_t>& positions) {
  Seq out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(s[p]);
  return out;
}

}  // namespace

bool is_monochromatic(const Seq& s, const ColorOracle& alpha, std::uint64_t k) {
  if (k == 0) throw InputError("is_monochromatic: k must be positive");
  if (!seq::is_increasing(s)) throw InputError("is_monochromatic: s must be strictly increasing");
  if (s.size() < k) throw InputError("is_monochromatic: s shorter than k");
  std::optional<Nat> color;
  bool mono = for_each_tuple(s.size(), k, [&](const std::vector<std::size_t>& t) {
    Nat c = alpha(select(s, t));
    if (!color) {
      color = c;
      return true;
    }
    return *color == c;
  });
  return mono;
}

bool is_pre_monochromatic(const Seq& s, const ColorOracle& alpha, std::uint64_t k_plus_1) {
  if (k_plus_1 == 0) throw InputError("is_pre_monochromatic: tuple size must be positive");
  std::uint64_t k = k_plus_1 - 1;
  if (!seq::is_increasing(s))
    throw InputError("is_pre_monochromatic: s must be strictly increasing");
  if (s.size() < k_plus_1) throw InputError("is_pre_monochromatic: s shorter than k+1");
  // Tuples sharing their first k positions must agree regardless of the last.
  return for_each_tuple(s.size(), k, [&](const std::vector<std::size_t>& t) {
    std::size_t start = k == 0 ? 0 : t.back() + 1;
    std::optional<Nat> color;
    for (std::size_t p = start; p < s.size(); ++p) {
      std::vector<std::size_t> full = t;
      full.push_back(p);
      Nat c = alpha(select(s, full));
      if (!color)
        color = c;
      else if (*color != c)
        return false;
    }
    return true;
  });
}

namespace {

// Vacuous below length k+1: no (k+1)-tuple fits inside the sequence yet.
bool pre_mono_or_short(const Seq& s, const ColorOracle& alpha, std::uint64_t k_plus_1) {
  if (s.size() < k_plus_1) return true;
  return is_pre_monochromatic(s, alpha, k_plus_1);
}

}  // namespace

ErdosRadoTree erdos_rado_tree(const ColorOracle& alpha_dag, const ColorOracle& beta_dag,
                              std::uint64_t k, std::uint64_t node_budget, TreeOrder order) {
  if (k == 0) throw InputError("erdos_rado_tree: k must be positive");
  if (node_budget == 0) throw InputError("erdos_rado_tree: budget must be at least 1");
  ErdosRadoTree tree;
  tree.nodes.push_back({Seq{}, Nat(0), std::nullopt, std::nullopt});
  Nat n(0);
  while (tree.nodes.size() < node_budget) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      const auto& node = tree.nodes[i];
      if (!node.s.empty() && node.s.back() >= n) continue;
      Seq extended = node.s;
      extended.push_back(n);
      if (!pre_mono_or_short(extended, alpha_dag, k + 1)) continue;
      if (!pre_mono_or_short(extended, beta_dag, k + 1)) continue;
      if (!best) {
        best = i;
        continue;
      }
      bool better = order == TreeOrder::NumericCode ? tree.nodes[i].code > tree.nodes[*best].code
                                                    : i > *best;
      if (better) best = i;
    }
    if (best) {
      Seq s = tree.nodes[*best].s;
      s.push_back(n);
      Nat code = seq::encode(s);
      tree.nodes.push_back({std::move(s), std::move(code), best, n});
    }
    ++n;
  }
  tree.truncated = true;  // the full tree is infinite; the budget always cuts it
  return tree;
}

void validate_coloring(const Coloring& c) {
  if (c.r == 0 || c.k == 0 || c.M == 0) throw InputError("coloring: parameters must be positive");
  if (c.k > c.M) throw InputError("coloring: k exceeds M");
  std::uint64_t count = 0;
  for (const auto& [tuple, color] : c.table) {
    if (tuple.size() != c.k) throw InputError("coloring: tuple arity mismatch");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i] >= c.M) throw InputError("coloring: tuple entry outside [M]");
      if (i > 0 && tuple[i] <= tuple[i - 1]) throw InputError("coloring: tuple not increasing");
    }
    if (color >= c.r) throw InputError("coloring: color out of range");
    ++count;
  }
  Nat expected;
  mpz_bin_uiui(expected.get_mpz_t(), c.M, c.k);
  if (Nat(static_cast<unsigned long>(count)) != expected)
    throw InputError("coloring: table not total on the increasing k-tuples");
}

namespace {

struct ArrowSpace {
  std::uint64_t M, n, k, r;
  std::vector<std::vector<std::uint64_t>> binom;  // binom[a][b] = C(a, b)
  std::uint64_t tuple_count;

  ArrowSpace(std::uint64_t M_, std::uint64_t n_, std::uint64_t k_, std::uint64_t r_)
      : M(M_), n(n_), k(k_), r(r_) {
    binom.assign(M + 1, std::vector<std::uint64_t>(k + 1, 0));
    for (std::uint64_t a = 0; a <= M; ++a) {
      binom[a][0] = 1;
      for (std::uint64_t b = 1; b <= std::min(a, k); ++b)
        binom[a][b] = binom[a - 1][b - 1] + (a >= 1 ? binom[a - 1][b] : 0);
    }
    tuple_count = binom[M][k];
  }

  // Lexicographic rank of an increasing k-tuple over [M].
  std::size_t rank(const std::vector<std::uint64_t>& t) const {
    std::size_t out = 0;
    std::uint64_t prev = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
      for (std::uint64_t v = prev; v < t[i]; ++v) out += binom[M - 1 - v][k - 1 - i];
      prev = t[i] + 1;
    }
    return out;
  }

  // Does the coloring admit a monochromatic increasing tuple? target_len picks
  // the plain (fixed n) or relatively-large (max(n, first)) goal.
  bool has_mono(const std::vector<std::uint8_t>& coloring, bool star) const {
    if (k == 1) {
      if (!star) {
        std::vector<std::uint64_t> counts(r, 0);
        for (std::uint64_t v = 0; v < M; ++v) {
          if (++counts[coloring[v]] >= n) return true;
        }
        return false;
      }
      // length >= max(n, first element): count elements of each color from
      // each possible first element upward
      for (std::uint64_t first = 0; first < M; ++first) {
        std::uint64_t need = std::max(n, first);
        std::uint8_t color = coloring[first];
        std::uint64_t have = 1;
        for (std::uint64_t v = first + 1; v < M && have < need; ++v) {
          if (coloring[v] == color) ++have;
        }
        if (have >= need && need >= 1) return true;
      }
      return false;
    }
    std::vector<std::uint64_t> t;
    std::vector<std::uint64_t> sub(k);
    std::function<bool(std::uint8_t, std::uint64_t)> extend = [&](std::uint8_t color,
                                                                  std::uint64_t target) -> bool {
      if (t.size() >= target) return true;
      std::uint64_t start = t.empty() ? 0 : t.back() + 1;
      for (std::uint64_t e = start; e < M; ++e) {
        if (M - e < target - t.size()) break;  // not enough elements left
        bool fits = true;
        if (t.size() >= k - 1) {
          // every k-subtuple ending at e must carry the color
          std::vector<std::size_t> idx(k - 1);
          std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t pos,
                                                                     std::size_t from) -> bool {
            if (pos == k - 1) {
              for (std::size_t i = 0; i < k - 1; ++i) sub[i] = t[idx[i]];
              sub[k - 1] = e;
              return coloring[rank(sub)] == color;
            }
            for (std::size_t j = from; j + (k - 1 - pos) <= t.size(); ++j) {
              idx[pos] = j;
              if (!choose(pos + 1, j + 1)) return false;
            }
            return true;
          };
          fits = choose(0, 0);
        }
        if (!fits) continue;
        t.push_back(e);
        std::uint64_t goal = star ? std::max(n, t.front()) : target;
        if (extend(color, goal)) return true;
        t.pop_back();
      }
      return false;
    };
    for (std::uint64_t c = 0; c < r; ++c) {
      t.clear();
      if (extend(static_cast<std::uint8_t>(c), n)) return true;
    }
    return false;
  }
};

bool arrow_impl(std::uint64_t M, std::uint64_t n, std::uint64_t k, std::uint64_t r, bool star,
                std::uint64_t budget) {
  if (k == 0 || n == 0 || M == 0 || r == 0)
    throw InputError("arrow_check: parameters must be positive");
  if (!(k <= n && n <= M)) throw InputError("arrow_check: need k <= n <= M");
  if (M > 64) throw InputError("arrow_check: M beyond the supported range (64)");
  if (r > 255) throw InputError("arrow_check: r beyond the supported range (255)");
  Nat tuples;
  mpz_bin_uiui(tuples.get_mpz_t(), M, k);
  const Nat budget_nat(static_cast<unsigned long>(budget));
  // The exhaustive check costs C(M,k) * r^C(M,k) oracle evaluations.  The
  // power is only materialized when it is small enough to print.
  if (r >= 2 && tuples > Nat(4096ul))
    throw BudgetError("arrow_check: requires " + tuples.get_str() + "*" + std::to_string(r) +
                      "^" + tuples.get_str() + " evaluations, budget is " +
                      std::to_string(budget));
  Nat required;
  if (r == 1) {
    required = tuples;
  } else {
    Nat colorings;
    mpz_ui_pow_ui(colorings.get_mpz_t(), r, tuples.get_ui());
    required = tuples * colorings;
  }
  if (required > budget_nat)
    throw BudgetError("arrow_check: requires " + required.get_str() +
                      " evaluations, budget is " + std::to_string(budget));
  ArrowSpace space(M, n, k, r);
  std::vector<std::uint8_t> coloring(space.tuple_count, 0);
  while (true) {
    if (!space.has_mono(coloring, star)) return false;
    // mixed-radix increment, last tuple fastest
    std::size_t i = coloring.size();
    while (i-- > 0) {
      if (++coloring[i] < r) break;
      coloring[i] = 0;
      if (i == 0) return true;
    }
    if (coloring.empty()) return true;
  }
}

}  // namespace

bool arrow_check(std::uint64_t M, std::uint64_t n, std::uint64_t k, std::uint64_t r,
                 std::uint64_t budget) {
  return arrow_impl(M, n, k, r, false, budget);
}

bool arrow_star_check(std::uint64_t M, std::uint64_t n, std::uint64_t k, std::uint64_t r,
                      std::uint64_t budget) {
  return arrow_impl(M, n, k, r, true, budget);
}

std::optional<std::uint64_t> min_arrow(std::uint64_t n, std::uint64_t k, std::uint64_t r,
                                       std::uint64_t cap, bool star, std::uint64_t budget) {
  for (std::uint64_t M = std::max<std::uint64_t>(n, 1); M <= cap; ++M) {
    if (arrow_impl(M, n, k, r, star, budget)) return M;
  }
  return std::nullopt;
}

}  // namespace baire::ramsey
