#include "baire/stumps.hpp"

#include <json.hpp>

namespace baire::stumps {

StumpPtr Stump::empty() {
  static StumpPtr instance(new Stump());
  return instance;
}

StumpPtr Stump::node(std::map<Nat, StumpPtr> special, StumpPtr fallback) {
  for (const auto& [label, child] : special) {
    if (!child) throw InputError("Stump::node: null child");
  }
  if (!fallback) throw InputError("Stump::node: null fallback");
  return StumpPtr(new Stump(std::move(special), std::move(fallback)));
}

const StumpPtr& Stump::child(const Nat& label) const {
  if (empty_) throw InputError("Stump::child: empty stump has no children");
  auto it = special_.find(label);
  return it != special_.end() ? it->second : fallback_;
}

bool Stump::contains(const Seq& s) const {
  const Stump* cur = this;
  for (const Nat& e : s) {
    if (cur->empty_) return false;
    cur = cur->child(e).get();
  }
  return !cur->empty_;
}

HrsPtr HrsStump::basic() {
  static HrsPtr instance(new HrsStump({}));
  return instance;
}

HrsPtr HrsStump::node(std::vector<HrsPtr> subs) {
  if (subs.empty()) throw InputError("HrsStump::node: sub list must be nonempty");
  for (const auto& sub : subs) {
    if (!sub) throw InputError("HrsStump::node: null sub-stump");
  }
  return HrsPtr(new HrsStump(std::move(subs)));
}

const HrsPtr& HrsStump::child(const Nat& label) const {
  if (is_basic()) throw InputError("HrsStump::child: basic stump has no children");
  Nat second = seq::unpair(label).second;
  Nat idx = second % Nat(static_cast<unsigned long>(subs_.size()));
  return subs_[idx.get_ui()];
}

bool HrsStump::contains(const Seq& s) const {
  const HrsStump* cur = this;
  for (const Nat& e : s) {
    if (cur->is_basic()) return false;
    cur = cur->child(e).get();
  }
  return true;
}

std::uint64_t HrsStump::height() const {
  if (is_basic()) return 0;
  std::uint64_t best = 0;
  for (const auto& sub : subs_) best = std::max(best, sub->height());
  return 1 + best;
}

namespace {

template <typename TreePtr>
bool border_member_impl(const TreePtr& S, const Seq& s) {
  if (S->contains(s)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!S->contains(seq::take(s, i))) return false;
  }
  return true;
}

}  // namespace

bool border_member(const HrsPtr& S, const Seq& s) { return border_member_impl(S, s); }
bool border_member(const StumpPtr& S, const Seq& s) { return border_member_impl(S, s); }

bool is_endpoint(const HrsPtr& S, const Seq& s) {
  if (!S->contains(s)) return false;
  Seq child = s;
  child.push_back(0);
  return !S->contains(child);
}

namespace {

HrsPtr hrs_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("stump serialization: expected an array");
  if (j.empty()) return HrsStump::basic();
  std::vector<HrsPtr> subs;
  subs.reserve(j.size());
  for (const auto& item : j) subs.push_back(hrs_from_json(item));
  return HrsStump::node(std::move(subs));
}

nlohmann::json hrs_to_json(const HrsPtr& S) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& sub : S->subs()) j.push_back(hrs_to_json(sub));
  return j;
}

}  // namespace

HrsPtr hrs_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("stump serialization: ") + e.what());
  }
  return hrs_from_json(j);
}

std::string hrs_to_json_text(const HrsPtr& S) { return hrs_to_json(S).dump(); }

PlayRecord play_game(const HrsPtr& S, const PayoffOracle& alpha, const Strategy& sigma,
                     const Strategy& tau) {
  PlayRecord rec;
  Seq pos;
  while (S->contains(pos)) {
    const Strategy& mover = (pos.size() % 2 == 0) ? sigma : tau;
    Nat move = mover(pos);
    rec.moves.push_back(move);
    pos.push_back(move);
  }
  rec.position = pos;
  bool even = pos.size() % 2 == 0;
  Nat value = alpha(pos);
  rec.player_one_wins = even ? (value == 0) : (value != 0);
  return rec;
}

namespace {

bool player_one_wins_border(const PayoffOracle& alpha, const Seq& pos) {
  bool even = pos.size() % 2 == 0;
  Nat value = alpha(pos);
  return even ? (value == 0) : (value != 0);
}

}  // namespace

WinVerdict check_winning(const HrsPtr& S, Player who, const Strategy& strat,
                         const PayoffOracle& alpha, std::uint64_t alphabet) {
  if (alphabet == 0) throw InputError("check_winning: alphabet must be positive");
  std::function<std::optional<Seq>(const HrsPtr&, const Seq&)> lose =
      [&](const HrsPtr& node, const Seq& pos) -> std::optional<Seq> {
    bool mover_is_one = pos.size() % 2 == 0;
    bool our_move = (who == Player::One) == mover_is_one;
    auto descend = [&](const Nat& move) -> std::optional<Seq> {
      Seq next = pos;
      next.push_back(move);
      if (!S->contains(next)) {
        bool one_wins = player_one_wins_border(alpha, next);
        bool we_win = (who == Player::One) ? one_wins : !one_wins;
        if (we_win) return std::nullopt;
        return next;
      }
      return lose(node->child(move), next);
    };
    if (our_move) return descend(strat(pos));
    for (std::uint64_t m = 0; m < alphabet; ++m) {
      auto bad = descend(Nat(static_cast<unsigned long>(m)));
      if (bad) return bad;
    }
    return std::nullopt;
  };
  std::optional<Seq> bad = lose(S, Seq{});
  WinVerdict verdict;
  verdict.holds = !bad.has_value();
  verdict.counterexample = bad;
  return verdict;
}

namespace {

// Both validation passes walk witness and stump together; `shape_only` skips
// the payoff checks so membership_to_strategy can accept a witness without
// consulting alpha.
bool validate_impl(const HrsPtr& node, const MembershipWitness& w, const Seq& pos,
                   const PayoffOracle* alpha, std::uint64_t alphabet) {
  if (w.alphabet != alphabet) return false;
  Nat bound(static_cast<unsigned long>(alphabet));
  if (w.kind == MembershipWitness::Kind::Exists) {
    if (w.choice >= bound) return false;
    Seq next = pos;
    next.push_back(w.choice);
    if (node->is_basic()) {
      if (!w.sub.empty()) return false;
      return alpha == nullptr || (*alpha)(next) != 0;
    }
    if (w.sub.size() != 1) return false;
    if (w.sub[0].kind != MembershipWitness::Kind::Forall) return false;
    return validate_impl(node->child(w.choice), w.sub[0], next, alpha, alphabet);
  }
  if (node->is_basic()) {
    if (!w.sub.empty()) return false;
    if (alpha == nullptr) return true;
    for (std::uint64_t m = 0; m < alphabet; ++m) {
      Seq next = pos;
      next.push_back(static_cast<unsigned long>(m));
      if ((*alpha)(next) != 0) return false;
    }
    return true;
  }
  if (w.sub.size() != alphabet) return false;
  for (std::uint64_t m = 0; m < alphabet; ++m) {
    if (w.sub[m].kind != MembershipWitness::Kind::Exists) return false;
    Seq next = pos;
    next.push_back(static_cast<unsigned long>(m));
    if (!validate_impl(node->child(Nat(static_cast<unsigned long>(m))), w.sub[m], next, alpha,
                       alphabet))
      return false;
  }
  return true;
}

MembershipWitness::Kind root_kind(Player who) {
  return who == Player::One ? MembershipWitness::Kind::Exists : MembershipWitness::Kind::Forall;
}

}  // namespace

bool validate_witness(const HrsPtr& S, Player who, const MembershipWitness& w,
                      const PayoffOracle& alpha) {
  if (w.alphabet == 0) return false;
  if (w.kind != root_kind(who)) return false;
  return validate_impl(S, w, Seq{}, &alpha, w.alphabet);
}

MembershipWitness strategy_to_membership(const HrsPtr& S, Player who, const Strategy& strat,
                                         const PayoffOracle& alpha, std::uint64_t alphabet) {
  WinVerdict verdict = check_winning(S, who, strat, alpha, alphabet);
  if (!verdict.holds) {
    throw InputError("strategy_to_membership: strategy loses the play " +
                     seq::encode(*verdict.counterexample).get_str());
  }
  Nat bound(static_cast<unsigned long>(alphabet));
  std::function<MembershipWitness(const HrsPtr&, MembershipWitness::Kind, const Seq&)> build =
      [&](const HrsPtr& node, MembershipWitness::Kind kind, const Seq& pos) {
        MembershipWitness w;
        w.kind = kind;
        w.alphabet = alphabet;
        if (kind == MembershipWitness::Kind::Exists) {
          Nat c = strat(pos);
          if (c >= bound)
            throw InputError("strategy_to_membership: strategy move outside the alphabet");
          w.choice = c;
          if (!node->is_basic()) {
            Seq next = pos;
            next.push_back(c);
            w.sub.push_back(build(node->child(c), MembershipWitness::Kind::Forall, next));
          }
        } else if (!node->is_basic()) {
          for (std::uint64_t m = 0; m < alphabet; ++m) {
            Seq next = pos;
            next.push_back(static_cast<unsigned long>(m));
            w.sub.push_back(build(node->child(Nat(static_cast<unsigned long>(m))),
                                  MembershipWitness::Kind::Exists, next));
          }
        }
        return w;
      };
  return build(S, root_kind(who), Seq{});
}

Strategy membership_to_strategy(const HrsPtr& S, Player who, const MembershipWitness& w) {
  if (w.alphabet == 0 || w.kind != root_kind(who) ||
      !validate_impl(S, w, Seq{}, nullptr, w.alphabet))
    throw InputError("membership_to_strategy: witness does not fit the stump");
  auto root = std::make_shared<const MembershipWitness>(w);
  HrsPtr stump = S;
  return [root, stump](const Seq& pos) -> Nat {
    const MembershipWitness* node = root.get();
    const HrsStump* cur = stump.get();
    for (const Nat& e : pos) {
      if (cur->is_basic()) return Nat(0);
      if (node->kind == MembershipWitness::Kind::Exists) {
        if (e != node->choice) return Nat(0);
        node = &node->sub[0];
      } else {
        Nat bound(static_cast<unsigned long>(node->alphabet));
        if (e >= bound) return Nat(0);
        node = &node->sub[e.get_ui()];
      }
      cur = cur->child(e).get();
    }
    if (node->kind == MembershipWitness::Kind::Exists) return node->choice;
    return Nat(0);
  };
}

PayoffOracle correct_by_strategy(const HrsPtr& S, const Strategy& tau, const PayoffOracle& alpha) {
  (void)tau;  // the corrected payoff is defined from alpha and the border alone
  return [S, alpha](const Seq& pos) -> Nat {
    if (border_member(S, pos)) {
      if (pos.size() % 2 == 0) {
        Nat v = alpha(pos);
        return v == 0 ? Nat(1) : v;
      }
      return Nat(0);
    }
    return alpha(pos);
  };
}

PayoffOracle canonical_element(const HrsPtr& S, Canonical which) {
  return [S, which](const Seq& pos) -> Nat {
    if (!border_member(S, pos)) return Nat(0);
    bool even = pos.size() % 2 == 0;
    if (which == Canonical::EpsilonStar) return even ? Nat(0) : Nat(1);
    return even ? Nat(1) : Nat(0);
  };
}

std::function<PayoffOracle(SequenceOracle)> reduce_basic(std::function<Nat(const Seq&)> beta) {
  return [beta](SequenceOracle alpha) -> PayoffOracle {
    return [beta, alpha](const Seq& pos) -> Nat {
      if (pos.size() != 1) return Nat(0);
      if (!pos[0].fits_ulong_p()) throw BudgetError("reduce_basic: position index too large");
      std::uint64_t n = pos[0].get_ui();
      Seq prefix;
      prefix.reserve(n);
      for (std::uint64_t i = 0; i < n; ++i) prefix.push_back(alpha(i));
      return beta(prefix);
    };
  };
}

}  // namespace baire::stumps
