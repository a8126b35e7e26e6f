#include "baire/cli.hpp"

#include <algorithm>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "baire/measure.hpp"
#include "baire/ramsey.hpp"
#include "baire/reals.hpp"
#include "baire/seqcode.hpp"
#include "baire/spreads.hpp"
#include "baire/stumps.hpp"
#include "baire/worder.hpp"

namespace baire::cli {
namespace {

using nlohmann::json;
using seq::Seq;

// ---------------------------------------------------------------- inputs --

// An option value of "-" stands for the whole of stdin (large payloads).
std::string slurp(const std::string& text) {
  if (text != "-") return text;
  std::ostringstream out;
  out << std::cin.rdbuf();
  return out.str();
}

json parse_json_opt(const std::string& raw, const char* what) {
  try {
    return json::parse(slurp(raw));
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

Nat nat_of_json(const json& j, const char* what) {
  if (j.is_string()) {
    try {
      Nat v(j.get<std::string>());
      if (v < 0) throw InputError(std::string(what) + ": must be nonnegative");
      return v;
    } catch (const std::invalid_argument&) {
      throw InputError(std::string(what) + ": not a natural number");
    }
  }
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Nat(static_cast<unsigned long>(j.get<std::uint64_t>()));
    long v = j.get<long>();
    if (v < 0) throw InputError(std::string(what) + ": must be nonnegative");
    return Nat(v);
  }
  throw InputError(std::string(what) + ": expected a natural number or numeric string");
}

Nat nat_of_text(const std::string& text, const char* what) {
  return nat_of_json(json(text), what);
}

std::uint64_t u64_of(const Nat& v, const char* what) {
  if (!v.fits_ulong_p()) throw InputError(std::string(what) + ": value too large");
  return static_cast<std::uint64_t>(v.get_ui());
}

Seq seq_of_json(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of naturals");
  Seq s;
  s.reserve(j.size());
  for (const auto& e : j) s.push_back(nat_of_json(e, what));
  return s;
}

Seq seq_of_text(const std::string& raw, const char* what) {
  return seq_of_json(parse_json_opt(raw, what), what);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    out.push_back(a == std::string::npos ? std::string() : item.substr(a, b - a + 1));
  }
  return out;
}

std::vector<std::pair<Rat, Rat>> pairs_of_json(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected a list of [q, r] pairs");
  std::vector<std::pair<Rat, Rat>> ps;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw InputError(std::string(what) + ": each segment must be a pair of rational strings");
    ps.emplace_back(parse_rat(e[0].get<std::string>()), parse_rat(e[1].get<std::string>()));
  }
  return ps;
}

measure::IntervalList intervals_of(const std::string& raw, const char* what) {
  return measure::list_of(pairs_of_json(parse_json_opt(raw, what), what));
}

// ---------------------------------------------------------------- output --

json nat_json(const Nat& v) { return v.get_str(); }

json seq_json(const Seq& s) {
  json a = json::array();
  for (const Nat& e : s) a.push_back(nat_json(e));
  return a;
}

json rat_pair_json(const std::pair<Rat, Rat>& p) {
  return json::array({rat_text(p.first), rat_text(p.second)});
}

json intervals_json(const measure::IntervalList& a) {
  json out = json::array();
  for (const auto& p : measure::pairs_of(a)) out.push_back(rat_pair_json(p));
  return out;
}

json real_probe_json(const reals::RealNumber& x, std::uint64_t precision) {
  std::uint64_t idx = x.modulus(precision);
  auto p = x.approx(idx);
  return json{{"index", idx}, {"lower", rat_text(p.first)}, {"upper", rat_text(p.second)}};
}

// --------------------------------------------------------------- oracles --

// Natural-indexed oracle: a bare array, or {"values":[...],"default":v}, or
// {"constant":v}; values beyond the table fall back to the default (0).
std::function<Nat(std::uint64_t)> index_oracle(const std::string& raw, const char* what) {
  json j = parse_json_opt(raw, what);
  auto values = std::make_shared<std::vector<Nat>>();
  auto def = std::make_shared<Nat>(0);
  if (j.is_array()) {
    for (const auto& e : j) values->push_back(nat_of_json(e, what));
  } else if (j.is_object() && j.contains("constant")) {
    *def = nat_of_json(j["constant"], what);
  } else if (j.is_object()) {
    if (j.contains("values")) {
      for (const auto& e : j["values"]) values->push_back(nat_of_json(e, what));
    }
    if (j.contains("default")) *def = nat_of_json(j["default"], what);
  } else {
    throw InputError(std::string(what) + ": expected an array or a {values, default} table");
  }
  return [values, def](std::uint64_t n) -> Nat {
    return n < values->size() ? (*values)[n] : *def;
  };
}

// Sequence-keyed oracle: {"map":{"<code>":v,...},"default":v} or
// {"constant":v}; positions are looked up by their sequence code.
std::function<Nat(const Seq&)> seq_oracle(const std::string& raw, const char* what) {
  json j = parse_json_opt(raw, what);
  auto table = std::make_shared<std::map<Nat, Nat>>();
  auto def = std::make_shared<Nat>(0);
  if (j.is_object() && j.contains("constant")) {
    *def = nat_of_json(j["constant"], what);
  } else if (j.is_object()) {
    if (j.contains("map")) {
      if (!j["map"].is_object())
        throw InputError(std::string(what) + ": \"map\" must be an object keyed by codes");
      for (const auto& [key, value] : j["map"].items())
        (*table)[nat_of_text(key, what)] = nat_of_json(value, what);
    }
    if (j.contains("default")) *def = nat_of_json(j["default"], what);
  } else {
    throw InputError(std::string(what) + ": expected a {map, default} or {constant} table");
  }
  return [table, def](const Seq& s) -> Nat {
    auto it = table->find(seq::encode(s));
    return it == table->end() ? *def : it->second;
  };
}

// Decidable set of naturals: {"members":[...]}, {"min":n}, {"max":n}, or
// {"mod":m,"residues":[...]}.
ramsey::NatPredicate set_of(const std::string& raw, const char* what) {
  json j = parse_json_opt(raw, what);
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a set description object");
  if (j.contains("members")) {
    auto members = std::make_shared<std::set<Nat>>();
    for (const auto& e : j["members"]) members->insert(nat_of_json(e, what));
    return [members](const Nat& x) { return members->count(x) > 0; };
  }
  if (j.contains("min")) {
    auto lo = std::make_shared<Nat>(nat_of_json(j["min"], what));
    return [lo](const Nat& x) { return x >= *lo; };
  }
  if (j.contains("max")) {
    auto hi = std::make_shared<Nat>(nat_of_json(j["max"], what));
    return [hi](const Nat& x) { return x <= *hi; };
  }
  if (j.contains("mod")) {
    auto m = std::make_shared<Nat>(nat_of_json(j["mod"], what));
    if (*m == 0) throw InputError(std::string(what) + ": modulus must be positive");
    auto residues = std::make_shared<std::set<Nat>>();
    for (const auto& e : j["residues"]) residues->insert(nat_of_json(e, what));
    return [m, residues](const Nat& x) -> bool {
      Nat rem = x % *m;
      return residues->count(rem) > 0;
    };
  }
  throw InputError(std::string(what) +
                   ": expected one of \"members\", \"min\", \"max\", \"mod\"");
}

// ------------------------------------------------------------ laws, bars --

// A law is a builtin name (cantor | baire | full) or a finite decision table
// {"admitted":[codes...], "fan_bound":b?}; table laws admit exactly the
// listed codes.
spreads::SpreadLaw law_of(const std::string& raw) {
  const std::string text = slurp(raw);
  if (text == "cantor") return spreads::cantor_law();
  if (text == "baire" || text == "full") return spreads::baire_law();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("law: not a builtin name (cantor|baire|full) and ") + e.what());
  }
  if (!j.is_object() || !j.contains("admitted") || !j["admitted"].is_array())
    throw InputError("law: table form is {\"admitted\":[codes...], \"fan_bound\":b?}");
  auto admitted = std::make_shared<std::set<Nat>>();
  Nat max_entry(0);
  for (const auto& c : j["admitted"]) {
    Nat code = nat_of_json(c, "law code");
    for (const Nat& e : seq::decode(code)) max_entry = std::max(max_entry, e);
    admitted->insert(std::move(code));
  }
  auto bound = std::make_shared<Nat>(j.contains("fan_bound")
                                         ? nat_of_json(j["fan_bound"], "law fan_bound")
                                         : max_entry);
  spreads::SpreadLaw law;
  law.admit = [admitted](const Seq& s) { return admitted->count(seq::encode(s)) > 0; };
  law.child_witness = [admitted, bound](const Seq& s) -> Nat {
    Seq child = s;
    child.push_back(0);
    for (Nat k(0); k <= *bound; ++k) {
      child.back() = k;
      if (admitted->count(seq::encode(child)) > 0) return k;
    }
    return Nat(0);
  };
  law.fan_bound = [bound](const Seq&) { return *bound; };
  return law;
}

// A bar is {"min_len":n}, {"min_len_or_contains_one":n}, or {"codes":[...]}.
spreads::SeqPredicate bar_of(const std::string& raw) {
  json j = parse_json_opt(raw, "bar");
  if (!j.is_object())
    throw InputError("bar: expected {\"min_len\":n}, {\"min_len_or_contains_one\":n} or "
                     "{\"codes\":[...]}");
  if (j.contains("min_len")) {
    auto n = std::make_shared<Nat>(nat_of_json(j["min_len"], "bar"));
    return [n](const Seq& s) { return Nat(static_cast<unsigned long>(s.size())) >= *n; };
  }
  if (j.contains("min_len_or_contains_one")) {
    auto n = std::make_shared<Nat>(nat_of_json(j["min_len_or_contains_one"], "bar"));
    return [n](const Seq& s) {
      if (Nat(static_cast<unsigned long>(s.size())) >= *n) return true;
      return std::find(s.begin(), s.end(), Nat(1)) != s.end();
    };
  }
  if (j.contains("codes")) {
    auto codes = std::make_shared<std::set<Nat>>();
    for (const auto& c : j["codes"]) codes->insert(nat_of_json(c, "bar code"));
    return [codes](const Seq& s) { return codes->count(seq::encode(s)) > 0; };
  }
  throw InputError("bar: expected \"min_len\", \"min_len_or_contains_one\" or \"codes\"");
}

// ----------------------------------------------------------------- reals --

reals::RealNumber trisect_real(std::shared_ptr<std::vector<Nat>> digits) {
  auto approx = [digits](std::uint64_t n) {
    Seq s;
    s.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i)
      s.push_back(i < digits->size() ? (*digits)[i] : Nat(0));
    return reals::trisect(s);
  };
  auto modulus = [](std::uint64_t m) -> std::uint64_t {
    // least n with (2/3)^n < 2^-m, i.e. 3^n > 2^(m+n)
    Nat p3(1);
    for (std::uint64_t n = 1;; ++n) {
      p3 *= 3;
      Nat p2;
      mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(m + n));
      if (p3 > p2) return n;
    }
  };
  return reals::RealNumber(approx, modulus);
}

// A real expression: "p/q" shorthand, or one of {"rational":"p/q"},
// {"binary":[digits]}, {"trisect":[digits]}, {"limit_of":["q0","q1",...]}.
reals::RealNumber real_of_json(const json& j) {
  if (j.is_string()) return reals::from_rational(parse_rat(j.get<std::string>()));
  if (!j.is_object()) throw InputError("real expression: expected an object or rational string");
  if (j.contains("rational")) {
    if (!j["rational"].is_string())
      throw InputError("real expression: \"rational\" takes a rational string");
    return reals::from_rational(parse_rat(j["rational"].get<std::string>()));
  }
  if (j.contains("binary")) {
    auto digits = std::make_shared<Seq>(seq_of_json(j["binary"], "real binary digits"));
    for (const Nat& d : *digits)
      if (d > 1) throw InputError("real expression: binary digits must be 0 or 1");
    return reals::from_binary(
        [digits](std::uint64_t n) { return n < digits->size() ? (*digits)[n] : Nat(0); });
  }
  if (j.contains("trisect")) {
    auto digits = std::make_shared<Seq>(seq_of_json(j["trisect"], "real trisection digits"));
    for (const Nat& d : *digits)
      if (d > 1) throw InputError("real expression: trisection digits must be 0 or 1");
    return trisect_real(digits);
  }
  if (j.contains("limit_of")) {
    if (!j["limit_of"].is_array() || j["limit_of"].empty())
      throw InputError("real expression: \"limit_of\" takes a nonempty list of rationals");
    auto indices = std::make_shared<std::vector<Nat>>();
    for (const auto& e : j["limit_of"]) {
      if (!e.is_string()) throw InputError("real expression: limit entries are rational strings");
      indices->push_back(reals::RationalEnum::index_of(parse_rat(e.get<std::string>())));
    }
    return reals::converge_limit([indices](std::uint64_t n) {
      return n < indices->size() ? (*indices)[n] : indices->back();
    });
  }
  throw InputError("real expression: unknown constructor");
}

reals::RealNumber real_of(const std::string& raw) {
  return real_of_json(parse_json_opt(raw, "real expression"));
}

// --------------------------------------------------------------- measure --

measure::StepApprox step_of_json(const json& j) {
  if (!j.is_object())
    throw InputError("step: expected {m, values, exceptional, accuracy}");
  measure::StepApprox step;
  step.m = u64_of(nat_of_json(j.value("m", json(0)), "step m"), "step m");
  if (!j.contains("values") || !j["values"].is_array())
    throw InputError("step: \"values\" must be a list of rational strings");
  for (const auto& v : j["values"]) {
    if (!v.is_string()) throw InputError("step: values are rational strings");
    step.values.push_back(parse_rat(v.get<std::string>()));
  }
  if (j.contains("exceptional"))
    step.exceptional = measure::list_of(pairs_of_json(j["exceptional"], "step exceptional"));
  step.accuracy = u64_of(nat_of_json(j.value("accuracy", json(0)), "step accuracy"),
                         "step accuracy");
  return step;
}

std::function<measure::StepApprox(std::uint64_t)> steps_of(const std::string& raw) {
  json j = parse_json_opt(raw, "steps");
  if (!j.is_array() || j.empty())
    throw InputError("steps: expected a nonempty list of step approximations");
  auto steps = std::make_shared<std::vector<measure::StepApprox>>();
  for (const auto& e : j) steps->push_back(step_of_json(e));
  return [steps](std::uint64_t i) {
    return (*steps)[std::min<std::uint64_t>(i, steps->size() - 1)];
  };
}

// ---------------------------------------------------------------- stumps --

json witness_json(const stumps::MembershipWitness& w) {
  json j;
  j["kind"] = w.kind == stumps::MembershipWitness::Kind::Exists ? "exists" : "forall";
  j["alphabet"] = w.alphabet;
  if (w.kind == stumps::MembershipWitness::Kind::Exists) j["choice"] = nat_json(w.choice);
  json sub = json::array();
  for (const auto& child : w.sub) sub.push_back(witness_json(child));
  j["sub"] = std::move(sub);
  return j;
}

stumps::MembershipWitness witness_of_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InputError("witness: node must be an object with a \"kind\" string");
  stumps::MembershipWitness w;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "exists")
    w.kind = stumps::MembershipWitness::Kind::Exists;
  else if (kind == "forall")
    w.kind = stumps::MembershipWitness::Kind::Forall;
  else
    throw InputError("witness: kind must be \"exists\" or \"forall\"");
  w.alphabet = u64_of(nat_of_json(j.value("alphabet", json(1)), "witness alphabet"),
                      "witness alphabet");
  if (w.kind == stumps::MembershipWitness::Kind::Exists)
    w.choice = nat_of_json(j.value("choice", json(0)), "witness choice");
  if (j.contains("sub")) {
    for (const auto& child : j["sub"]) w.sub.push_back(witness_of_json(child));
  }
  return w;
}

stumps::Player player_of(std::uint64_t which) {
  if (which == 1) return stumps::Player::One;
  if (which == 2) return stumps::Player::Two;
  throw InputError("player: must be 1 or 2");
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& argv) {
  CommandResult result;
  bool exit_fixed = false;

  CLI::App app{"Exact computation toolkit: sequence codes, fan laws and bars, stumps and games, "
               "located reals, measure, arrow relations, and well-ordered sets of rationals",
               "baire"};
  app.require_subcommand(1);
  app.fallthrough(false);
  std::string format = "json";
  app.add_option("--format", format, "output rendering")
      ->check(CLI::IsMember({"json", "text"}));

  auto ok = [&result](json payload) {
    result.status = CommandResult::Status::Ok;
    result.payload = std::move(payload);
  };
  auto inconclusive = [&result](json payload, const std::string& note) {
    result.status = CommandResult::Status::Inconclusive;
    result.payload = std::move(payload);
    result.diagnostics.push_back(note);
  };

  // ----------------------------------------------------------------- seq --
  auto* seq_cmd = app.add_subcommand("seq", "sequence codes");
  seq_cmd->require_subcommand(1);
  {
    static struct {
      std::string seq, code, a, b;
    } opt;
    opt = {};
    auto* enc = seq_cmd->add_subcommand("encode", "code of a finite sequence");
    enc->add_option("--seq", opt.seq, "JSON array of naturals")->required();
    enc->callback([&ok] { ok(nat_json(seq::encode(seq_of_text(opt.seq, "seq")))); });
    auto* dec = seq_cmd->add_subcommand("decode", "sequence of a code");
    dec->add_option("--code", opt.code, "natural")->required();
    dec->callback([&ok] { ok(seq_json(seq::decode(nat_of_text(opt.code, "code")))); });
    auto* pr = seq_cmd->add_subcommand("pair", "pairing of two naturals");
    pr->add_option("--a", opt.a)->required();
    pr->add_option("--b", opt.b)->required();
    pr->callback([&ok] {
      ok(nat_json(seq::pair(nat_of_text(opt.a, "a"), nat_of_text(opt.b, "b"))));
    });
    auto* unp = seq_cmd->add_subcommand("unpair", "inverse pairing");
    unp->add_option("--code", opt.code, "natural")->required();
    unp->callback([&ok] {
      auto [a, b] = seq::unpair(nat_of_text(opt.code, "code"));
      ok(json::array({nat_json(a), nat_json(b)}));
    });
  }

  // ----------------------------------------------------------------- fan --
  auto* fan_cmd = app.add_subcommand("fan", "spread and fan laws, bars");
  fan_cmd->require_subcommand(1);
  {
    static struct {
      std::string law, bar, alpha, node, zeta;
      std::uint64_t max_depth = 16, depth = 4, n = 8, probe_width = 8;
    } opt;
    opt = {};
    auto* bb = fan_cmd->add_subcommand("bar-bound", "uniform bound of a bar on a fan");
    bb->add_option("--law", opt.law, "builtin (cantor|baire|full) or table JSON")->required();
    bb->add_option("--bar", opt.bar, "bar predicate JSON")->required();
    bb->add_option("--max-depth", opt.max_depth, "search depth");
    bb->callback([&ok, &inconclusive] {
      auto bound = spreads::bar_uniform_bound(law_of(opt.law), bar_of(opt.bar), opt.max_depth);
      if (bound)
        ok(json(*bound));
      else
        inconclusive(json(), "no uniform bound within depth " + std::to_string(opt.max_depth));
    });
    auto* sb = fan_cmd->add_subcommand("subbar", "minimal finite subset of a bar barring a fan");
    sb->add_option("--law", opt.law)->required();
    sb->add_option("--bar", opt.bar)->required();
    sb->add_option("--max-depth", opt.max_depth);
    sb->callback([&ok, &inconclusive] {
      auto sub = spreads::finite_subbar(law_of(opt.law), bar_of(opt.bar), opt.max_depth);
      if (!sub) {
        inconclusive(json(), "no uniform bound within depth " + std::to_string(opt.max_depth));
        return;
      }
      json codes = json::array();
      json seqs = json::array();
      for (const Seq& s : *sub) {
        codes.push_back(nat_json(seq::encode(s)));
        seqs.push_back(seq_json(s));
      }
      ok(json{{"codes", std::move(codes)}, {"sequences", std::move(seqs)}});
    });
    auto* rt = fan_cmd->add_subcommand("retract", "retraction of a sequence onto a spread");
    rt->add_option("--law", opt.law)->required();
    rt->add_option("--alpha", opt.alpha, "index oracle JSON")->required();
    rt->add_option("--n", opt.n, "prefix length");
    rt->callback([&ok] {
      auto values = spreads::retract(law_of(opt.law), index_oracle(opt.alpha, "alpha"), opt.n);
      ok(seq_json(values));
    });
    auto* en = fan_cmd->add_subcommand("enumerate", "admitted sequences of a given length");
    en->add_option("--law", opt.law)->required();
    en->add_option("--depth", opt.depth);
    en->callback([&ok] {
      json seqs = json::array();
      for (const Seq& s : spreads::enumerate_admitted(law_of(opt.law), opt.depth))
        seqs.push_back(seq_json(s));
      ok(std::move(seqs));
    });
    auto* ck = fan_cmd->add_subcommand("check-law", "spread-law conditions on a probe tree");
    ck->add_option("--law", opt.law)->required();
    ck->add_option("--depth", opt.depth);
    ck->add_option("--probe-width", opt.probe_width);
    ck->callback([&ok] {
      auto report = spreads::check_spread_law(law_of(opt.law), opt.depth, opt.probe_width);
      json violations = json::array();
      for (const auto& v : report.violations) {
        const char* kind = v.kind == spreads::LawViolation::DownwardClosure ? "downward-closure"
                           : v.kind == spreads::LawViolation::ChildWitness  ? "child-witness"
                                                                            : "fan-bound";
        violations.push_back(json{{"kind", kind}, {"at", seq_json(v.at)}});
      }
      ok(json{{"ok", report.violations.empty() && !report.truncated},
              {"violations", std::move(violations)},
              {"truncated", report.truncated}});
    });
    auto* al = fan_cmd->add_subcommand("almost", "first rejected child along a probe");
    al->add_option("--law", opt.law)->required();
    al->add_option("--node", opt.node, "JSON array, the admitted start node");
    al->add_option("--zeta", opt.zeta, "JSON array, increasing child labels")->required();
    al->callback([&ok, &inconclusive] {
      Seq node = opt.node.empty() ? Seq{} : seq_of_text(opt.node, "node");
      auto hit = spreads::almost_fan_probe(law_of(opt.law), node, seq_of_text(opt.zeta, "zeta"));
      if (hit)
        ok(json(*hit));
      else
        inconclusive(json(), "every probed child admitted");
    });
  }

  // --------------------------------------------------------------- stump --
  auto* stump_cmd = app.add_subcommand("stump", "stumps and games");
  stump_cmd->require_subcommand(1);
  {
    static struct {
      std::string stump, alpha, sigma, tau, strategy, witness, seq, which, at;
      std::uint64_t player = 1, alphabet = 2;
    } opt;
    opt = {};
    auto* pl = stump_cmd->add_subcommand("play", "one play of the border game");
    pl->add_option("--stump", opt.stump, "nested-array JSON, [] is the basic stump")->required();
    pl->add_option("--alpha", opt.alpha, "payoff oracle JSON (map by position code)")->required();
    pl->add_option("--sigma", opt.sigma, "player-one strategy JSON")->required();
    pl->add_option("--tau", opt.tau, "player-two strategy JSON")->required();
    pl->callback([&ok] {
      auto record = stumps::play_game(stumps::hrs_from_json_text(slurp(opt.stump)),
                                      seq_oracle(opt.alpha, "alpha"),
                                      seq_oracle(opt.sigma, "sigma"),
                                      seq_oracle(opt.tau, "tau"));
      ok(json{{"position", seq_json(record.position)},
              {"moves", seq_json(record.moves)},
              {"player_one_wins", record.player_one_wins}});
    });
    auto* ck = stump_cmd->add_subcommand("check", "exhaustive verdict on a strategy");
    ck->add_option("--stump", opt.stump)->required();
    ck->add_option("--player", opt.player, "1 or 2");
    ck->add_option("--strategy", opt.strategy, "strategy JSON")->required();
    ck->add_option("--alpha", opt.alpha, "payoff oracle JSON")->required();
    ck->add_option("--alphabet", opt.alphabet, "opponent moves range over [alphabet]");
    ck->callback([&ok] {
      auto verdict = stumps::check_winning(stumps::hrs_from_json_text(slurp(opt.stump)),
                                           player_of(opt.player),
                                           seq_oracle(opt.strategy, "strategy"),
                                           seq_oracle(opt.alpha, "alpha"), opt.alphabet);
      json counter;
      if (verdict.counterexample) counter = seq_json(*verdict.counterexample);
      ok(json{{"holds", verdict.holds}, {"counterexample", std::move(counter)}});
    });
    auto* wt = stump_cmd->add_subcommand("witness", "membership witness of a winning strategy");
    wt->add_option("--stump", opt.stump)->required();
    wt->add_option("--player", opt.player, "1 or 2");
    wt->add_option("--strategy", opt.strategy)->required();
    wt->add_option("--alpha", opt.alpha)->required();
    wt->add_option("--alphabet", opt.alphabet);
    wt->callback([&ok] {
      auto w = stumps::strategy_to_membership(stumps::hrs_from_json_text(slurp(opt.stump)),
                                              player_of(opt.player),
                                              seq_oracle(opt.strategy, "strategy"),
                                              seq_oracle(opt.alpha, "alpha"), opt.alphabet);
      ok(witness_json(w));
    });
    auto* vw = stump_cmd->add_subcommand("validate-witness", "check a membership witness");
    vw->add_option("--stump", opt.stump)->required();
    vw->add_option("--player", opt.player, "1 or 2");
    vw->add_option("--witness", opt.witness, "witness JSON")->required();
    vw->add_option("--alpha", opt.alpha)->required();
    vw->callback([&ok] {
      bool good = stumps::validate_witness(
          stumps::hrs_from_json_text(slurp(opt.stump)), player_of(opt.player),
          witness_of_json(parse_json_opt(opt.witness, "witness")), seq_oracle(opt.alpha, "alpha"));
      ok(json(good));
    });
    auto* mb = stump_cmd->add_subcommand("member", "membership, border and endpoint tests");
    mb->add_option("--stump", opt.stump)->required();
    mb->add_option("--seq", opt.seq, "JSON array")->required();
    mb->callback([&ok] {
      auto S = stumps::hrs_from_json_text(slurp(opt.stump));
      Seq s = seq_of_text(opt.seq, "seq");
      ok(json{{"contains", S->contains(s)},
              {"border", stumps::border_member(S, s)},
              {"endpoint", stumps::is_endpoint(S, s)}});
    });
    auto* hg = stump_cmd->add_subcommand("height", "height of a stump");
    hg->add_option("--stump", opt.stump)->required();
    hg->callback([&ok] { ok(json(stumps::hrs_from_json_text(slurp(opt.stump))->height())); });
    auto* cn = stump_cmd->add_subcommand("canonical", "canonical payoff value at a position");
    cn->add_option("--stump", opt.stump)->required();
    cn->add_option("--which", opt.which, "epsilon or alpha")
        ->required()
        ->check(CLI::IsMember({"epsilon", "alpha"}));
    cn->add_option("--at", opt.at, "JSON array, the probed position")->required();
    cn->callback([&ok] {
      auto payoff = stumps::canonical_element(
          stumps::hrs_from_json_text(slurp(opt.stump)),
          opt.which == "epsilon" ? stumps::Canonical::EpsilonStar : stumps::Canonical::AlphaStar);
      ok(nat_json(payoff(seq_of_text(opt.at, "at"))));
    });
  }

  // ---------------------------------------------------------------- real --
  auto* real_cmd = app.add_subcommand("real", "located reals");
  real_cmd->require_subcommand(1);
  {
    static struct {
      std::string expr, x, y, z;
      std::uint64_t precision = 8, depth = 16, fuel = 32, witness = 4;
    } opt;
    opt = {};
    auto* ev = real_cmd->add_subcommand("eval", "rational segment at a precision");
    ev->add_option("--expr", opt.expr, "real expression JSON")->required();
    ev->add_option("--precision", opt.precision, "segment narrower than 2^-precision");
    ev->callback([&ok] { ok(real_probe_json(real_of(opt.expr), opt.precision)); });
    auto* va = real_cmd->add_subcommand("validate", "probe nesting and moduli");
    va->add_option("--expr", opt.expr)->required();
    va->add_option("--depth", opt.depth);
    va->callback([&ok] {
      auto v = reals::validate_real(real_of(opt.expr), opt.depth);
      ok(json{{"ok", v.ok}, {"issue", v.issue}});
    });
    auto* lt = real_cmd->add_subcommand("lt", "search rational evidence for x < y");
    lt->add_option("--x", opt.x, "real expression JSON")->required();
    lt->add_option("--y", opt.y, "real expression JSON")->required();
    lt->add_option("--fuel", opt.fuel);
    lt->callback([&ok, &inconclusive] {
      auto hit = reals::lt_with_fuel(real_of(opt.x), real_of(opt.y), opt.fuel);
      if (hit)
        ok(json{{"index", *hit}});
      else
        inconclusive(json(), "no separation within fuel " + std::to_string(opt.fuel));
    });
    auto* le = real_cmd->add_subcommand("le", "search a refutation of x <= y");
    le->add_option("--x", opt.x)->required();
    le->add_option("--y", opt.y)->required();
    le->add_option("--depth", opt.depth);
    le->callback([&ok] {
      auto check = reals::le_check(real_of(opt.x), real_of(opt.y), opt.depth);
      json idx;
      if (check.index) idx = *check.index;
      ok(json{{"refuted", check.refuted}, {"index", std::move(idx)}});
    });
    auto* co = real_cmd->add_subcommand("cotrans", "split x < y across a third real");
    co->add_option("--x", opt.x)->required();
    co->add_option("--y", opt.y)->required();
    co->add_option("--z", opt.z, "the comparison real")->required();
    co->add_option("--witness", opt.witness, "probe with rational evidence for x < y");
    co->callback([&ok] {
      auto r = reals::cotrans(real_of(opt.x), real_of(opt.y), opt.witness, real_of(opt.z));
      ok(json{{"side",
               r.side == reals::CotransResult::Side::XBelowZ ? "x-below-z" : "z-below-y"},
              {"index", r.index}});
    });
  }

  // ------------------------------------------------------------- measure --
  auto* measure_cmd = app.add_subcommand("measure", "coded open sets and their lengths");
  measure_cmd->require_subcommand(1);
  {
    static struct {
      std::string intervals, a, b, alpha, beta, steps, step, q, r;
      std::uint64_t n = 1, depth = 4, prefix = 32, precision = 8, gap_witness = 1;
    } opt;
    opt = {};
    auto* mu = measure_cmd->add_subcommand("mu", "length of a finite union");
    mu->add_option("--intervals", opt.intervals, "JSON list of [q, r] rational pairs")
        ->required();
    mu->callback([&ok] {
      ok(json(rat_text(measure::mu_finite(intervals_of(opt.intervals, "intervals")))));
    });
    auto* ne = measure_cmd->add_subcommand("neaten", "canonical form of a finite union");
    ne->add_option("--intervals", opt.intervals)->required();
    ne->callback([&ok] {
      ok(intervals_json(measure::neaten(intervals_of(opt.intervals, "intervals"))));
    });
    auto* in = measure_cmd->add_subcommand("intersect", "intersection of two segments");
    in->add_option("--a", opt.a, "[q, r] JSON pair")->required();
    in->add_option("--b", opt.b, "[q, r] JSON pair")->required();
    in->callback([&ok] {
      auto pa = pairs_of_json(json::array({parse_json_opt(opt.a, "a")}), "a").front();
      auto pb = pairs_of_json(json::array({parse_json_opt(opt.b, "b")}), "b").front();
      ok(rat_pair_json(measure::intersect_pair(pa, pb)));
    });
    auto* cv = measure_cmd->add_subcommand("cover", "window covering decision");
    cv->add_option("--intervals", opt.intervals)->required();
    cv->add_option("--q", opt.q, "window left end")->required();
    cv->add_option("--r", opt.r, "window right end")->required();
    cv->add_option("--n", opt.n, "fraction parameter");
    cv->callback([&ok] {
      auto verdict = measure::cover_decision(
          measure::finite_gen(intervals_of(opt.intervals, "intervals")), parse_rat(opt.q),
          parse_rat(opt.r), opt.n);
      ok(json(verdict == measure::CoverVerdict::CoversMoreThan ? "covers-more" : "never-covers"));
    });
    auto* cf = measure_cmd->add_subcommand("complement-fan",
                                           "fan of binary cells escaping a small open set");
    cf->add_option("--alpha", opt.alpha, "JSON list of [q, r] pairs, mass below 2^-(n+2)")
        ->required();
    cf->add_option("--n", opt.n, "smallness parameter");
    cf->add_option("--depth", opt.depth, "cell depth to enumerate");
    cf->add_option("--prefix", opt.prefix, "segments of the complement cover to measure");
    cf->callback([&ok] {
      auto fan =
          measure::complement_fan(measure::finite_gen(intervals_of(opt.alpha, "alpha")), opt.n);
      json cells = json::array();
      for (const Seq& s : spreads::enumerate_admitted(fan.law, opt.depth))
        cells.push_back(seq_json(s));
      Rat prefix_mu = measure::gen_prefix_mu(fan.alpha_plus, opt.prefix);
      ok(json{{"admitted", std::move(cells)},
              {"mu_plus_prefix", rat_text(prefix_mu)},
              {"prefix", opt.prefix}});
    });
    auto* po = measure_cmd->add_subcommand("point-outside",
                                           "a point inside one cover escaping another");
    po->add_option("--alpha", opt.alpha, "escaped cover, JSON list of pairs")->required();
    po->add_option("--beta", opt.beta, "containing cover, JSON list of pairs")->required();
    po->add_option("--gap-witness", opt.gap_witness,
                   "prefix of beta already outweighing alpha");
    po->add_option("--precision", opt.precision);
    po->callback([&ok] {
      auto x = measure::point_outside(measure::finite_gen(intervals_of(opt.alpha, "alpha")),
                                      measure::finite_gen(intervals_of(opt.beta, "beta")),
                                      opt.gap_witness);
      ok(real_probe_json(x, opt.precision));
    });
    auto* st = measure_cmd->add_subcommand("step", "validate a step approximation");
    st->add_option("--step", opt.step, "step JSON")->required();
    st->callback([&ok] {
      auto step = step_of_json(parse_json_opt(opt.step, "step"));
      measure::validate_step(step);
      ok(json{{"valid", true}, {"estimate", rat_text(measure::integral_estimate(step))}});
    });
    auto* ig = measure_cmd->add_subcommand("integral", "integral of a step-approximated map");
    ig->add_option("--steps", opt.steps, "JSON list of steps, item i accurate to 2^-i")
        ->required();
    ig->add_option("--precision", opt.precision);
    ig->callback([&ok] { ok(real_probe_json(measure::integral_of(steps_of(opt.steps)),
                                            opt.precision)); });
    auto* lc = measure_cmd->add_subcommand("level-cut", "band avoided by a step-approximated map");
    lc->add_option("--steps", opt.steps)->required();
    lc->add_option("--q", opt.q)->required();
    lc->add_option("--r", opt.r)->required();
    lc->add_option("--n", opt.n, "avoided-cover mass below 2^-n");
    lc->callback([&ok] {
      auto cut = measure::level_cut(steps_of(opt.steps), parse_rat(opt.q), parse_rat(opt.r),
                                    opt.n);
      ok(json{{"s", rat_text(cut.s)},
              {"t", rat_text(cut.t)},
              {"avoided", intervals_json(cut.avoided)}});
    });
  }

  // -------------------------------------------------------------- ramsey --
  auto* ramsey_cmd = app.add_subcommand("ramsey", "finiteness probes and arrow relations");
  ramsey_cmd->require_subcommand(1);
  {
    static struct {
      std::string set, b, c, tuple, zeta, s, colors, alpha, beta, mode, order, bound;
      std::uint64_t M = 1, n = 1, k = 1, r = 1, cap = 8, window = 64, budget = 0, node_budget = 16;
      bool star = false, pre = false;
    } opt;
    opt = {};
    auto* ar = ramsey_cmd->add_subcommand("arrow", "finite (star-)arrow relation");
    ar->add_option("--M", opt.M)->required();
    ar->add_option("--n", opt.n)->required();
    ar->add_option("--k", opt.k)->required();
    ar->add_option("--r", opt.r)->required();
    ar->add_flag("--star", opt.star, "require relatively large homogeneous tuples");
    ar->add_option("--budget", opt.budget, "evaluation budget (0 = default)");
    ar->callback([&ok, &result, &exit_fixed] {
      std::uint64_t budget = opt.budget ? opt.budget : ramsey::kDefaultArrowBudget;
      bool holds = opt.star ? ramsey::arrow_star_check(opt.M, opt.n, opt.k, opt.r, budget)
                            : ramsey::arrow_check(opt.M, opt.n, opt.k, opt.r, budget);
      ok(json(holds));
      result.exit_code = holds ? 0 : 1;
      exit_fixed = true;
    });
    auto* mn = ramsey_cmd->add_subcommand("min", "least M with the (star-)arrow property");
    mn->add_option("--n", opt.n)->required();
    mn->add_option("--k", opt.k)->required();
    mn->add_option("--r", opt.r)->required();
    mn->add_option("--cap", opt.cap)->required();
    mn->add_flag("--star", opt.star);
    mn->add_option("--budget", opt.budget, "evaluation budget (0 = default)");
    mn->callback([&ok, &inconclusive] {
      std::uint64_t budget = opt.budget ? opt.budget : ramsey::kDefaultArrowBudget;
      auto least = ramsey::min_arrow(opt.n, opt.k, opt.r, opt.cap, opt.star, budget);
      if (least)
        ok(json(*least));
      else
        inconclusive(json(), "no M up to " + std::to_string(opt.cap) + " has the property");
    });
    auto* mo = ramsey_cmd->add_subcommand("mono", "monochromatic and pre-monochromatic tests");
    mo->add_option("--s", opt.s, "JSON array, strictly increasing")->required();
    mo->add_option("--colors", opt.colors, "color oracle JSON (map by tuple code)")->required();
    mo->add_option("--k", opt.k)->required();
    mo->add_flag("--pre", opt.pre, "test (k+1)-pre-monochromaticity instead");
    mo->callback([&ok] {
      Seq s = seq_of_text(opt.s, "s");
      auto colors = seq_oracle(opt.colors, "colors");
      bool holds = opt.pre ? ramsey::is_pre_monochromatic(s, colors, opt.k + 1)
                           : ramsey::is_monochromatic(s, colors, opt.k);
      ok(json(holds));
    });
    auto* tr = ramsey_cmd->add_subcommand("tree", "admission tree of pre-monochromatic tuples");
    tr->add_option("--k", opt.k)->required();
    tr->add_option("--alpha", opt.alpha, "first color oracle JSON")->required();
    tr->add_option("--beta", opt.beta, "second color oracle JSON (defaults to alpha)");
    tr->add_option("--budget", opt.node_budget, "node budget");
    tr->add_option("--order", opt.order, "numeric or admission")
        ->check(CLI::IsMember({"numeric", "admission"}));
    tr->callback([&ok] {
      auto alpha = seq_oracle(opt.alpha, "alpha");
      auto beta = opt.beta.empty() ? alpha : seq_oracle(opt.beta, "beta");
      auto order = opt.order == "admission" ? ramsey::TreeOrder::AdmissionOrder
                                            : ramsey::TreeOrder::NumericCode;
      auto tree = ramsey::erdos_rado_tree(alpha, beta, opt.k, opt.node_budget, order);
      json nodes = json::array();
      for (const auto& node : tree.nodes) {
        json parent;
        if (node.parent) parent = *node.parent;
        json attached;
        if (node.attached) attached = nat_json(*node.attached);
        nodes.push_back(json{{"s", seq_json(node.s)},
                             {"code", nat_json(node.code)},
                             {"parent", std::move(parent)},
                             {"attached", std::move(attached)}});
      }
      ok(json{{"nodes", std::move(nodes)}, {"truncated", tree.truncated}});
    });
    auto* pb = ramsey_cmd->add_subcommand("probe", "finiteness notions on explicit evidence");
    pb->add_option("--mode", opt.mode, "finite, bounded or almost")
        ->required()
        ->check(CLI::IsMember({"finite", "bounded", "almost"}));
    pb->add_option("--set", opt.set, "set description JSON")->required();
    pb->add_option("--bound", opt.bound, "finite mode: claimed bound");
    pb->add_option("--window", opt.window, "finite mode: probe window");
    pb->add_option("--k", opt.k, "bounded mode: claimed tuple-length bound");
    pb->add_option("--tuple", opt.tuple, "bounded mode: JSON array of length k+1");
    pb->add_option("--zeta", opt.zeta, "almost mode: increasing JSON array");
    pb->callback([&ok, &inconclusive] {
      ramsey::ProbeMode mode;
      if (opt.mode == "finite") {
        mode = ramsey::FiniteMode{nat_of_text(opt.bound.empty() ? "0" : opt.bound, "bound"),
                                  opt.window};
      } else if (opt.mode == "bounded") {
        mode = ramsey::BoundedMode{opt.k, seq_of_text(opt.tuple, "tuple")};
      } else {
        mode = ramsey::AlmostMode{seq_of_text(opt.zeta, "zeta")};
      }
      auto probe = ramsey::finiteness_probe(set_of(opt.set, "set"), mode);
      json witness;
      if (probe.witness) witness = nat_json(*probe.witness);
      if (probe.status == ramsey::ProbeResult::Status::Inconclusive)
        inconclusive(json{{"result", "inconclusive"}}, "evidence exhausted without a verdict");
      else
        ok(json{{"result",
                 probe.status == ramsey::ProbeResult::Status::Holds ? "holds" : "violated"},
                {"witness", std::move(witness)}});
    });
    auto* up = ramsey_cmd->add_subcommand("union-probe", "almost-fullness of a union");
    up->add_option("--b", opt.b, "set description JSON")->required();
    up->add_option("--c", opt.c, "set description JSON")->required();
    up->add_option("--zeta", opt.zeta, "increasing JSON array")->required();
    up->callback([&ok, &inconclusive] {
      auto probe = ramsey::almost_union_probe(set_of(opt.b, "b"), set_of(opt.c, "c"),
                                              seq_of_text(opt.zeta, "zeta"));
      json witness;
      if (probe.witness) witness = nat_json(*probe.witness);
      if (probe.status == ramsey::ProbeResult::Status::Inconclusive)
        inconclusive(json{{"result", "inconclusive"}}, "evidence exhausted without a verdict");
      else
        ok(json{{"result",
                 probe.status == ramsey::ProbeResult::Status::Holds ? "holds" : "violated"},
                {"witness", std::move(witness)}});
    });
  }

  // ------------------------------------------------------------------ wo --
  auto* wo_cmd = app.add_subcommand("wo", "well-ordered finite sets of rationals");
  wo_cmd->require_subcommand(1);
  {
    static struct {
      std::string set, order, tree, alpha, gamma, s;
    } opt;
    opt = {};
    auto* dc = wo_cmd->add_subcommand("decompose", "record-keeping witness tree");
    dc->add_option("--set", opt.set, "comma-separated rationals")->required();
    dc->add_option("--order", opt.order, "comma-separated indices into the set");
    dc->callback([&ok] {
      std::vector<Rat> elements;
      if (!slurp(opt.set).empty())
        for (const std::string& item : split_csv(slurp(opt.set)))
          elements.push_back(parse_rat(item));
      std::vector<std::uint64_t> order;
      if (opt.order.empty()) {
        for (std::uint64_t i = 0; i < elements.size(); ++i) order.push_back(i);
      } else {
        for (const std::string& item : split_csv(opt.order))
          order.push_back(u64_of(nat_of_text(item, "order"), "order"));
      }
      auto tree = worder::decompose(elements, order);
      ok(json::parse(worder::wo_to_json_text(tree)));
    });
    auto* va = wo_cmd->add_subcommand("validate", "check a witness tree");
    va->add_option("--tree", opt.tree, "tree JSON")->required();
    va->callback([&ok] {
      auto v = worder::validate_wo(worder::wo_from_json_text(slurp(opt.tree)));
      json denoted = json::array();
      for (const Rat& q : v.denoted) denoted.push_back(rat_text(q));
      json violation;
      if (v.violation)
        violation = json::array({rat_text(v.violation->first), rat_text(v.violation->second)});
      ok(json{{"valid", v.valid},
              {"denoted", std::move(denoted)},
              {"violation", std::move(violation)}});
    });
    auto* wf = wo_cmd->add_subcommand("wf", "well-foundedness probe of an enumeration");
    wf->add_option("--alpha", opt.alpha, "index oracle JSON (0 = nothing emitted)")->required();
    wf->add_option("--gamma", opt.gamma, "JSON array of probe indices")->required();
    wf->callback([&ok, &inconclusive] {
      worder::EnumSet en{index_oracle(opt.alpha, "alpha")};
      auto hit = worder::wf_probe(en, seq_of_text(opt.gamma, "gamma"));
      if (hit)
        ok(json(*hit));
      else
        inconclusive(json(), "prefix is a strictly descending chain of emissions");
    });
    auto* br = wo_cmd->add_subcommand("bar", "membership in the enumeration bar");
    br->add_option("--alpha", opt.alpha)->required();
    br->add_option("--s", opt.s, "JSON array of probe indices")->required();
    br->callback([&ok] {
      ok(json(worder::bar_b_alpha(index_oracle(opt.alpha, "alpha"), seq_of_text(opt.s, "s"))));
    });
  }

  // ----------------------------------------------------------------------
  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.status = CommandResult::Status::Ok;
    result.payload = app.help();
    result.format = format;
    result.exit_code = 0;
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = CommandResult::Status::Error;
    result.payload = json();
    result.diagnostics = {std::string("usage: ") + e.what(), app.help()};
    result.format = format;
    result.exit_code = 1;
    return result;
  } catch (const InputError& e) {
    result.status = CommandResult::Status::Error;
    result.payload = json();
    result.diagnostics = {std::string("input error: ") + e.what()};
  } catch (const BudgetError& e) {
    result.status = CommandResult::Status::Error;
    result.payload = json();
    result.diagnostics = {std::string("budget exceeded: ") + e.what()};
  } catch (const LawError& e) {
    result.status = CommandResult::Status::Error;
    result.payload = json();
    result.diagnostics = {std::string("law violation: ") + e.what()};
  } catch (const std::exception& e) {
    result.status = CommandResult::Status::Error;
    result.payload = json();
    result.diagnostics = {std::string("error: ") + e.what()};
  }

  result.format = format;
  if (!exit_fixed || result.status != CommandResult::Status::Ok) {
    switch (result.status) {
      case CommandResult::Status::Ok: result.exit_code = 0; break;
      case CommandResult::Status::Error: result.exit_code = 1; break;
      case CommandResult::Status::Inconclusive: result.exit_code = 2; break;
    }
  }
  return result;
}

std::string render(const CommandResult& result) {
  const char* status = result.status == CommandResult::Status::Ok            ? "ok"
                       : result.status == CommandResult::Status::Inconclusive ? "inconclusive"
                                                                              : "error";
  if (result.format == "text") {
    std::ostringstream out;
    out << status;
    if (!result.payload.is_null()) {
      out << "\n"
          << (result.payload.is_string() ? result.payload.get<std::string>()
                                         : result.payload.dump(2));
    }
    for (const std::string& d : result.diagnostics) out << "\n# " << d;
    return out.str();
  }
  json out{{"status", status}, {"payload", result.payload}, {"diagnostics", result.diagnostics}};
  return out.dump(2);
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  CommandResult result = dispatch(args);
  std::cout << render(result) << std::endl;
  return result.exit_code;
}

}  // namespace baire::cli
