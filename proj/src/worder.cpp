#include "baire/worder.hpp"

#include <algorithm>

#include "baire/reals.hpp"
#include "json.hpp"

namespace baire::worder {

WOTreePtr WOTree::empty() { return std::make_shared<const WOTree>(); }

WOTreePtr WOTree::singleton(Rat value) {
  WOTree t;
  t.kind = Kind::Singleton;
  value.canonicalize();
  t.q = std::move(value);
  return std::make_shared<const WOTree>(std::move(t));
}

WOTreePtr WOTree::chain(std::vector<WOTreePtr> parts) {
  WOTree t;
  t.kind = Kind::Chain;
  t.children = std::move(parts);
  return std::make_shared<const WOTree>(std::move(t));
}

namespace {

// Returns the denoted values sorted ascending; records the first out-of-order
// adjacent pair found.
std::vector<Rat> collect(const WOTreePtr& t, WOValidation& v) {
  if (!t || t->kind == WOTree::Kind::Empty) return {};
  if (t->kind == WOTree::Kind::Singleton) return {t->q};
  std::vector<Rat> all;
  std::vector<Rat> prev;
  for (std::size_t i = 0; i < t->children.size(); ++i) {
    std::vector<Rat> d = collect(t->children[i], v);
    if (i > 0 && !prev.empty() && !d.empty() && v.valid && !(prev.back() < d.front())) {
      v.valid = false;
      v.violation = std::make_pair(prev.back(), d.front());
    }
    all.insert(all.end(), d.begin(), d.end());
    prev = std::move(d);
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::uint64_t to_index(const Nat& x, const char* what) {
  if (!x.fits_ulong_p()) throw InputError(std::string(what) + ": index beyond the probe range");
  return static_cast<std::uint64_t>(x.get_ui());
}

Rat emitted_rational(const Nat& value) {
  // value = n+1 means the rational with enumeration index n.
  return reals::RationalEnum::at(value - 1);
}

nlohmann::json tree_json(const WOTreePtr& t) {
  nlohmann::json j;
  if (!t || t->kind == WOTree::Kind::Empty) {
    j["kind"] = "empty";
    return j;
  }
  if (t->kind == WOTree::Kind::Singleton) {
    j["kind"] = "singleton";
    j["q"] = rat_text(t->q);
    return j;
  }
  j["kind"] = "chain";
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& c : t->children) kids.push_back(tree_json(c));
  j["children"] = std::move(kids);
  return j;
}

WOTreePtr tree_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InputError("well-ordering tree: node must be an object with a \"kind\" string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "empty") return WOTree::empty();
  if (kind == "singleton") {
    if (!j.contains("q") || !j["q"].is_string())
      throw InputError("well-ordering tree: singleton needs a rational string \"q\"");
    return WOTree::singleton(parse_rat(j["q"].get<std::string>()));
  }
  if (kind == "chain") {
    if (!j.contains("children") || !j["children"].is_array())
      throw InputError("well-ordering tree: chain needs a \"children\" array");
    std::vector<WOTreePtr> kids;
    for (const auto& c : j["children"]) kids.push_back(tree_from_json(c));
    return WOTree::chain(std::move(kids));
  }
  throw InputError("well-ordering tree: unknown kind \"" + kind + "\"");
}

}  // namespace

WOValidation validate_wo(const WOTreePtr& tree) {
  WOValidation v;
  v.denoted = collect(tree, v);
  v.denoted.erase(std::unique(v.denoted.begin(), v.denoted.end()), v.denoted.end());
  return v;
}

std::string wo_to_json_text(const WOTreePtr& tree) { return tree_json(tree).dump(); }

WOTreePtr wo_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("well-ordering tree: ") + e.what());
  }
  return tree_from_json(j);
}

std::optional<std::uint64_t> wf_probe(const EnumSet& en, const Seq& gamma) {
  std::vector<Nat> v;
  v.reserve(gamma.size());
  for (std::size_t pos = 0; pos < gamma.size(); ++pos) {
    v.push_back(en.alpha(to_index(gamma[pos], "wf_probe")));
    if (v.back() == 0) return pos == 0 ? 0 : static_cast<std::uint64_t>(pos - 1);
    if (pos >= 1 && !(emitted_rational(v[pos]) < emitted_rational(v[pos - 1])))
      return static_cast<std::uint64_t>(pos - 1);
  }
  return std::nullopt;
}

WOTreePtr decompose(const std::vector<Rat>& elements, const std::vector<std::uint64_t>& order) {
  const std::size_t n = elements.size();
  if (order.size() != n)
    throw InputError("decompose: order must be a permutation of the set indices");
  std::vector<char> seen(n, 0);
  for (std::uint64_t u : order) {
    if (u >= n || seen[u]) throw InputError("decompose: order must be a permutation of the set indices");
    seen[u] = 1;
  }
  {
    std::vector<Rat> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("decompose: set elements must be distinct");
  }
  if (n == 0) return WOTree::empty();

  // Records are the running maxima along the enumeration order.
  std::vector<Rat> records;
  for (std::uint64_t u : order) {
    const Rat& q = elements[u];
    if (records.empty() || q > records.back()) records.push_back(q);
  }
  // Each element joins the block of the least record at or above it.
  std::vector<std::vector<Rat>> blocks(records.size());
  for (const Rat& q : elements) {
    auto it = std::lower_bound(records.begin(), records.end(), q);
    blocks[static_cast<std::size_t>(it - records.begin())].push_back(q);
  }
  std::vector<WOTreePtr> parts;
  parts.reserve(blocks.size());
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end());
    if (block.size() == 1) {
      parts.push_back(WOTree::singleton(block.front()));
    } else {
      std::vector<WOTreePtr> leaves;
      leaves.reserve(block.size());
      for (const Rat& q : block) leaves.push_back(WOTree::singleton(q));
      parts.push_back(WOTree::chain(std::move(leaves)));
    }
  }
  return WOTree::chain(std::move(parts));
}

bool bar_b_alpha(const std::function<Nat(std::uint64_t)>& alpha, const Seq& s) {
  if (s.empty()) return false;
  std::vector<Nat> v;
  v.reserve(s.size());
  for (const Nat& entry : s) {
    v.push_back(alpha(to_index(entry, "bar_b_alpha")));
    if (v.back() == 0) return true;
  }
  if (s.size() >= 2) {
    const Nat& a = v[v.size() - 2];
    const Nat& b = v[v.size() - 1];
    if (a > 0 && b > 0 && !(emitted_rational(b) < emitted_rational(a))) return true;
  }
  return false;
}

}  // namespace baire::worder
