#include "baire/seqcode.hpp"

#include <algorithm>

namespace baire {

Rat pow2(long e) {
  Rat out = 1;
  if (e >= 0) {
    mpz_mul_2exp(out.get_num_mpz_t(), out.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return out;
}

Rat parse_rat(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0) throw InputError("malformed rational: " + text);
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string rat_text(const Rat& q) { return q.get_str(); }

}  // namespace baire

namespace baire::seq {

Seq make_seq(std::initializer_list<unsigned long> entries) {
  Seq s;
  s.reserve(entries.size());
  for (unsigned long e : entries) s.emplace_back(e);
  return s;
}

Nat pair(const Nat& a, const Nat& b) {
  Nat d = a + b;
  return d * (d + 1) / 2 + b;
}

std::pair<Nat, Nat> unpair(const Nat& v) {
  // d = floor((sqrt(8v+1) - 1) / 2) is the diagonal; b is the offset on it.
  Nat root = sqrt(8 * v + 1);
  Nat d = (root - 1) / 2;
  Nat b = v - d * (d + 1) / 2;
  return {d - b, b};
}

Nat encode(const Seq& s) {
  Nat code = 0;
  for (const Nat& n : s) code = pair(code, n) + 1;
  return code;
}

Seq decode(const Nat& code) {
  Seq out;
  Nat v = code;
  while (v > 0) {
    auto [rest, last] = unpair(v - 1);
    out.push_back(last);
    v = rest;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Seq concat(const Seq& s, const Seq& t) {
  Seq out = s;
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

Seq take(const Seq& s, std::size_t n) {
  if (n > s.size()) throw InputError("take: prefix length exceeds sequence length");
  return Seq(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n));
}

PrefixRel prefix_rel(const Seq& s, const Seq& t) {
  std::size_t common = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < common; ++i)
    if (s[i] != t[i]) return PrefixRel::Incomparable;
  if (s.size() == t.size()) return PrefixRel::Equal;
  return s.size() < t.size() ? PrefixRel::StrictPrefix : PrefixRel::StrictExtension;
}

bool is_prefix(const Seq& s, const Seq& t) {
  PrefixRel rel = prefix_rel(s, t);
  return rel == PrefixRel::StrictPrefix || rel == PrefixRel::Equal;
}

Seq compose(const Seq& s, const Seq& t) {
  Seq out;
  out.reserve(t.size());
  for (const Nat& i : t) {
    if (i >= s.size()) throw InputError("compose: index " + i.get_str() + " out of range");
    out.push_back(s[i.get_ui()]);
  }
  return out;
}

bool is_increasing(const Seq& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] >= s[i + 1]) return false;
  return true;
}

bool is_bounded_below(const Seq& s, const Nat& m) {
  if (!is_increasing(s)) return false;
  for (const Nat& e : s)
    if (e >= m) return false;
  return true;
}

}  // namespace baire::seq
