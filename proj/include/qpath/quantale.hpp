#pragma once

#include <cmath>
#include <algorithm>
#include <concepts>
#include <cstddef>
#include <limits>
#include <set>
#include <string>
#include <variant>

#include "qpath/error.hpp"

namespace qpath {

// A weight domain: commutative quantale with a computable local star.
// Conventions used throughout:
//   bottom() is the empty join, the quantale "0". It annihilates mul and is
//   the neutral element of join. For min-plus this is +infinity, NOT 0.0.
//   unit() is the monoidal identity, the quantale "1" (0.0 for min-plus).
//   leq(a,b) is the quantale order: leq(a,b) <=> join(a,b) == b. For min-plus
//   this is the REVERSE of the numeric order.
template <typename Q>
concept Quantale = requires(const Q& q, const typename Q::value_type& a,
                            const typename Q::value_type& b) {
  typename Q::value_type;
  { q.join(a, b) } -> std::same_as<typename Q::value_type>;
  { q.mul(a, b) } -> std::same_as<typename Q::value_type>;
  { q.unit() } -> std::same_as<typename Q::value_type>;
  { q.bottom() } -> std::same_as<typename Q::value_type>;
  { q.leq(a, b) } -> std::same_as<bool>;
  { q.star(a) } -> std::same_as<typename Q::value_type>;
  { q.eq(a, b) } -> std::same_as<bool>;
  { q.valid(a) } -> std::same_as<bool>;
  { q.tag() } -> std::same_as<std::string>;
  { q == q } -> std::same_as<bool>;
};

constexpr double kInf = std::numeric_limits<double>::infinity();

// Generic local star: join of all powers of one element, computed as the
// least fixed point of x -> join(unit, mul(a, x)). Instances with a closed
// form do not go through here.
template <Quantale Q>
typename Q::value_type star_by_iteration(const Q& q,
                                         const typename Q::value_type& a,
                                         int max_iters = 1000) {
  auto acc = q.unit();
  for (int i = 0; i < max_iters; ++i) {
    auto next = q.join(q.unit(), q.mul(a, acc));
    if (q.eq(next, acc)) return acc;
    acc = next;
  }
  throw convergence_error("star did not stabilize", max_iters);
}

// ([0,inf], min, +): shortest paths. Order is reversed, so leq(a,b) <=> a >= b.
struct TropicalQuantale {
  using value_type = double;
  value_type join(value_type a, value_type b) const { return a < b ? a : b; }
  value_type mul(value_type a, value_type b) const { return a + b; }
  value_type unit() const { return 0.0; }
  value_type bottom() const { return kInf; }
  bool leq(value_type a, value_type b) const { return a >= b; }
  value_type star(value_type) const { return 0.0; }
  bool eq(value_type a, value_type b) const { return a == b; }
  bool valid(value_type a) const { return a >= 0.0 && !std::isnan(a); }
  std::string tag() const { return "tropical"; }
  bool operator==(const TropicalQuantale&) const = default;
};

// ([0,inf], max, min): widest bottleneck.
struct CapacityQuantale {
  using value_type = double;
  value_type join(value_type a, value_type b) const { return a > b ? a : b; }
  value_type mul(value_type a, value_type b) const { return a < b ? a : b; }
  value_type unit() const { return kInf; }
  value_type bottom() const { return 0.0; }
  bool leq(value_type a, value_type b) const { return a <= b; }
  value_type star(value_type) const { return kInf; }
  bool eq(value_type a, value_type b) const { return a == b; }
  bool valid(value_type a) const { return a >= 0.0 && !std::isnan(a); }
  std::string tag() const { return "capacity"; }
  bool operator==(const CapacityQuantale&) const = default;
};

// ([0,1], max, *): most likely paths. Float comparisons carry a tolerance.
struct ViterbiQuantale {
  using value_type = double;
  static constexpr double kTol = 1e-12;
  value_type join(value_type a, value_type b) const { return a > b ? a : b; }
  value_type mul(value_type a, value_type b) const { return a * b; }
  value_type unit() const { return 1.0; }
  value_type bottom() const { return 0.0; }
  bool leq(value_type a, value_type b) const { return a <= b + kTol; }
  value_type star(value_type) const { return 1.0; }
  bool eq(value_type a, value_type b) const {
    return a == b || (a < b ? b - a : a - b) <= kTol;
  }
  bool valid(value_type a) const {
    return a >= 0.0 && a <= 1.0 && !std::isnan(a);
  }
  std::string tag() const { return "viterbi"; }
  bool operator==(const ViterbiQuantale&) const = default;
};

// ({false,true}, OR, AND): transitive closure.
struct BooleanQuantale {
  using value_type = bool;
  value_type join(value_type a, value_type b) const { return a || b; }
  value_type mul(value_type a, value_type b) const { return a && b; }
  value_type unit() const { return true; }
  value_type bottom() const { return false; }
  bool leq(value_type a, value_type b) const { return !a || b; }
  value_type star(value_type) const { return true; }
  bool eq(value_type a, value_type b) const { return a == b; }
  bool valid(value_type) const { return true; }
  std::string tag() const { return "boolean"; }
  bool operator==(const BooleanQuantale&) const = default;
};

// Words compared by length first, then lexicographically. Keeping sets in
// this order makes every serialization canonical for free.
struct LengthLexLess {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Length-truncated word-set quantale over a finite alphabet. Words are
// commutative (the quantale must be commutative for the matrix theory), so
// each word is kept in its canonical sorted-letter form; concatenations that
// overflow the length bound vanish, which makes star stabilize within
// max_len + 1 rounds of the generic iteration.
struct LanguageQuantale {
  using value_type = std::set<std::string, LengthLexLess>;

  std::string alphabet;  // distinct single-character symbols
  std::size_t max_len = 0;

  LanguageQuantale() = default;
  LanguageQuantale(std::string alphabet_, std::size_t max_len_)
      : alphabet(std::move(alphabet_)), max_len(max_len_) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      for (std::size_t j = i + 1; j < alphabet.size(); ++j)
        if (alphabet[i] == alphabet[j])
          throw semantic_error("language alphabet has repeated symbol '" +
                               std::string(1, alphabet[i]) + "'");
  }

  static std::string normalize_word(std::string w) {
    std::sort(w.begin(), w.end());
    return w;
  }

  value_type join(const value_type& a, const value_type& b) const {
    value_type out = a;
    out.insert(b.begin(), b.end());
    return out;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    value_type out;
    for (const auto& u : a)
      for (const auto& v : b)
        if (u.size() + v.size() <= max_len) out.insert(normalize_word(u + v));
    return out;
  }
  value_type unit() const { return value_type{""}; }
  value_type bottom() const { return value_type{}; }
  bool leq(const value_type& a, const value_type& b) const {
    for (const auto& w : a)
      if (!b.count(w)) return false;
    return true;
  }
  value_type star(const value_type& a) const {
    // terminates in <= max_len + 1 steps: each round only adds longer words
    return star_by_iteration(*this, a, static_cast<int>(max_len) + 2);
  }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
  bool valid(const value_type& a) const {
    for (const auto& w : a) {
      if (w.size() > max_len) return false;
      if (normalize_word(w) != w) return false;
      for (char c : w)
        if (alphabet.find(c) == std::string::npos) return false;
    }
    return true;
  }
  std::string tag() const {
    return "language(" + std::to_string(max_len) + "," + alphabet + ")";
  }
  bool operator==(const LanguageQuantale&) const = default;
};

static_assert(Quantale<TropicalQuantale>);
static_assert(Quantale<CapacityQuantale>);
static_assert(Quantale<ViterbiQuantale>);
static_assert(Quantale<BooleanQuantale>);
static_assert(Quantale<LanguageQuantale>);

// Element-level entry points that reject values from a different instance
// (wrong alphabet, out-of-range weight) before operating.
template <Quantale Q>
typename Q::value_type checked_join(const Q& q, const typename Q::value_type& a,
                                    const typename Q::value_type& b) {
  if (!q.valid(a) || !q.valid(b))
    throw instance_error("value does not belong to " + q.tag());
  return q.join(a, b);
}
template <Quantale Q>
typename Q::value_type checked_mul(const Q& q, const typename Q::value_type& a,
                                   const typename Q::value_type& b) {
  if (!q.valid(a) || !q.valid(b))
    throw instance_error("value does not belong to " + q.tag());
  return q.mul(a, b);
}
template <Quantale Q>
typename Q::value_type checked_star(const Q& q,
                                    const typename Q::value_type& a) {
  if (!q.valid(a))
    throw instance_error("value does not belong to " + q.tag());
  return q.star(a);
}

using AnyQuantale = std::variant<TropicalQuantale, CapacityQuantale,
                                 ViterbiQuantale, BooleanQuantale,
                                 LanguageQuantale>;

// Parses an instance tag: "tropical", "capacity", "viterbi", "boolean" or
// "language(L,alphabet)".
inline AnyQuantale parse_quantale_tag(const std::string& tag) {
  if (tag == "tropical") return TropicalQuantale{};
  if (tag == "capacity") return CapacityQuantale{};
  if (tag == "viterbi") return ViterbiQuantale{};
  if (tag == "boolean") return BooleanQuantale{};
  if (tag.rfind("language(", 0) == 0 && tag.back() == ')') {
    std::string body = tag.substr(9, tag.size() - 10);
    auto comma = body.find(',');
    if (comma == std::string::npos)
      throw parse_error("bad language tag '" + tag +
                        "', expected language(L,alphabet)");
    std::size_t len = 0;
    try {
      len = std::stoul(body.substr(0, comma));
    } catch (const std::exception&) {
      throw parse_error("bad length in language tag '" + tag + "'");
    }
    return LanguageQuantale(body.substr(comma + 1), len);
  }
  throw parse_error("unknown quantale tag '" + tag + "'");
}

inline std::string quantale_tag(const AnyQuantale& q) {
  return std::visit([](const auto& inst) { return inst.tag(); }, q);
}

}  // namespace qpath
