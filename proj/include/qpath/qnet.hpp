#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qpath/cospan.hpp"
#include "qpath/error.hpp"
#include "qpath/vertex_set.hpp"

namespace qpath {

// Resource semantics for net markings: free commutative monoid (natural),
// free abelian group (integer), or the k-idempotent quotient monoid
// {0..k-1} generated by identifying k with 1. k = 2 gives idempotent sets.
struct ResourceKind {
  enum class Tag { natural, integer, bounded };
  Tag tag = Tag::natural;
  std::int64_t k = 0;  // only for bounded, k >= 2

  static ResourceKind natural() { return {Tag::natural, 0}; }
  static ResourceKind integer() { return {Tag::integer, 0}; }
  static ResourceKind bounded(std::int64_t k) {
    if (k < 2) throw semantic_error("bounded kind requires k >= 2");
    return {Tag::bounded, k};
  }

  std::string to_string() const {
    switch (tag) {
      case Tag::natural: return "natural";
      case Tag::integer: return "integer";
      case Tag::bounded: return "bounded:" + std::to_string(k);
    }
    return "?";
  }
  static ResourceKind parse(const std::string& s) {
    if (s == "natural") return natural();
    if (s == "integer") return integer();
    if (s.rfind("bounded:", 0) == 0) {
      try {
        return bounded(std::stoll(s.substr(8)));
      } catch (const semantic_error&) {
        throw;
      } catch (const std::exception&) {
        throw parse_error("bad bound in kind '" + s + "'");
      }
    }
    throw parse_error("unknown resource kind '" + s + "'");
  }
  bool operator==(const ResourceKind&) const = default;
};

// Quotient of n in {0,1,2,...} under the congruence generated by k ~ 1.
inline std::int64_t bounded_normalize(std::int64_t k, std::int64_t n) {
  if (n <= k - 1) return n;
  return ((n - 1) % (k - 1)) + 1;
}

inline std::int64_t coeff_add(const ResourceKind& kind, std::int64_t a,
                              std::int64_t b) {
  if (kind.tag == ResourceKind::Tag::bounded)
    return bounded_normalize(kind.k, a + b);
  return a + b;
}

inline bool coeff_valid(const ResourceKind& kind, std::int64_t c) {
  switch (kind.tag) {
    case ResourceKind::Tag::natural: return c >= 0;
    case ResourceKind::Tag::integer: return true;
    case ResourceKind::Tag::bounded: return c >= 0 && c <= kind.k - 1;
  }
  return false;
}

// Finitely supported place -> coefficient map; zero coefficients are never
// stored, so equality and ordering are structural.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::map<std::string, std::int64_t> coeffs) {
    for (auto& [p, c] : coeffs)
      if (c != 0) coeffs_.emplace(p, c);
  }

  std::int64_t get(const std::string& place) const {
    auto it = coeffs_.find(place);
    return it == coeffs_.end() ? 0 : it->second;
  }
  void set(const std::string& place, std::int64_t c) {
    if (c == 0)
      coeffs_.erase(place);
    else
      coeffs_[place] = c;
  }
  const std::map<std::string, std::int64_t>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  bool operator==(const Marking&) const = default;
  bool operator<(const Marking& other) const { return coeffs_ < other.coeffs_; }

  std::string to_string() const {
    std::string out;
    for (const auto& [p, c] : coeffs_) {
      if (!out.empty()) out += "+";
      if (c != 1) out += std::to_string(c) + "*";
      out += p;
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::map<std::string, std::int64_t> coeffs_;
};

inline Marking marking_add(const ResourceKind& kind, const Marking& a,
                           const Marking& b) {
  Marking out = a;
  for (const auto& [p, c] : b.coeffs())
    out.set(p, coeff_add(kind, out.get(p), c));
  return out;
}

// Difference in the free abelian group; callers decide what negatives mean.
inline Marking marking_sub(const Marking& a, const Marking& b) {
  Marking out = a;
  for (const auto& [p, c] : b.coeffs()) out.set(p, out.get(p) - c);
  return out;
}

inline bool marking_geq(const Marking& a, const Marking& b) {
  for (const auto& [p, c] : b.coeffs())
    if (a.get(p) < c) return false;
  return true;
}

// Transport along a place map; coefficients of identified places combine by
// the kind's addition.
inline Marking push_marking(const ResourceKind& kind, const FiniteFunction& f,
                            const Marking& m) {
  Marking out;
  for (const auto& [p, c] : m.coeffs()) {
    const std::string& q = f.apply(p);
    out.set(q, coeff_add(kind, out.get(q), c));
  }
  return out;
}

struct Transition {
  std::string id;
  Marking src, tgt;
};

// A resource net: transitions with source/target markings over places.
struct QNet {
  ResourceKind kind;
  VertexSet places;
  std::vector<Transition> transitions;

  void validate() const {
    std::map<std::string, int> seen;
    for (const auto& t : transitions) {
      if (seen[t.id]++)
        throw semantic_error("duplicate transition id '" + t.id + "'");
      for (const auto* m : {&t.src, &t.tgt})
        for (const auto& [p, c] : m->coeffs()) {
          if (!places.contains(p))
            throw semantic_error("transition '" + t.id +
                                 "' uses unknown place '" + p + "'");
          if (!coeff_valid(kind, c))
            throw semantic_error("transition '" + t.id +
                                 "' has a coefficient outside " +
                                 kind.to_string());
        }
    }
  }
  const Transition& transition(const std::string& id) const {
    for (const auto& t : transitions)
      if (t.id == id) return t;
    throw semantic_error("unknown transition '" + id + "'");
  }
};

// Ordered-input/output net; only its abelianization has firing semantics
// here.
struct PreNetTransition {
  std::string id;
  std::vector<std::string> src, tgt;
};
struct PreNet {
  VertexSet places;
  std::vector<PreNetTransition> transitions;
};

struct OpenNet {
  VertexSet input, output;
  FiniteFunction leg_in, leg_out;  // boundaries -> places
  QNet net;

  void validate() const {
    net.validate();
    if (leg_in.domain() != input || leg_in.codomain() != net.places)
      throw semantic_error("open net: input leg does not fit");
    if (leg_out.domain() != output || leg_out.codomain() != net.places)
      throw semantic_error("open net: output leg does not fit");
  }
};

struct FiringStep {
  std::string transition;
  Marking context;  // what the step leaves untouched
};
struct FiringSequence {
  Marking initial;
  std::vector<FiringStep> steps;
};

struct FireOutcome {
  Marking result;
  Marking context;
};

// All ways transition `tid` can fire at `m`.
//   natural: the single outcome m - s + t when m >= s;
//   integer: always the single outcome m - s + t;
//   bounded: every context r with s (+) r = m, giving t (+) r.
inline std::vector<FireOutcome> fire_detailed(const QNet& net, const Marking& m,
                                              const std::string& tid) {
  const Transition& tr = net.transition(tid);
  std::vector<FireOutcome> out;
  switch (net.kind.tag) {
    case ResourceKind::Tag::natural: {
      if (!marking_geq(m, tr.src)) return out;
      Marking ctx = marking_sub(m, tr.src);
      out.push_back({marking_add(net.kind, ctx, tr.tgt), std::move(ctx)});
      return out;
    }
    case ResourceKind::Tag::integer: {
      Marking ctx = marking_sub(m, tr.src);
      out.push_back({marking_add(net.kind, ctx, tr.tgt), std::move(ctx)});
      return out;
    }
    case ResourceKind::Tag::bounded: {
      const std::int64_t k = net.kind.k;
      std::vector<std::string> support;
      for (const auto& [p, c] : m.coeffs()) support.push_back(p);
      for (const auto& [p, c] : tr.src.coeffs())
        if (!m.coeffs().count(p)) support.push_back(p);
      std::vector<std::vector<std::int64_t>> choices(support.size());
      for (std::size_t i = 0; i < support.size(); ++i) {
        const std::int64_t sp = tr.src.get(support[i]);
        const std::int64_t mp = m.get(support[i]);
        for (std::int64_t r = 0; r <= k - 1; ++r)
          if (bounded_normalize(k, sp + r) == mp) choices[i].push_back(r);
        if (choices[i].empty()) return {};
      }
      std::vector<std::size_t> pick(support.size(), 0);
      while (true) {
        Marking ctx;
        for (std::size_t i = 0; i < support.size(); ++i)
          ctx.set(support[i], choices[i][pick[i]]);
        out.push_back({marking_add(net.kind, ctx, tr.tgt), ctx});
        std::size_t i = 0;
        for (; i < support.size(); ++i) {
          if (++pick[i] < choices[i].size()) break;
          pick[i] = 0;
        }
        if (i == support.size()) break;
      }
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.result == b.result) return a.context < b.context;
        return a.result < b.result;
      });
      out.erase(std::unique(out.begin(), out.end(),
                            [](const auto& a, const auto& b) {
                              return a.result == b.result &&
                                     a.context == b.context;
                            }),
                out.end());
      return out;
    }
  }
  return out;
}

// Result markings only, as a sorted duplicate-free set.
inline std::vector<Marking> fire(const QNet& net, const Marking& m,
                                 const std::string& tid) {
  std::vector<Marking> out;
  for (auto& o : fire_detailed(net, m, tid)) out.push_back(std::move(o.result));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Deterministic restriction of the bounded rule: picks, per place, the least
// context compatible with the marking (the pointwise minimum, which exists
// because the per-place choices are independent). For natural/integer kinds
// this agrees with fire().
inline std::optional<Marking> fire_minimal_context(const QNet& net,
                                                   const Marking& m,
                                                   const std::string& tid) {
  auto outcomes = fire_detailed(net, m, tid);
  if (outcomes.empty()) return std::nullopt;
  auto pointwise_leq = [](const Marking& a, const Marking& b) {
    for (const auto& [p, c] : a.coeffs())
      if (c > b.get(p)) return false;
    return true;
  };
  const FireOutcome* best = &outcomes.front();
  for (const auto& o : outcomes)
    if (pointwise_leq(o.context, best->context)) best = &o;
  return best->result;
}

struct ReachEntry {
  Marking marking;
  std::size_t depth = 0;
  FiringSequence witness;
};
struct ReachResult {
  std::vector<ReachEntry> markings;  // ordered by (depth, marking)
  bool pruned = false;               // some branch hit the coefficient cap
};

// Breadth-first closure under fire, up to `depth` steps. Markings with any
// coefficient of magnitude above `coeff_cap` are pruned and flagged, not
// explored.
inline ReachResult reachable(const QNet& net, const Marking& m0,
                             std::size_t depth, std::int64_t coeff_cap) {
  net.validate();
  ReachResult result;
  auto capped = [&](const Marking& m) {
    for (const auto& [p, c] : m.coeffs())
      if (c > coeff_cap || -c > coeff_cap) return true;
    return false;
  };
  if (capped(m0)) {
    result.pruned = true;
    return result;
  }
  std::map<Marking, std::pair<Marking, FiringStep>> parent;
  std::map<Marking, std::size_t> depth_of;
  std::deque<Marking> frontier{m0};
  depth_of[m0] = 0;
  while (!frontier.empty()) {
    Marking m = frontier.front();
    frontier.pop_front();
    std::size_t d = depth_of[m];
    if (d == depth) continue;
    for (const auto& tr : net.transitions) {
      for (auto& o : fire_detailed(net, m, tr.id)) {
        if (capped(o.result)) {
          result.pruned = true;
          continue;
        }
        if (depth_of.count(o.result)) continue;
        depth_of[o.result] = d + 1;
        parent.emplace(o.result,
                       std::make_pair(m, FiringStep{tr.id, o.context}));
        frontier.push_back(o.result);
      }
    }
  }
  for (const auto& [m, d] : depth_of) {
    FiringSequence seq;
    seq.initial = m0;
    Marking cur = m;
    std::vector<FiringStep> rev;
    while (!(cur == m0)) {
      const auto& [prev, step] = parent.at(cur);
      rev.push_back(step);
      cur = prev;
    }
    seq.steps.assign(rev.rbegin(), rev.rend());
    result.markings.push_back(ReachEntry{m, d, std::move(seq)});
  }
  std::sort(result.markings.begin(), result.markings.end(),
            [](const ReachEntry& a, const ReachEntry& b) {
              if (a.depth != b.depth) return a.depth < b.depth;
              return a.marking < b.marking;
            });
  return result;
}

// Places glued by pushout over the shared boundary, transitions disjointly
// united with colliding ids origin-prefixed, markings pushed forward.
struct NetComposeResult {
  OpenNet composite;
  FiniteFunction left_places, right_places;
  std::map<std::string, std::string> left_transition_ids, right_transition_ids;
};

inline NetComposeResult compose_open_net_full(const OpenNet& p,
                                              const OpenNet& q) {
  if (!(p.net.kind == q.net.kind))
    throw semantic_error("compose: resource kinds differ");
  if (p.output != q.input)
    throw semantic_error("compose: open net boundaries do not match");
  PushoutResult po = pushout(p.leg_out, q.leg_in);

  std::vector<std::string> ids;
  std::vector<bool> origin;
  for (const auto& t : p.net.transitions) {
    ids.push_back(t.id);
    origin.push_back(true);
  }
  for (const auto& t : q.net.transitions) {
    ids.push_back(t.id);
    origin.push_back(false);
  }
  ids = detail::resolve_class_labels(std::move(ids), origin);

  NetComposeResult out;
  std::vector<Transition> transitions;
  std::size_t pos = 0;
  for (const auto& t : p.net.transitions) {
    out.left_transition_ids[t.id] = ids[pos];
    transitions.push_back(Transition{ids[pos++],
                                     push_marking(p.net.kind, po.left_leg, t.src),
                                     push_marking(p.net.kind, po.left_leg, t.tgt)});
  }
  for (const auto& t : q.net.transitions) {
    out.right_transition_ids[t.id] = ids[pos];
    transitions.push_back(
        Transition{ids[pos++], push_marking(q.net.kind, po.right_leg, t.src),
                   push_marking(q.net.kind, po.right_leg, t.tgt)});
  }
  out.composite = OpenNet{p.input, q.output, compose(po.left_leg, p.leg_in),
                          compose(po.right_leg, q.leg_out),
                          QNet{p.net.kind, po.quotient, std::move(transitions)}};
  out.composite.validate();
  out.left_places = po.left_leg;
  out.right_places = po.right_leg;
  return out;
}

inline OpenNet compose_open_net(const OpenNet& p, const OpenNet& q) {
  return compose_open_net_full(p, q).composite;
}

inline OpenNet identity_open_net(const ResourceKind& kind, const VertexSet& x) {
  return OpenNet{x, x, FiniteFunction::identity(x),
                 FiniteFunction::identity(x), QNet{kind, x, {}}};
}

// Inputs must not be targets of any transition; outputs must not be sources.
inline bool is_functional_net(const OpenNet& p) {
  for (std::size_t x = 0; x < p.input.size(); ++x) {
    const std::string& place = p.net.places.label(p.leg_in.apply_index(x));
    for (const auto& t : p.net.transitions)
      if (t.tgt.get(place) != 0) return false;
  }
  for (std::size_t y = 0; y < p.output.size(); ++y) {
    const std::string& place = p.net.places.label(p.leg_out.apply_index(y));
    for (const auto& t : p.net.transitions)
      if (t.src.get(place) != 0) return false;
  }
  return true;
}

// Coefficient-wise translations along the monad morphisms between resource
// semantics: natural -> integer is the inclusion, natural -> bounded(k) is
// the k ~ 1 quotient. Other directions are not defined.
inline QNet translate_net(const QNet& net, const ResourceKind& target) {
  if (net.kind == target) return net;
  if (net.kind.tag != ResourceKind::Tag::natural)
    throw semantic_error("no translation from " + net.kind.to_string() +
                         " to " + target.to_string());
  auto map_marking = [&](const Marking& m) {
    Marking out;
    for (const auto& [p, c] : m.coeffs())
      out.set(p, target.tag == ResourceKind::Tag::bounded
                     ? bounded_normalize(target.k, c)
                     : c);
    return out;
  };
  QNet out{target, net.places, {}};
  for (const auto& t : net.transitions)
    out.transitions.push_back(
        Transition{t.id, map_marking(t.src), map_marking(t.tgt)});
  out.validate();
  return out;
}

// Forgets the input/output ordering of a pre-net: each word becomes the
// multiset of its letters.
inline QNet abelianize(const PreNet& pre) {
  auto to_marking = [](const std::vector<std::string>& word) {
    Marking m;
    for (const auto& p : word) m.set(p, m.get(p) + 1);
    return m;
  };
  QNet out{ResourceKind::natural(), pre.places, {}};
  for (const auto& t : pre.transitions)
    out.transitions.push_back(
        Transition{t.id, to_marking(t.src), to_marking(t.tgt)});
  out.validate();
  return out;
}

// Boundary-to-boundary reachability with witness counts.
//
// Witness sequences are counted up to the congruence generated by swapping
// adjacent steps when the swapped order is also a valid run with the same
// endpoints. This identifies interleavings of causally independent steps, so
// for natural-kind nets the count is the number of distinct runs in the
// collective-token sense rather than the raw number of interleavings.
struct BoundaryRelation {
  struct Entry {
    Marking from, to;  // boundary markings over input/output sets
    std::vector<long long> count_by_length;  // index = number of steps
    long long total() const {
      long long n = 0;
      for (long long c : count_by_length) n += c;
      return n;
    }
  };
  VertexSet input, output;
  std::int64_t in_cap = 0, out_cap = 0;
  std::size_t depth = 0;
  std::vector<Entry> entries;  // only related pairs, canonically ordered

  const Entry* find(const Marking& from, const Marking& to) const {
    for (const auto& e : entries)
      if (e.from == from && e.to == to) return &e;
    return nullptr;
  }
  bool related(const Marking& from, const Marking& to) const {
    return find(from, to) != nullptr;
  }
};

namespace detail {

// All boundary markings over `places` with per-place coefficients bounded by
// `cap` (and within the kind's carrier).
inline std::vector<Marking> boundary_markings(const ResourceKind& kind,
                                              const VertexSet& places,
                                              std::int64_t cap) {
  std::int64_t lo = 0, hi = cap;
  if (kind.tag == ResourceKind::Tag::integer) lo = -cap;
  if (kind.tag == ResourceKind::Tag::bounded) hi = std::min(cap, kind.k - 1);
  std::vector<Marking> out{Marking{}};
  for (const auto& p : places.labels()) {
    std::vector<Marking> next;
    for (const auto& m : out)
      for (std::int64_t c = lo; c <= hi; ++c) {
        Marking ext = m;
        ext.set(p, c);
        next.push_back(std::move(ext));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct RunRecord {
  std::vector<std::pair<std::size_t, Marking>> steps;  // (transition, context)
  std::vector<Marking> markings;                       // length steps+1

  std::string key() const {
    std::string s;
    for (const auto& [t, ctx] : steps)
      s += std::to_string(t) + "(" + ctx.to_string() + ");";
    return s;
  }
};

inline void enumerate_runs(const QNet& net, const Marking& start,
                           std::size_t depth, std::vector<RunRecord>& out) {
  RunRecord current;
  current.markings.push_back(start);
  out.push_back(current);
  // iterative deepening by extension: out holds runs in discovery order
  std::size_t begin = 0, end = out.size();
  for (std::size_t d = 0; d < depth; ++d) {
    for (std::size_t r = begin; r < end; ++r)
      for (std::size_t t = 0; t < net.transitions.size(); ++t)
        for (auto& o :
             fire_detailed(net, out[r].markings.back(),
                           net.transitions[t].id)) {
          RunRecord ext = out[r];
          ext.steps.emplace_back(t, o.context);
          ext.markings.push_back(o.result);
          out.push_back(std::move(ext));
        }
    begin = end;
    end = out.size();
  }
}

struct RunUnionFind {
  std::vector<std::size_t> parent;
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Number of swap-equivalence classes among `runs` (same endpoints/length).
inline long long count_classes(const QNet& net,
                               const std::vector<const RunRecord*>& runs) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < runs.size(); ++i) index[runs[i]->key()] = i;
  RunUnionFind uf;
  uf.parent.resize(runs.size());
  for (std::size_t i = 0; i < runs.size(); ++i) uf.parent[i] = i;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const RunRecord& run = *runs[i];
    for (std::size_t p = 0; p + 1 < run.steps.size(); ++p) {
      const auto& [ta, ctxa] = run.steps[p];
      const auto& [tb, ctxb] = run.steps[p + 1];
      const Marking& before = run.markings[p];
      const Marking& after = run.markings[p + 2];
      for (auto& first : fire_detailed(net, before, net.transitions[tb].id))
        for (auto& second :
             fire_detailed(net, first.result, net.transitions[ta].id)) {
          if (!(second.result == after)) continue;
          RunRecord swapped = run;
          swapped.steps[p] = {tb, first.context};
          swapped.steps[p + 1] = {ta, second.context};
          swapped.markings[p + 1] = first.result;
          auto it = index.find(swapped.key());
          if (it != index.end()) uf.unite(i, it->second);
        }
    }
  }
  long long classes = 0;
  for (std::size_t i = 0; i < runs.size(); ++i)
    if (uf.find(i) == i) ++classes;
  return classes;
}

}  // namespace detail

// For each input-boundary marking x (coefficients <= in_cap) and
// output-boundary marking y (<= out_cap), records whether the image of x
// reaches the image of y exactly within `depth` steps, with witness counts
// per run length. `input_markings`, when given, replaces the enumeration of
// input-boundary markings.
inline BoundaryRelation blackbox_reach(
    const OpenNet& p, std::int64_t cap, std::size_t depth,
    std::optional<std::int64_t> out_cap = std::nullopt,
    const std::vector<Marking>* input_markings = nullptr) {
  p.validate();
  BoundaryRelation rel;
  rel.input = p.input;
  rel.output = p.output;
  rel.in_cap = cap;
  rel.out_cap = out_cap.value_or(cap);
  rel.depth = depth;

  auto xs = input_markings
                ? *input_markings
                : detail::boundary_markings(p.net.kind, p.input, rel.in_cap);
  auto ys = detail::boundary_markings(p.net.kind, p.output, rel.out_cap);
  std::map<Marking, std::vector<const Marking*>> target_index;
  for (const auto& y : ys)
    target_index[push_marking(p.net.kind, p.leg_out, y)].push_back(&y);

  for (const auto& x : xs) {
    Marking start = push_marking(p.net.kind, p.leg_in, x);
    std::vector<detail::RunRecord> runs;
    detail::enumerate_runs(p.net, start, depth, runs);
    // group runs by (end marking, length) and count classes per group
    std::map<std::pair<Marking, std::size_t>, std::vector<const detail::RunRecord*>>
        groups;
    for (const auto& run : runs) {
      auto end = run.markings.back();
      if (!target_index.count(end)) continue;
      groups[{std::move(end), run.steps.size()}].push_back(&run);
    }
    std::map<const Marking*, BoundaryRelation::Entry> per_target;
    for (const auto& [key, group] : groups) {
      long long classes = detail::count_classes(p.net, group);
      for (const Marking* y : target_index.at(key.first)) {
        auto& entry = per_target[y];
        entry.from = x;
        entry.to = *y;
        if (entry.count_by_length.size() <= key.second)
          entry.count_by_length.resize(key.second + 1, 0);
        entry.count_by_length[key.second] = classes;
      }
    }
    for (auto& [y, entry] : per_target) rel.entries.push_back(std::move(entry));
  }
  std::sort(rel.entries.begin(), rel.entries.end(),
            [](const BoundaryRelation::Entry& a,
               const BoundaryRelation::Entry& b) {
              if (!(a.from == b.from)) return a.from < b.from;
              return a.to < b.to;
            });
  return rel;
}

}  // namespace qpath
