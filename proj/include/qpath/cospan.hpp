#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpath/error.hpp"
#include "qpath/matrix.hpp"
#include "qpath/quantale.hpp"
#include "qpath/vertex_set.hpp"

namespace qpath {

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Deterministic names for a list of classes. Each class proposes the
// lexicographically least label among its members; when two classes propose
// the same label (one from each side of a disjoint union), both are
// disambiguated with an origin prefix. `origin[i]` is true for left.
inline std::vector<std::string> resolve_class_labels(
    std::vector<std::string> labels, const std::vector<bool>& origin_left) {
  for (std::size_t round = 0; round < labels.size() + 2; ++round) {
    std::map<std::string, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < labels.size(); ++i)
      by_label[labels[i]].push_back(i);
    bool changed = false;
    for (const auto& [label, idxs] : by_label) {
      if (idxs.size() < 2) continue;
      for (std::size_t i : idxs)
        labels[i] = (origin_left[i] ? "l:" : "r:") + labels[i];
      changed = true;
    }
    if (!changed) return labels;
  }
  // pathological user labels; fall back to positional suffixes
  for (std::size_t i = 0; i < labels.size(); ++i)
    labels[i] += "#" + std::to_string(i);
  return labels;
}

}  // namespace detail

// Pushout of A <-f- Z -g-> B in finite sets. Classes are ordered by first
// appearance scanning A then B; each class is labeled by its least member,
// origin-prefixed on collisions.
struct PushoutResult {
  VertexSet quotient;
  FiniteFunction left_leg;   // A -> quotient
  FiniteFunction right_leg;  // B -> quotient
};

inline PushoutResult pushout(const FiniteFunction& f,
                             const FiniteFunction& g) {
  if (f.domain() != g.domain())
    throw semantic_error("pushout: legs must share their apex set");
  const VertexSet& a = f.codomain();
  const VertexSet& b = g.codomain();
  const std::size_t na = a.size();
  detail::UnionFind uf(na + b.size());
  for (std::size_t z = 0; z < f.domain().size(); ++z)
    uf.unite(f.apply_index(z), na + g.apply_index(z));

  std::vector<std::size_t> class_of(na + b.size());
  std::vector<std::size_t> root_to_class(na + b.size(), SIZE_MAX);
  std::vector<std::string> min_label;
  std::vector<bool> min_from_left;
  auto visit = [&](std::size_t elem, const std::string& label, bool left) {
    std::size_t root = uf.find(elem);
    if (root_to_class[root] == SIZE_MAX) {
      root_to_class[root] = min_label.size();
      min_label.push_back(label);
      min_from_left.push_back(left);
    } else {
      std::size_t c = root_to_class[root];
      if (label < min_label[c]) {
        min_label[c] = label;
        min_from_left[c] = left;
      }
    }
    class_of[elem] = root_to_class[root];
  };
  for (std::size_t i = 0; i < na; ++i) visit(i, a.label(i), true);
  for (std::size_t i = 0; i < b.size(); ++i)
    visit(na + i, b.label(i), false);

  VertexSet quotient(
      detail::resolve_class_labels(std::move(min_label), min_from_left));
  std::vector<std::size_t> left_map(class_of.begin(), class_of.begin() + na);
  std::vector<std::size_t> right_map(class_of.begin() + na, class_of.end());
  return PushoutResult{quotient,
                       FiniteFunction(a, quotient, std::move(left_map)),
                       FiniteFunction(b, quotient, std::move(right_map))};
}

// Disjoint union of two label sets, same collision rule as pushout labels.
struct DisjointUnion {
  VertexSet labels;
  FiniteFunction left;   // A -> labels
  FiniteFunction right;  // B -> labels
};

inline DisjointUnion disjoint_union(const VertexSet& a, const VertexSet& b) {
  std::vector<std::string> names;
  std::vector<bool> origin;
  names.reserve(a.size() + b.size());
  for (const auto& l : a.labels()) {
    names.push_back(l);
    origin.push_back(true);
  }
  for (const auto& l : b.labels()) {
    names.push_back(l);
    origin.push_back(false);
  }
  VertexSet u(detail::resolve_class_labels(std::move(names), origin));
  std::vector<std::size_t> lm(a.size()), rm(b.size());
  std::iota(lm.begin(), lm.end(), std::size_t{0});
  std::iota(rm.begin(), rm.end(), a.size());
  return DisjointUnion{u, FiniteFunction(a, u, std::move(lm)),
                       FiniteFunction(b, u, std::move(rm))};
}

// A structured cospan over RMat: a square matrix on a carrier set together
// with input and output boundary functions.
template <Quantale Q>
struct OpenMatrix {
  VertexSet input, output;
  FiniteFunction leg_in, leg_out;  // input -> carrier, output -> carrier
  RMatrix<Q> mat;                  // square on the carrier

  const VertexSet& carrier() const { return mat.rows(); }
  const Q& quantale() const { return mat.quantale(); }

  void validate() const {
    if (!mat.is_square())
      throw semantic_error("open matrix: apex must be square");
    if (leg_in.domain() != input || leg_in.codomain() != mat.rows())
      throw semantic_error("open matrix: input leg does not fit");
    if (leg_out.domain() != output || leg_out.codomain() != mat.rows())
      throw semantic_error("open matrix: output leg does not fit");
  }
};

template <Quantale Q>
OpenMatrix<Q> make_open(VertexSet input, VertexSet output,
                        FiniteFunction leg_in, FiniteFunction leg_out,
                        RMatrix<Q> mat) {
  OpenMatrix<Q> m{std::move(input), std::move(output), std::move(leg_in),
                  std::move(leg_out), std::move(mat)};
  m.validate();
  return m;
}

// Carriers glued by pushout over the shared boundary; the apex matrices are
// pushed forward and joined. The carrier maps are kept for callers that need
// to transport data into the composite.
template <Quantale Q>
struct OpenComposeResult {
  OpenMatrix<Q> composite;
  FiniteFunction left_map;   // M carrier -> composite carrier
  FiniteFunction right_map;  // N carrier -> composite carrier
};

template <Quantale Q>
OpenComposeResult<Q> compose_open_full(const OpenMatrix<Q>& m,
                                       const OpenMatrix<Q>& n) {
  if (!(m.quantale() == n.quantale()))
    throw instance_error("compose: quantale instances differ");
  if (m.output != n.input)
    throw semantic_error(
        "compose: boundary mismatch (outputs of the first must equal inputs "
        "of the second)");
  PushoutResult po = pushout(m.leg_out, n.leg_in);
  RMatrix<Q> glued = mat_join(pushforward(po.left_leg, m.mat),
                              pushforward(po.right_leg, n.mat));
  OpenMatrix<Q> comp{m.input, n.output, compose(po.left_leg, m.leg_in),
                     compose(po.right_leg, n.leg_out), std::move(glued)};
  return OpenComposeResult<Q>{std::move(comp), po.left_leg, po.right_leg};
}

template <Quantale Q>
OpenMatrix<Q> compose_open(const OpenMatrix<Q>& m, const OpenMatrix<Q>& n) {
  return compose_open_full(m, n).composite;
}

enum class ApexKind { zero, identity };

// Identity cospan on X: both legs the identity; the apex is the zero matrix
// for raw open matrices, or the identity matrix at the category level.
template <Quantale Q>
OpenMatrix<Q> identity_open(const Q& q, const VertexSet& x,
                            ApexKind apex = ApexKind::zero) {
  RMatrix<Q> mat = apex == ApexKind::zero ? RMatrix<Q>::zero(q, x, x)
                                          : RMatrix<Q>::identity(q, x);
  return OpenMatrix<Q>{x, x, FiniteFunction::identity(x),
                       FiniteFunction::identity(x), std::move(mat)};
}

// Parallel (monoidal) composite: disjoint carriers, block-diagonal matrix.
template <Quantale Q>
OpenMatrix<Q> tensor_open(const OpenMatrix<Q>& m, const OpenMatrix<Q>& n) {
  if (!(m.quantale() == n.quantale()))
    throw instance_error("tensor: quantale instances differ");
  const Q& q = m.quantale();
  DisjointUnion carrier = disjoint_union(m.carrier(), n.carrier());
  DisjointUnion in = disjoint_union(m.input, n.input);
  DisjointUnion out = disjoint_union(m.output, n.output);

  RMatrix<Q> mat(q, carrier.labels, carrier.labels);
  for (std::size_t i = 0; i < m.carrier().size(); ++i)
    for (std::size_t j = 0; j < m.carrier().size(); ++j)
      mat.set(carrier.left.apply_index(i), carrier.left.apply_index(j),
              m.mat.at(i, j));
  for (std::size_t i = 0; i < n.carrier().size(); ++i)
    for (std::size_t j = 0; j < n.carrier().size(); ++j)
      mat.set(carrier.right.apply_index(i), carrier.right.apply_index(j),
              n.mat.at(i, j));

  auto leg = [&](const DisjointUnion& bnd, const FiniteFunction& left_leg,
                 const FiniteFunction& right_leg) {
    std::vector<std::size_t> table(bnd.labels.size());
    for (std::size_t i = 0; i < left_leg.domain().size(); ++i)
      table[bnd.left.apply_index(i)] =
          carrier.left.apply_index(left_leg.apply_index(i));
    for (std::size_t i = 0; i < right_leg.domain().size(); ++i)
      table[bnd.right.apply_index(i)] =
          carrier.right.apply_index(right_leg.apply_index(i));
    return FiniteFunction(bnd.labels, carrier.labels, std::move(table));
  };
  FiniteFunction leg_in = leg(in, m.leg_in, n.leg_in);
  FiniteFunction leg_out = leg(out, m.leg_out, n.leg_out);
  return OpenMatrix<Q>{in.labels, out.labels, std::move(leg_in),
                       std::move(leg_out), std::move(mat)};
}

// Vertical 2-morphism check: both leg squares must commute and the carrier
// map must not increase weights past the target.
struct TwoMorphismCheck {
  bool ok = false;
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

template <Quantale Q>
TwoMorphismCheck check_two_morphism(const FiniteFunction& f,
                                    const FiniteFunction& g,
                                    const FiniteFunction& h,
                                    const OpenMatrix<Q>& m,
                                    const OpenMatrix<Q>& n) {
  if (f.domain() != m.input || f.codomain() != n.input ||
      g.domain() != m.carrier() || g.codomain() != n.carrier() ||
      h.domain() != m.output || h.codomain() != n.output)
    return {false, "shape mismatch"};
  if (!(compose(g, m.leg_in) == compose(n.leg_in, f)))
    return {false, "input leg square does not commute"};
  if (!(compose(g, m.leg_out) == compose(n.leg_out, h)))
    return {false, "output leg square does not commute"};
  if (!mat_leq(pushforward(g, m.mat), n.mat))
    return {false, "pushforward exceeds the target matrix"};
  return {true, ""};
}

namespace detail {

template <Quantale Q>
bool iso_extends(const OpenMatrix<Q>& m, const OpenMatrix<Q>& n,
                 std::vector<std::size_t>& phi, std::vector<bool>& used,
                 std::size_t next) {
  const std::size_t size = m.carrier().size();
  while (next < size && phi[next] != SIZE_MAX) ++next;
  if (next == size) {
    const Q& q = m.quantale();
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        if (!q.eq(m.mat.at(i, j), n.mat.at(phi[i], phi[j]))) return false;
    return true;
  }
  for (std::size_t cand = 0; cand < size; ++cand) {
    if (used[cand]) continue;
    phi[next] = cand;
    used[cand] = true;
    if (iso_extends(m, n, phi, used, next + 1)) return true;
    used[cand] = false;
    phi[next] = SIZE_MAX;
  }
  return false;
}

}  // namespace detail

// Equality of open matrices up to a bijective carrier relabeling that
// matches both legs and transports the apex exactly. Boundaries must agree
// on the nose. Intended for small carriers (backtracking search).
template <Quantale Q>
bool open_isomorphic(const OpenMatrix<Q>& m, const OpenMatrix<Q>& n) {
  if (!(m.quantale() == n.quantale())) return false;
  if (m.input != n.input || m.output != n.output) return false;
  if (m.carrier().size() != n.carrier().size()) return false;
  const std::size_t size = m.carrier().size();
  std::vector<std::size_t> phi(size, SIZE_MAX);
  std::vector<bool> used(size, false);
  auto pin = [&](std::size_t from, std::size_t to) {
    if (phi[from] == SIZE_MAX) {
      if (used[to]) return false;
      phi[from] = to;
      used[to] = true;
      return true;
    }
    return phi[from] == to;
  };
  for (std::size_t x = 0; x < m.input.size(); ++x)
    if (!pin(m.leg_in.apply_index(x), n.leg_in.apply_index(x))) return false;
  for (std::size_t y = 0; y < m.output.size(); ++y)
    if (!pin(m.leg_out.apply_index(y), n.leg_out.apply_index(y))) return false;
  return detail::iso_extends(m, n, phi, used, 0);
}

}  // namespace qpath
