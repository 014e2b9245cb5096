#pragma once

// Shared test utilities: a seeded RNG (override with QPATH_SEED) and random
// generators for matrices, open matrices, graphs and nets.
//
// Numeric weights are drawn from small dyadic grids (eighths, quarter steps)
// so that sums and products of test size are exact in double precision and
// algorithm comparisons can assert bitwise equality.

#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qpath/cospan.hpp"
#include "qpath/graph.hpp"
#include "qpath/matrix.hpp"
#include "qpath/qnet.hpp"
#include "qpath/quantale.hpp"

namespace qtest {

using namespace qpath;

inline std::uint64_t seed_from_env(std::uint64_t fallback = 0xC0FFEEULL) {
  const char* env = std::getenv("QPATH_SEED");
  if (!env) return fallback;
  return std::strtoull(env, nullptr, 10);
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed = seed_from_env()) : eng(seed) {}
  // uniform integer in [lo, hi]
  long long pick(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(eng);
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(eng) < p;
  }
};

inline double random_value(const TropicalQuantale&, Rng& rng) {
  if (rng.chance(0.35)) return kInf;
  return static_cast<double>(rng.pick(0, 64)) / 8.0;
}
inline double random_value(const CapacityQuantale&, Rng& rng) {
  if (rng.chance(0.25)) return 0.0;
  if (rng.chance(0.15)) return kInf;
  return static_cast<double>(rng.pick(0, 64)) / 8.0;
}
inline double random_value(const ViterbiQuantale&, Rng& rng) {
  if (rng.chance(0.3)) return 0.0;
  return static_cast<double>(rng.pick(1, 4)) / 4.0;
}
inline bool random_value(const BooleanQuantale&, Rng& rng) {
  return rng.chance(0.4);
}
inline LanguageQuantale::value_type random_value(const LanguageQuantale& q,
                                                 Rng& rng) {
  LanguageQuantale::value_type words;
  std::vector<std::string> pool{""};
  for (char c : q.alphabet) pool.push_back(std::string(1, c));
  for (char c : q.alphabet)
    for (char d : q.alphabet)
      if (q.max_len >= 2 && c <= d) pool.push_back(std::string{c, d});
  for (const auto& w : pool)
    if (rng.chance(0.25)) words.insert(w);
  return words;
}

inline VertexSet numbered_labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(prefix + std::to_string(i));
  return VertexSet(std::move(labels));
}

template <Quantale Q>
RMatrix<Q> random_matrix(const Q& q, const VertexSet& rows,
                         const VertexSet& cols, Rng& rng) {
  RMatrix<Q> m(q, rows, cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m.set(i, j, random_value(q, rng));
  return m;
}

template <Quantale Q>
RMatrix<Q> random_square(const Q& q, std::size_t n, Rng& rng) {
  VertexSet v = numbered_labels("v", n);
  return random_matrix(q, v, v, rng);
}

inline FiniteFunction random_function(const VertexSet& dom,
                                      const VertexSet& cod, Rng& rng) {
  std::vector<std::size_t> table;
  for (std::size_t i = 0; i < dom.size(); ++i)
    table.push_back(static_cast<std::size_t>(
        rng.pick(0, static_cast<long long>(cod.size()) - 1)));
  return FiniteFunction(dom, cod, std::move(table));
}

// Open matrix with given boundary label sets and random legs/apex. When
// `functional`, input images get all-bottom columns and output images
// all-bottom rows.
template <Quantale Q>
OpenMatrix<Q> random_open(const Q& q, const VertexSet& input,
                          const VertexSet& output, const std::string& vprefix,
                          std::size_t carrier_size, Rng& rng,
                          bool functional) {
  VertexSet carrier = numbered_labels(vprefix, carrier_size);
  FiniteFunction leg_in = random_function(input, carrier, rng);
  FiniteFunction leg_out = random_function(output, carrier, rng);
  RMatrix<Q> mat = random_matrix(q, carrier, carrier, rng);
  if (functional) {
    for (std::size_t x = 0; x < input.size(); ++x)
      for (std::size_t i = 0; i < carrier_size; ++i)
        mat.set(i, leg_in.apply_index(x), q.bottom());
    for (std::size_t y = 0; y < output.size(); ++y)
      for (std::size_t j = 0; j < carrier_size; ++j)
        mat.set(leg_out.apply_index(y), j, q.bottom());
  }
  return OpenMatrix<Q>{input, output, std::move(leg_in), std::move(leg_out),
                       std::move(mat)};
}

// Composable pair M: X -> Y, N: Y -> Z over a shared boundary.
template <Quantale Q>
std::pair<OpenMatrix<Q>, OpenMatrix<Q>> random_composable_pair(
    const Q& q, Rng& rng, bool functional, std::size_t max_carrier = 5) {
  VertexSet x = numbered_labels("x", static_cast<std::size_t>(rng.pick(1, 2)));
  VertexSet y = numbered_labels("y", static_cast<std::size_t>(rng.pick(1, 2)));
  VertexSet z = numbered_labels("z", static_cast<std::size_t>(rng.pick(1, 2)));
  auto m = random_open(q, x, y, "m",
                       static_cast<std::size_t>(rng.pick(2, max_carrier)), rng,
                       functional);
  auto n = random_open(q, y, z, "n",
                       static_cast<std::size_t>(rng.pick(2, max_carrier)), rng,
                       functional);
  return {std::move(m), std::move(n)};
}

// Sparse variant: entries are present with probability `density` and never
// deliberately bottom. Sparse pairs over a 2..3-point boundary are where the
// lax comparison gets strict: the best glued route zig-zags while every
// staged route is missing an edge.
template <Quantale Q>
OpenMatrix<Q> random_open_sparse(const Q& q, const VertexSet& input,
                                 const VertexSet& output,
                                 const std::string& vprefix,
                                 std::size_t carrier_size, Rng& rng,
                                 double density) {
  VertexSet carrier = numbered_labels(vprefix, carrier_size);
  FiniteFunction leg_in = random_function(input, carrier, rng);
  FiniteFunction leg_out = random_function(output, carrier, rng);
  RMatrix<Q> mat(q, carrier, carrier);
  for (std::size_t i = 0; i < carrier_size; ++i)
    for (std::size_t j = 0; j < carrier_size; ++j) {
      if (!rng.chance(density)) continue;
      auto v = random_value(q, rng);
      if (q.eq(v, q.bottom())) v = random_value(q, rng);
      mat.set(i, j, v);
    }
  return OpenMatrix<Q>{input, output, std::move(leg_in), std::move(leg_out),
                       std::move(mat)};
}

template <Quantale Q>
std::pair<OpenMatrix<Q>, OpenMatrix<Q>> random_sparse_pair(const Q& q,
                                                           Rng& rng,
                                                           double density) {
  VertexSet x = numbered_labels("x", static_cast<std::size_t>(rng.pick(1, 2)));
  VertexSet y = numbered_labels("y", static_cast<std::size_t>(rng.pick(2, 3)));
  VertexSet z = numbered_labels("z", static_cast<std::size_t>(rng.pick(1, 2)));
  auto m = random_open_sparse(q, x, y, "m",
                              static_cast<std::size_t>(rng.pick(3, 5)), rng,
                              density);
  auto n = random_open_sparse(q, y, z, "n",
                              static_cast<std::size_t>(rng.pick(3, 5)), rng,
                              density);
  return {std::move(m), std::move(n)};
}

// ---- graphs ----------------------------------------------------------------

// Functional open graph: inputs keep empty in-neighborhoods, outputs empty
// out-neighborhoods. Boundary legs are injective.
inline OpenGraph random_functional_open_graph(const VertexSet& input,
                                              const VertexSet& output,
                                              const std::string& prefix,
                                              std::size_t n_vertices,
                                              std::size_t max_edges, Rng& rng,
                                              const std::string& edge_prefix) {
  std::size_t need = input.size() + output.size();
  if (n_vertices < need) n_vertices = need;
  VertexSet vertices = numbered_labels(prefix, n_vertices);
  // injective legs over distinct vertices: inputs first, then outputs
  std::vector<std::size_t> in_table, out_table;
  for (std::size_t i = 0; i < input.size(); ++i) in_table.push_back(i);
  for (std::size_t i = 0; i < output.size(); ++i)
    out_table.push_back(input.size() + i);
  std::vector<Edge> edges;
  std::size_t count = static_cast<std::size_t>(
      rng.pick(0, static_cast<long long>(max_edges)));
  for (std::size_t e = 0; e < count; ++e) {
    // sources anywhere except output images; targets anywhere except inputs
    std::size_t src = static_cast<std::size_t>(
        rng.pick(0, static_cast<long long>(n_vertices) - 1));
    if (src >= input.size() && src < need) continue;  // output image
    std::size_t tgt = static_cast<std::size_t>(
        rng.pick(static_cast<long long>(input.size()),
                 static_cast<long long>(n_vertices) - 1));
    edges.push_back(Edge{edge_prefix + std::to_string(e),
                         vertices.label(src), vertices.label(tgt)});
  }
  Graph g(vertices, std::move(edges));
  return OpenGraph{input, output,
                   FiniteFunction(input, vertices, std::move(in_table)),
                   FiniteFunction(output, vertices, std::move(out_table)),
                   std::move(g)};
}

// ---- nets ------------------------------------------------------------------

// Functional open net over natural resources with injective boundary legs.
inline OpenNet random_functional_open_net(const VertexSet& input,
                                          const VertexSet& output,
                                          const std::string& prefix,
                                          std::size_t n_places,
                                          std::size_t n_transitions, Rng& rng,
                                          const std::string& tid_prefix) {
  std::size_t need = input.size() + output.size();
  if (n_places < need) n_places = need;
  VertexSet places = numbered_labels(prefix, n_places);
  std::vector<std::size_t> in_table, out_table;
  for (std::size_t i = 0; i < input.size(); ++i) in_table.push_back(i);
  for (std::size_t i = 0; i < output.size(); ++i)
    out_table.push_back(input.size() + i);
  auto is_input = [&](std::size_t p) { return p < input.size(); };
  auto is_output = [&](std::size_t p) {
    return p >= input.size() && p < need;
  };
  std::vector<Transition> transitions;
  for (std::size_t t = 0; t < n_transitions; ++t) {
    Marking src, tgt;
    // consume from non-output places, produce into non-input places
    std::size_t n_src = static_cast<std::size_t>(rng.pick(1, 2));
    std::size_t n_tgt = static_cast<std::size_t>(rng.pick(1, 2));
    for (std::size_t i = 0; i < n_src; ++i) {
      std::size_t p = static_cast<std::size_t>(
          rng.pick(0, static_cast<long long>(n_places) - 1));
      if (is_output(p)) continue;
      src.set(places.label(p), src.get(places.label(p)) + 1);
    }
    for (std::size_t i = 0; i < n_tgt; ++i) {
      std::size_t p = static_cast<std::size_t>(
          rng.pick(0, static_cast<long long>(n_places) - 1));
      if (is_input(p)) continue;
      tgt.set(places.label(p), tgt.get(places.label(p)) + 1);
    }
    if (src.empty() && tgt.empty()) continue;
    transitions.push_back(
        Transition{tid_prefix + std::to_string(t), std::move(src),
                   std::move(tgt)});
  }
  QNet net{ResourceKind::natural(), places, std::move(transitions)};
  return OpenNet{input, output,
                 FiniteFunction(input, places, std::move(in_table)),
                 FiniteFunction(output, places, std::move(out_table)),
                 std::move(net)};
}

// ---- pushout universal property --------------------------------------------

// Every commuting cocone factors uniquely through the pushout. Joint
// surjectivity of the legs gives uniqueness; the factorization is forced on
// each class by any member, so it remains to check well-definedness.
inline bool pushout_universal_property_holds(const FiniteFunction& f,
                                             const FiniteFunction& g,
                                             const PushoutResult& po,
                                             std::size_t max_cocone_size) {
  const std::size_t na = f.codomain().size();
  const std::size_t nb = g.codomain().size();
  const std::size_t nq = po.quotient.size();
  std::vector<bool> hit(nq, false);
  for (std::size_t i = 0; i < na; ++i) hit[po.left_leg.apply_index(i)] = true;
  for (std::size_t i = 0; i < nb; ++i) hit[po.right_leg.apply_index(i)] = true;
  for (bool h : hit)
    if (!h) return false;
  for (std::size_t c = 1; c <= max_cocone_size; ++c) {
    std::vector<std::size_t> u(na, 0);
    auto advance = [c](std::vector<std::size_t>& t) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (++t[i] < c) return true;
        t[i] = 0;
      }
      return false;
    };
    bool more_u = true;
    while (more_u) {
      std::vector<std::size_t> v(nb, 0);
      bool more_v = true;
      while (more_v) {
        bool commutes = true;
        for (std::size_t zi = 0; zi < f.domain().size() && commutes; ++zi)
          commutes = u[f.apply_index(zi)] == v[g.apply_index(zi)];
        if (commutes) {
          std::vector<std::optional<std::size_t>> factor(nq);
          bool ok = true;
          for (std::size_t i = 0; i < na && ok; ++i) {
            auto& slot = factor[po.left_leg.apply_index(i)];
            if (slot && *slot != u[i]) ok = false;
            slot = u[i];
          }
          for (std::size_t i = 0; i < nb && ok; ++i) {
            auto& slot = factor[po.right_leg.apply_index(i)];
            if (slot && *slot != v[i]) ok = false;
            slot = v[i];
          }
          if (!ok) return false;
        }
        more_v = nb > 0 && advance(v);
        if (nb == 0) break;
      }
      more_u = na > 0 && advance(u);
      if (na == 0) break;
    }
  }
  return true;
}

// Exhaustive check over all apex/leg configurations with sets of size <= n.
inline bool pushout_universal_property_exhaustive(std::size_t n) {
  for (std::size_t nz = 0; nz <= n; ++nz)
    for (std::size_t na = 0; na <= n; ++na)
      for (std::size_t nb = 0; nb <= n; ++nb) {
        if ((na == 0 || nb == 0) && nz > 0) continue;  // no total legs exist
        VertexSet z = numbered_labels("z", nz);
        VertexSet a = numbered_labels("a", na);
        VertexSet b = numbered_labels("b", nb);
        std::vector<std::size_t> ft(nz, 0);
        auto advance = [](std::vector<std::size_t>& t, std::size_t base) {
          for (std::size_t i = 0; i < t.size(); ++i) {
            if (++t[i] < base) return true;
            t[i] = 0;
          }
          return false;
        };
        bool more_f = true;
        while (more_f) {
          std::vector<std::size_t> gt(nz, 0);
          bool more_g = true;
          while (more_g) {
            FiniteFunction f(z, a, std::vector<std::size_t>(ft));
            FiniteFunction g(z, b, std::vector<std::size_t>(gt));
            PushoutResult po = pushout(f, g);
            if (!pushout_universal_property_holds(f, g, po, n)) return false;
            more_g = nz > 0 && advance(gt, nb);
            if (nz == 0) break;
          }
          more_f = nz > 0 && advance(ft, na);
          if (nz == 0) break;
        }
      }
  return true;
}

}  // namespace qtest
