#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "qpath/cospan.hpp"
#include "qpath/error.hpp"
#include "qpath/matrix.hpp"
#include "qpath/quantale.hpp"

namespace qpath {

enum class ClosureAlgo { fw, series, square };

template <Quantale Q>
RMatrix<Q> closure_with(ClosureAlgo algo, const RMatrix<Q>& m) {
  switch (algo) {
    case ClosureAlgo::fw:
      return closure_fw(m);
    case ClosureAlgo::series:
      return closure_series_stabilized(m).first;
    case ClosureAlgo::square:
      return closure_fix(m);
  }
  throw semantic_error("unknown closure algorithm");
}

// Boundary-to-boundary restriction of the apex: B(x,y) = M(in(x), out(y)).
template <Quantale Q>
RMatrix<Q> blackbox(const OpenMatrix<Q>& m) {
  return restrict_along(m.leg_in, m.leg_out, m.mat);
}

// Solves the algebraic path problem on the apex, keeping the boundaries.
template <Quantale Q>
OpenMatrix<Q> star_open(const OpenMatrix<Q>& m,
                        ClosureAlgo algo = ClosureAlgo::fw) {
  OpenMatrix<Q> out = m;
  out.mat = closure_with(algo, m.mat);
  return out;
}

// Inputs must be sources (all-bottom column) and outputs sinks (all-bottom
// row).
template <Quantale Q>
bool is_functional(const OpenMatrix<Q>& m) {
  const Q& q = m.quantale();
  const std::size_t n = m.carrier().size();
  for (std::size_t x = 0; x < m.input.size(); ++x) {
    const std::size_t v = m.leg_in.apply_index(x);
    for (std::size_t i = 0; i < n; ++i)
      if (!q.eq(m.mat.at(i, v), q.bottom())) return false;
  }
  for (std::size_t y = 0; y < m.output.size(); ++y) {
    const std::size_t v = m.leg_out.apply_index(y);
    for (std::size_t j = 0; j < n; ++j)
      if (!q.eq(m.mat.at(v, j), q.bottom())) return false;
  }
  return true;
}

// A gluing plan: leaves are open matrices, internal nodes compose in series
// or tensor in parallel.
template <Quantale Q>
class CompositionExpr {
 public:
  enum class Op { leaf, compose, tensor };

  static CompositionExpr leaf(OpenMatrix<Q> m) {
    CompositionExpr e;
    e.op_ = Op::leaf;
    e.leaf_ = std::make_unique<OpenMatrix<Q>>(std::move(m));
    return e;
  }
  static CompositionExpr compose(CompositionExpr l, CompositionExpr r) {
    return node(Op::compose, std::move(l), std::move(r));
  }
  static CompositionExpr tensor(CompositionExpr l, CompositionExpr r) {
    return node(Op::tensor, std::move(l), std::move(r));
  }

  Op op() const { return op_; }
  const OpenMatrix<Q>& leaf_value() const { return *leaf_; }
  const CompositionExpr& left() const { return *left_; }
  const CompositionExpr& right() const { return *right_; }

 private:
  static CompositionExpr node(Op op, CompositionExpr l, CompositionExpr r) {
    CompositionExpr e;
    e.op_ = op;
    e.left_ = std::make_unique<CompositionExpr>(std::move(l));
    e.right_ = std::make_unique<CompositionExpr>(std::move(r));
    return e;
  }
  Op op_ = Op::leaf;
  std::unique_ptr<OpenMatrix<Q>> leaf_;
  std::unique_ptr<CompositionExpr> left_, right_;
};

// Glues the whole expression without solving anything.
template <Quantale Q>
OpenMatrix<Q> eval_open(const CompositionExpr<Q>& e) {
  switch (e.op()) {
    case CompositionExpr<Q>::Op::leaf:
      return e.leaf_value();
    case CompositionExpr<Q>::Op::compose:
      return compose_open(eval_open(e.left()), eval_open(e.right()));
    case CompositionExpr<Q>::Op::tensor:
      return tensor_open(eval_open(e.left()), eval_open(e.right()));
  }
  throw semantic_error("malformed expression");
}

// True when every leaf is functional. Functional open matrices are closed
// under composition and tensor, so this certifies the strict shortcut at
// every compose node of the subtree.
template <Quantale Q>
bool subtree_functional(const CompositionExpr<Q>& e) {
  if (e.op() == CompositionExpr<Q>::Op::leaf)
    return is_functional(e.leaf_value());
  return subtree_functional(e.left()) && subtree_functional(e.right());
}

enum class SolveMode { automatic, glued, compositional };

namespace detail {

// Block matrix with bottom off-blocks; boundary labels match tensor_open.
template <Quantale Q>
RMatrix<Q> block_diag_rect(const RMatrix<Q>& a, const RMatrix<Q>& b) {
  const Q& q = a.quantale();
  DisjointUnion rows = disjoint_union(a.rows(), b.rows());
  DisjointUnion cols = disjoint_union(a.cols(), b.cols());
  RMatrix<Q> out(q, rows.labels, cols.labels);
  for (std::size_t i = 0; i < a.n_rows(); ++i)
    for (std::size_t j = 0; j < a.n_cols(); ++j)
      out.set(rows.left.apply_index(i), cols.left.apply_index(j), a.at(i, j));
  for (std::size_t i = 0; i < b.n_rows(); ++i)
    for (std::size_t j = 0; j < b.n_cols(); ++j)
      out.set(rows.right.apply_index(i), cols.right.apply_index(j),
              b.at(i, j));
  return out;
}

template <Quantale Q>
RMatrix<Q> solve_rec(const CompositionExpr<Q>& e, SolveMode mode,
                     ClosureAlgo algo) {
  using Op = typename CompositionExpr<Q>::Op;
  switch (e.op()) {
    case Op::leaf:
      return blackbox(star_open(e.leaf_value(), algo));
    case Op::tensor:
      // black-boxing commutes with parallel composition unconditionally
      return block_diag_rect(solve_rec(e.left(), mode, algo),
                             solve_rec(e.right(), mode, algo));
    case Op::compose: {
      if (subtree_functional(e.left()) && subtree_functional(e.right()))
        return mat_mul(solve_rec(e.left(), mode, algo),
                       solve_rec(e.right(), mode, algo));
      if (mode == SolveMode::compositional)
        throw semantic_error(
            "compositional mode requires functional open matrices at every "
            "compose node");
      // degrade this subtree only: glue it and solve monolithically
      return blackbox(star_open(eval_open(e), algo));
    }
  }
  throw semantic_error("malformed expression");
}

}  // namespace detail

// Black-boxed solution of the fully glued network. The compositional fast
// path multiplies per-leaf black-boxed solutions and never materializes the
// glued matrix; it is taken exactly where the leaves are functional.
template <Quantale Q>
RMatrix<Q> solve_compositional(const CompositionExpr<Q>& e,
                               SolveMode mode = SolveMode::automatic,
                               ClosureAlgo algo = ClosureAlgo::fw) {
  if (mode == SolveMode::glued)
    return blackbox(star_open(eval_open(e), algo));
  return detail::solve_rec(e, mode, algo);
}

// Lax comparison: the product of solved black-boxes never exceeds the
// black-box of the solved composite.
template <Quantale Q>
bool check_lax(const OpenMatrix<Q>& m, const OpenMatrix<Q>& n,
               ClosureAlgo algo = ClosureAlgo::fw) {
  RMatrix<Q> lhs = mat_mul(blackbox(star_open(m, algo)),
                           blackbox(star_open(n, algo)));
  RMatrix<Q> rhs = blackbox(star_open(compose_open(m, n), algo));
  return mat_leq(lhs, rhs);
}

// Both sides of the binomial identity for the n-th power of a glued apex:
// left, the black-box of (a*(M) + b*(N))^n; right, the join over i+j=n of
// black-boxed i-th and j-th powers of the pushed-forward components.
template <Quantale Q>
std::pair<RMatrix<Q>, RMatrix<Q>> binomial_sides(const OpenMatrix<Q>& m,
                                                 const OpenMatrix<Q>& n,
                                                 std::size_t power) {
  if (!is_functional(m) || !is_functional(n))
    throw semantic_error("binomial_sides requires functional open matrices");
  OpenComposeResult<Q> full = compose_open_full(m, n);
  const OpenMatrix<Q>& comp = full.composite;
  const Q& q = m.quantale();

  RMatrix<Q> lhs = restrict_along(comp.leg_in, comp.leg_out,
                                  matrix_power(comp.mat, power));

  RMatrix<Q> pm = pushforward(full.left_map, m.mat);
  RMatrix<Q> pn = pushforward(full.right_map, n.mat);
  FiniteFunction leg_y = compose(full.left_map, m.leg_out);

  RMatrix<Q> rhs(q, comp.input, comp.output);
  for (std::size_t i = 0; i <= power; ++i) {
    const std::size_t j = power - i;
    RMatrix<Q> left_part =
        restrict_along(comp.leg_in, leg_y, matrix_power(pm, i));
    RMatrix<Q> right_part =
        restrict_along(leg_y, comp.leg_out, matrix_power(pn, j));
    rhs = mat_join(rhs, mat_mul(left_part, right_part));
  }
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace qpath
