#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qpath/error.hpp"
#include "qpath/quantale.hpp"
#include "qpath/vertex_set.hpp"

namespace qpath {

namespace detail {
// std::vector<bool> packs bits and cannot hand out references; store bytes.
template <typename T>
struct cell_storage {
  using type = T;
};
template <>
struct cell_storage<bool> {
  using type = unsigned char;
};
}  // namespace detail

// A rectangular matrix of quantale values over two labeled vertex sets,
// stored dense row-major. Immutable once built up; all operations return
// fresh values.
template <Quantale Q>
class RMatrix {
 public:
  using value_type = typename Q::value_type;

  RMatrix() = default;
  RMatrix(Q q, VertexSet rows, VertexSet cols)
      : q_(std::move(q)), rows_(std::move(rows)), cols_(std::move(cols)),
        entries_(rows_.size() * cols_.size(),
                 static_cast<storage_type>(q_.bottom())) {}

  static RMatrix identity(const Q& q, const VertexSet& x) {
    RMatrix m(q, x, x);
    for (std::size_t i = 0; i < x.size(); ++i) m.set(i, i, q.unit());
    return m;
  }
  static RMatrix zero(const Q& q, const VertexSet& rows,
                      const VertexSet& cols) {
    return RMatrix(q, rows, cols);
  }

  const Q& quantale() const { return q_; }
  const VertexSet& rows() const { return rows_; }
  const VertexSet& cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t n_rows() const { return rows_.size(); }
  std::size_t n_cols() const { return cols_.size(); }

  value_type at(std::size_t i, std::size_t j) const {
    return static_cast<value_type>(entries_[i * cols_.size() + j]);
  }
  value_type at(const std::string& r, const std::string& c) const {
    return at(rows_.index_of(r), cols_.index_of(c));
  }
  void set(std::size_t i, std::size_t j, value_type v) {
    entries_[i * cols_.size() + j] = static_cast<storage_type>(std::move(v));
  }
  void set(const std::string& r, const std::string& c, value_type v) {
    set(rows_.index_of(r), cols_.index_of(c), std::move(v));
  }
  // joins v into the cell
  void join_at(std::size_t i, std::size_t j, const value_type& v) {
    set(i, j, q_.join(at(i, j), v));
  }

  void check_entries() const {
    for (std::size_t i = 0; i < n_rows(); ++i)
      for (std::size_t j = 0; j < n_cols(); ++j)
        if (!q_.valid(at(i, j)))
          throw semantic_error("matrix entry is not a valid " + q_.tag() +
                               " value");
  }

 private:
  using storage_type = typename detail::cell_storage<value_type>::type;
  Q q_;
  VertexSet rows_, cols_;
  std::vector<storage_type> entries_;
};

namespace detail {
template <Quantale Q>
void require_same_instance(const RMatrix<Q>& a, const RMatrix<Q>& b,
                           const char* op) {
  if (!(a.quantale() == b.quantale()))
    throw instance_error(std::string(op) + ": quantale instances differ (" +
                         a.quantale().tag() + " vs " + b.quantale().tag() +
                         ")");
}
}  // namespace detail

// MN(i,k) = join over j of mul(M(i,j), N(j,k)).
template <Quantale Q>
RMatrix<Q> mat_mul(const RMatrix<Q>& m, const RMatrix<Q>& n) {
  detail::require_same_instance(m, n, "mat_mul");
  if (m.cols() != n.rows())
    throw semantic_error("mat_mul: inner vertex sets do not match");
  const Q& q = m.quantale();
  RMatrix<Q> out(q, m.rows(), n.cols());
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    for (std::size_t k = 0; k < n.n_cols(); ++k) {
      auto acc = q.bottom();
      for (std::size_t j = 0; j < m.n_cols(); ++j)
        acc = q.join(acc, q.mul(m.at(i, j), n.at(j, k)));
      out.set(i, k, std::move(acc));
    }
  return out;
}

template <Quantale Q>
RMatrix<Q> mat_join(const RMatrix<Q>& m, const RMatrix<Q>& n) {
  detail::require_same_instance(m, n, "mat_join");
  if (m.rows() != n.rows() || m.cols() != n.cols())
    throw semantic_error("mat_join: shapes differ");
  RMatrix<Q> out(m.quantale(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    for (std::size_t j = 0; j < m.n_cols(); ++j)
      out.set(i, j, m.quantale().join(m.at(i, j), n.at(i, j)));
  return out;
}

// Pointwise quantale order.
template <Quantale Q>
bool mat_leq(const RMatrix<Q>& m, const RMatrix<Q>& n) {
  detail::require_same_instance(m, n, "mat_leq");
  if (m.rows() != n.rows() || m.cols() != n.cols())
    throw semantic_error("mat_leq: shapes differ");
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    for (std::size_t j = 0; j < m.n_cols(); ++j)
      if (!m.quantale().leq(m.at(i, j), n.at(i, j))) return false;
  return true;
}

// Pointwise equality with the instance's tolerance.
template <Quantale Q>
bool mat_eq(const RMatrix<Q>& m, const RMatrix<Q>& n) {
  if (!(m.quantale() == n.quantale())) return false;
  if (m.rows() != n.rows() || m.cols() != n.cols()) return false;
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    for (std::size_t j = 0; j < m.n_cols(); ++j)
      if (!m.quantale().eq(m.at(i, j), n.at(i, j))) return false;
  return true;
}

template <Quantale Q>
RMatrix<Q> identity_matrix(const Q& q, const VertexSet& x) {
  return RMatrix<Q>::identity(q, x);
}
template <Quantale Q>
RMatrix<Q> zero_matrix(const Q& q, const VertexSet& rows,
                       const VertexSet& cols) {
  return RMatrix<Q>::zero(q, rows, cols);
}

// Rectangular pushforward along a pair of functions: the entry at (u,v) is
// the join of M over the preimage of (u,v); an empty preimage gives bottom.
template <Quantale Q>
RMatrix<Q> pushforward(const FiniteFunction& f_row, const FiniteFunction& f_col,
                       const RMatrix<Q>& m) {
  if (f_row.domain() != m.rows() || f_col.domain() != m.cols())
    throw semantic_error("pushforward: function domains do not match matrix");
  const Q& q = m.quantale();
  RMatrix<Q> out(q, f_row.codomain(), f_col.codomain());
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    for (std::size_t j = 0; j < m.n_cols(); ++j) {
      out.join_at(f_row.apply_index(i), f_col.apply_index(j), m.at(i, j));
    }
  return out;
}

// Square pushforward along a single function.
template <Quantale Q>
RMatrix<Q> pushforward(const FiniteFunction& f, const RMatrix<Q>& m) {
  if (!m.is_square())
    throw semantic_error("pushforward: matrix must be square");
  return pushforward(f, f, m);
}

// Restriction along a pair of functions: N(x,y) = M(f(x), g(y)). Rows and
// columns are duplicated when the functions are not injective.
template <Quantale Q>
RMatrix<Q> restrict_along(const FiniteFunction& f, const FiniteFunction& g,
                          const RMatrix<Q>& m) {
  if (f.codomain() != m.rows() || g.codomain() != m.cols())
    throw semantic_error("restrict_along: codomains do not match matrix");
  RMatrix<Q> out(m.quantale(), f.domain(), g.domain());
  for (std::size_t i = 0; i < f.domain().size(); ++i)
    for (std::size_t j = 0; j < g.domain().size(); ++j)
      out.set(i, j, m.at(f.apply_index(i), g.apply_index(j)));
  return out;
}

template <Quantale Q>
RMatrix<Q> matrix_power(const RMatrix<Q>& m, std::size_t n) {
  if (!m.is_square()) throw semantic_error("matrix_power: square input required");
  auto acc = RMatrix<Q>::identity(m.quantale(), m.rows());
  for (std::size_t i = 0; i < n; ++i) acc = mat_mul(acc, m);
  return acc;
}

// Truncated series join of M^0..M^K.
template <Quantale Q>
RMatrix<Q> closure_series(const RMatrix<Q>& m, std::size_t k) {
  if (!m.is_square())
    throw semantic_error("closure_series: square input required");
  auto power = RMatrix<Q>::identity(m.quantale(), m.rows());
  auto acc = power;
  for (std::size_t n = 1; n <= k; ++n) {
    power = mat_mul(power, m);
    acc = mat_join(acc, power);
  }
  return acc;
}

// Series joined until two consecutive partial sums agree. Returns the stable
// value and the first K at which it was reached.
template <Quantale Q>
std::pair<RMatrix<Q>, std::size_t> closure_series_stabilized(
    const RMatrix<Q>& m, std::size_t max_k = 4096) {
  if (!m.is_square())
    throw semantic_error("closure_series: square input required");
  auto power = RMatrix<Q>::identity(m.quantale(), m.rows());
  auto acc = power;
  for (std::size_t n = 1; n <= max_k; ++n) {
    power = mat_mul(power, m);
    auto next = mat_join(acc, power);
    if (mat_eq(next, acc)) return {acc, n - 1};
    acc = std::move(next);
  }
  throw convergence_error("closure_series did not stabilize",
                          static_cast<int>(max_k));
}

// Gauss-Jordan style elimination with a local star at the pivot: after
// processing pivot k, entry (i,j) joins over all nontrivial paths whose
// intermediate vertices lie in {0..k}. Joining the identity at the end adds
// the empty paths. Pivots run in canonical label order; join-commutativity
// makes the result order-independent.
template <Quantale Q>
RMatrix<Q> closure_fw(const RMatrix<Q>& m) {
  if (!m.is_square()) throw semantic_error("closure_fw: square input required");
  const Q& q = m.quantale();
  const std::size_t n = m.n_rows();
  RMatrix<Q> cur = m;
  for (std::size_t k = 0; k < n; ++k) {
    const RMatrix<Q> prev = cur;
    const auto pivot_star = q.star(prev.at(k, k));
    for (std::size_t i = 0; i < n; ++i) {
      if (q.eq(prev.at(i, k), q.bottom())) continue;
      const auto through = q.mul(prev.at(i, k), pivot_star);
      for (std::size_t j = 0; j < n; ++j)
        cur.set(i, j, q.join(prev.at(i, j), q.mul(through, prev.at(k, j))));
    }
  }
  return mat_join(RMatrix<Q>::identity(q, m.rows()), cur);
}

// Repeated squaring of join(1, M) until it is a fixed point.
template <Quantale Q>
RMatrix<Q> closure_fix(const RMatrix<Q>& m, int max_iters = 64) {
  if (!m.is_square()) throw semantic_error("closure_fix: square input required");
  auto p = mat_join(RMatrix<Q>::identity(m.quantale(), m.rows()), m);
  for (int i = 0; i < max_iters; ++i) {
    auto next = mat_mul(p, p);
    if (mat_eq(next, p)) return p;
    p = std::move(next);
  }
  throw convergence_error("closure_fix did not reach a fixed point",
                          max_iters);
}

// Identity law 1_X <= M and composition law M*M <= M, read matrix-wise.
template <Quantale Q>
bool is_rcategory(const RMatrix<Q>& m) {
  if (!m.is_square()) return false;
  if (!mat_leq(RMatrix<Q>::identity(m.quantale(), m.rows()), m)) return false;
  return mat_leq(mat_mul(m, m), m);
}

}  // namespace qpath
