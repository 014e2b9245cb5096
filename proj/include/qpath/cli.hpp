#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qpath/error.hpp"
#include "qpath/io.hpp"
#include "qpath/pathsolve.hpp"

namespace qpath::cli {

// Exit codes: 0 ok, 1 usage, 2 parse, 3 semantic, 4 non-convergence.
enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kSemantic = 3, kDiverge = 4 };

struct RunConfig {
  std::string command;               // solve, compose, tensor, ...
  std::vector<std::string> inputs;   // input file paths
  std::string output;                // output file path, empty for stdout only
  ClosureAlgo algo = ClosureAlgo::fw;
  SolveMode mode = SolveMode::automatic;
  bool check_oracle = false;
  bool raw = false;                  // blackbox: skip solving
  long long bound = -1;              // K for truncated path semantics
  long long length = -1;             // exact path length filter
  long long depth = -1;
  long long cap = -1;
  long long binomial_n = 6;
  std::string expr_path;             // solve: expression file
  std::string to_kind;               // net translate target
  std::string marking_json;          // inline JSON marking
  std::string transition;
  std::string from_filter, to_filter;
};

inline int log_level() {
  const char* env = std::getenv("QPATH_LOG");
  if (!env) return 1;
  std::string s = env;
  if (s == "debug") return 3;
  if (s == "info") return 2;
  if (s == "warn") return 1;
  return 0;
}

inline void log_info(std::ostream& err, const std::string& msg) {
  if (log_level() >= 2) err << "info: " << msg << "\n";
}

inline ClosureAlgo parse_algo(const std::string& s) {
  if (s == "fw") return ClosureAlgo::fw;
  if (s == "series") return ClosureAlgo::series;
  if (s == "square") return ClosureAlgo::square;
  throw semantic_error("unknown algorithm '" + s + "' (fw|series|square)");
}
inline SolveMode parse_mode(const std::string& s) {
  if (s == "auto") return SolveMode::automatic;
  if (s == "glued") return SolveMode::glued;
  if (s == "compositional") return SolveMode::compositional;
  throw semantic_error("unknown mode '" + s + "' (auto|glued|compositional)");
}

namespace detail {

inline void emit(const RunConfig& cfg, const io::json& j) {
  if (!cfg.output.empty()) io::write_file(cfg.output, io::dump(j));
}

inline bool require_inputs(const RunConfig& cfg, std::size_t n,
                           std::ostream& err) {
  if (cfg.inputs.size() == n) return true;
  err << "error: '" << cfg.command << "' expects " << n << " input file"
      << (n == 1 ? "" : "s") << "\n";
  return false;
}

inline Graph load_graph_any(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".dot")
    return io::graph_from_dot(io::read_file(path));
  return io::graph_from_json(io::load_json_file(path));
}

inline OpenGraph load_open_graph_any(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".dot") {
    Graph g = io::graph_from_dot(io::read_file(path));
    VertexSet none;
    return OpenGraph{none, none, FiniteFunction::inclusion(none, g.vertices()),
                     FiniteFunction::inclusion(none, g.vertices()),
                     std::move(g)};
  }
  return io::open_graph_from_json(io::load_json_file(path));
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out,
                     std::ostream& err) {
  std::string input = cfg.expr_path;
  if (input.empty()) {
    if (!require_inputs(cfg, 1, err)) return kUsage;
    input = cfg.inputs[0];
  }
  io::json j = io::load_json_file(input);
  if (!cfg.expr_path.empty() && !j.contains("op"))
    throw parse_error("--expr expects an expression file");
  if (j.contains("op")) {
    io::ExprSpec spec = io::expr_spec_from_json(j);
    std::filesystem::path base = std::filesystem::path(input).parent_path();
    io::json first =
        io::load_json_file((std::filesystem::path(io::first_leaf_path(spec))
                                    .is_relative()
                                ? base / io::first_leaf_path(spec)
                                : std::filesystem::path(
                                      io::first_leaf_path(spec)))
                               .string());
    return std::visit(
        [&](const auto& q) {
          using Q = std::decay_t<decltype(q)>;
          auto expr = io::build_expr<Q>(spec, base);
          RMatrix<Q> solution = solve_compositional(expr, cfg.mode, cfg.algo);
          if (cfg.check_oracle) {
            OpenMatrix<Q> glued = eval_open(expr);
            RMatrix<Q> oracle = restrict_along(
                glued.leg_in, glued.leg_out,
                closure_series_stabilized(glued.mat).first);
            if (!mat_eq(solution, oracle))
              throw semantic_error("solver disagrees with the series oracle");
            log_info(err, "series oracle agrees");
          }
          emit(cfg, io::matrix_to_json(solution));
          out << io::matrix_to_table(solution);
          return kOk;
        },
        io::quantale_of_json(first));
  }
  return std::visit(
      [&](auto m) {
        auto closed = closure_with(cfg.algo, m);
        if (cfg.check_oracle) {
          auto oracle = closure_series_stabilized(m).first;
          if (!mat_eq(closed, oracle))
            throw semantic_error("solver disagrees with the series oracle");
          log_info(err, "series oracle agrees");
        }
        emit(cfg, io::matrix_to_json(closed));
        out << io::matrix_to_table(closed);
        return kOk;
      },
      io::matrix_from_json(j));
}

inline int cmd_compose(const RunConfig& cfg, std::ostream& out,
                       std::ostream& err, bool tensor) {
  if (!require_inputs(cfg, 2, err)) return kUsage;
  io::json ja = io::load_json_file(cfg.inputs[0]);
  io::json jb = io::load_json_file(cfg.inputs[1]);
  return std::visit(
      [&](const auto& q) {
        using Q = std::decay_t<decltype(q)>;
        auto qb = io::quantale_of_json(jb);
        auto* same = std::get_if<Q>(&qb);
        if (!same)
          throw instance_error("inputs use different quantale instances (" +
                               q.tag() + " vs " + quantale_tag(qb) + ")");
        auto a = io::open_matrix_from_json_as(q, ja);
        auto b = io::open_matrix_from_json_as(*same, jb);
        auto c = tensor ? tensor_open(a, b) : compose_open(a, b);
        emit(cfg, io::open_matrix_to_json(c));
        out << (tensor ? "tensor" : "composite") << " carrier:";
        for (const auto& l : c.carrier().labels()) out << " " << l;
        out << "\n" << io::matrix_to_table(c.mat);
        return kOk;
      },
      io::quantale_of_json(ja));
}

inline int cmd_blackbox(const RunConfig& cfg, std::ostream& out,
                        std::ostream& err) {
  if (!require_inputs(cfg, 1, err)) return kUsage;
  io::json j = io::load_json_file(cfg.inputs[0]);
  return std::visit(
      [&](auto m) {
        auto boxed = cfg.raw ? blackbox(m) : blackbox(star_open(m, cfg.algo));
        emit(cfg, io::matrix_to_json(boxed));
        out << io::matrix_to_table(boxed);
        return kOk;
      },
      io::open_matrix_from_json(j));
}

inline int cmd_check_functional(const RunConfig& cfg, std::ostream& out,
                                std::ostream& err) {
  if (!require_inputs(cfg, 1, err)) return kUsage;
  io::json j = io::load_json_file(cfg.inputs[0]);
  bool functional = false;
  if (j.contains("entries")) {
    functional = std::visit([](const auto& m) { return is_functional(m); },
                            io::open_matrix_from_json(j));
  } else if (j.contains("edges")) {
    functional = is_functional_graph(io::open_graph_from_json(j));
  } else if (j.contains("transitions")) {
    functional = is_functional_net(io::open_net_from_json(j));
  } else {
    throw parse_error("cannot tell what kind of open network this file is");
  }
  out << "functional: " << (functional ? "true" : "false") << "\n";
  return kOk;
}

inline int cmd_binomial_check(const RunConfig& cfg, std::ostream& out,
                              std::ostream& err) {
  if (!require_inputs(cfg, 2, err)) return kUsage;
  io::json ja = io::load_json_file(cfg.inputs[0]);
  io::json jb = io::load_json_file(cfg.inputs[1]);
  return std::visit(
      [&](const auto& q) {
        using Q = std::decay_t<decltype(q)>;
        auto qb = io::quantale_of_json(jb);
        auto* same = std::get_if<Q>(&qb);
        if (!same)
          throw instance_error("inputs use different quantale instances (" +
                               q.tag() + " vs " + quantale_tag(qb) + ")");
        auto a = io::open_matrix_from_json_as(q, ja);
        auto b = io::open_matrix_from_json_as(*same, jb);
        bool all_equal = true;
        for (long long n = 0; n <= cfg.binomial_n; ++n) {
          auto [lhs, rhs] = binomial_sides(a, b, static_cast<std::size_t>(n));
          bool equal = mat_eq(lhs, rhs);
          all_equal = all_equal && equal;
          out << "n=" << n << ": " << (equal ? "equal" : "DIFFER") << "\n";
        }
        return all_equal ? kOk : kSemantic;
      },
      io::quantale_of_json(ja));
}

inline int cmd_graph_paths(const RunConfig& cfg, std::ostream& out,
                           std::ostream& err) {
  if (!require_inputs(cfg, 1, err)) return kUsage;
  Graph g = load_graph_any(cfg.inputs[0]);
  PathTable table;
  if (cfg.length >= 0) {
    table = paths_of_length(g, static_cast<std::size_t>(cfg.length));
  } else {
    if (cfg.bound < 0) {
      err << "error: graph paths needs --length or --max-length\n";
      return kUsage;
    }
    table = free_category(g, static_cast<std::size_t>(cfg.bound));
  }
  emit(cfg, io::path_table_to_json(table));
  for (const auto& u : table.rows().labels())
    for (const auto& v : table.cols().labels()) {
      if (!cfg.from_filter.empty() && u != cfg.from_filter) continue;
      if (!cfg.to_filter.empty() && v != cfg.to_filter) continue;
      const auto& cell = table.at(u, v);
      if (cell.empty()) continue;
      out << u << " -> " << v << ": " << cell.size() << " path"
          << (cell.size() == 1 ? "" : "s") << "\n";
      for (const auto& p : cell) {
        out << "  [";
        for (std::size_t i = 0; i < p.edge_ids.size(); ++i)
          out << (i ? " " : "") << p.edge_ids[i];
        out << "]\n";
      }
    }
  return kOk;
}

inline int cmd_graph_blackbox(const RunConfig& cfg, std::ostream& out,
                              std::ostream& err) {
  if (!require_inputs(cfg, 1, err)) return kUsage;
  if (cfg.bound < 0) {
    err << "error: graph blackbox needs --max-length\n";
    return kUsage;
  }
  OpenGraph g = load_open_graph_any(cfg.inputs[0]);
  PathTable table = blackbox_graph(g, static_cast<std::size_t>(cfg.bound));
  emit(cfg, io::path_table_to_json(table));
  for (const auto& x : table.rows().labels())
    for (const auto& y : table.cols().labels())
      out << x << " -> " << y << ": " << table.count(x, y) << "\n";
  return kOk;
}

inline int cmd_net(const RunConfig& cfg, const std::string& sub,
                   std::ostream& out, std::ostream& err) {
  if (sub == "compose") {
    if (!require_inputs(cfg, 2, err)) return kUsage;
    OpenNet p = io::open_net_from_json(io::load_json_file(cfg.inputs[0]));
    OpenNet q = io::open_net_from_json(io::load_json_file(cfg.inputs[1]));
    OpenNet c = compose_open_net(p, q);
    emit(cfg, io::open_net_to_json(c));
    out << "composite places:";
    for (const auto& l : c.net.places.labels()) out << " " << l;
    out << "\n";
    return kOk;
  }
  if (!require_inputs(cfg, 1, err)) return kUsage;
  io::json j = io::load_json_file(cfg.inputs[0]);

  if (sub == "translate") {
    if (cfg.to_kind.empty()) {
      err << "error: net translate needs --to\n";
      return kUsage;
    }
    QNet translated =
        io::json_is_prenet(j)
            ? [&] {
                if (cfg.to_kind != "natural")
                  throw semantic_error(
                      "pre-nets only translate to natural (abelianization)");
                return abelianize(io::prenet_from_json(j));
              }()
            : translate_net(io::net_from_json(j),
                            ResourceKind::parse(cfg.to_kind));
    emit(cfg, io::net_to_json(translated));
    out << "kind: " << translated.kind.to_string() << "\n";
    return kOk;
  }
  if (sub == "fire") {
    QNet net = io::net_from_json(j);
    net.validate();
    if (cfg.transition.empty()) {
      err << "error: net fire needs --transition\n";
      return kUsage;
    }
    Marking m = io::marking_from_json(
        io::parse_json(cfg.marking_json, "--marking"));
    auto results = fire(net, m, cfg.transition);
    io::json arr = io::json::array();
    for (const auto& r : results) arr.push_back(io::marking_to_json(r));
    emit(cfg, arr);
    if (results.empty()) out << "not enabled\n";
    for (const auto& r : results) out << r.to_string() << "\n";
    return kOk;
  }
  if (sub == "reach") {
    QNet net = io::net_from_json(j);
    if (cfg.depth < 0 || cfg.cap < 0) {
      err << "error: net reach needs --depth and --cap\n";
      return kUsage;
    }
    Marking m = io::marking_from_json(
        io::parse_json(cfg.marking_json, "--marking"));
    ReachResult r = reachable(net, m, static_cast<std::size_t>(cfg.depth),
                              cfg.cap);
    io::json jr = io::json::object();
    jr["pruned"] = r.pruned;
    io::json arr = io::json::array();
    for (const auto& e : r.markings) {
      io::json ej = io::json::object();
      ej["marking"] = io::marking_to_json(e.marking);
      ej["depth"] = e.depth;
      io::json steps = io::json::array();
      for (const auto& s : e.witness.steps) steps.push_back(s.transition);
      ej["witness"] = std::move(steps);
      arr.push_back(std::move(ej));
    }
    jr["markings"] = std::move(arr);
    emit(cfg, jr);
    for (const auto& e : r.markings)
      out << e.depth << ": " << e.marking.to_string() << "\n";
    if (r.pruned) out << "(some markings were pruned at the coefficient cap)\n";
    return kOk;
  }
  if (sub == "blackbox") {
    OpenNet p = io::open_net_from_json(j);
    if (cfg.depth < 0 || cfg.cap < 0) {
      err << "error: net blackbox needs --depth and --cap\n";
      return kUsage;
    }
    BoundaryRelation rel =
        blackbox_reach(p, cfg.cap, static_cast<std::size_t>(cfg.depth));
    emit(cfg, io::relation_to_json(rel));
    for (const auto& e : rel.entries)
      out << e.from.to_string() << " => " << e.to.to_string() << "  ["
          << e.total() << " witness" << (e.total() == 1 ? "" : "es") << "]\n";
    return kOk;
  }
  throw semantic_error("unknown net subcommand '" + sub + "'");
}

inline int cmd_export_dot(const RunConfig& cfg, std::ostream& out,
                          std::ostream& err) {
  if (!require_inputs(cfg, 1, err)) return kUsage;
  io::json j = io::load_json_file(cfg.inputs[0]);
  std::string dot;
  if (j.contains("entries")) {
    dot = std::visit([](const auto& m) { return io::matrix_to_dot(m); },
                     io::matrix_from_json(j));
  } else if (j.contains("edges") || j.contains("vertices")) {
    dot = io::graph_to_dot(io::graph_from_json(j));
  } else {
    throw parse_error("export-dot: expected a matrix or graph file");
  }
  if (!cfg.output.empty())
    io::write_file(cfg.output, dot);
  else
    out << dot;
  return kOk;
}

}  // namespace detail

// Dispatches a parsed invocation; exceptions map to documented exit codes.
inline int run(const RunConfig& cfg, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  try {
    const std::string& c = cfg.command;
    if (c == "solve") return detail::cmd_solve(cfg, out, err);
    if (c == "compose") return detail::cmd_compose(cfg, out, err, false);
    if (c == "tensor") return detail::cmd_compose(cfg, out, err, true);
    if (c == "blackbox") return detail::cmd_blackbox(cfg, out, err);
    if (c == "check-functional")
      return detail::cmd_check_functional(cfg, out, err);
    if (c == "binomial-check") return detail::cmd_binomial_check(cfg, out, err);
    if (c == "graph-paths") return detail::cmd_graph_paths(cfg, out, err);
    if (c == "graph-blackbox") return detail::cmd_graph_blackbox(cfg, out, err);
    if (c.rfind("net-", 0) == 0)
      return detail::cmd_net(cfg, c.substr(4), out, err);
    if (c == "export-dot") return detail::cmd_export_dot(cfg, out, err);
    err << "error: unknown command '" << c << "'\n";
    return kUsage;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const convergence_error& e) {
    err << "did not converge: " << e.what() << "\n";
    return kDiverge;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return kSemantic;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  }
}

}  // namespace qpath::cli
