#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "qpath/cli.hpp"
#include "qpath/io.hpp"

using namespace qpath;

namespace {

const std::string kFixtures = QPATH_FIXTURE_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path((std::filesystem::temp_directory_path() /
              ("qpath_test_" + name)).string()) {}
  ~TempFile() { std::remove(path.c_str()); }
};

int run_cli(cli::RunConfig cfg, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(cfg, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST_CASE("matrix files round-trip") {
  for (const char* name : {"open_m.json", "open_n.json",
                           "composite_expected.json"}) {
    io::json j = io::load_json_file(fixture(name));
    auto any = io::open_matrix_from_json(j);
    std::visit(
        [&](const auto& m) {
          io::json back = io::open_matrix_to_json(m);
          auto again = io::open_matrix_from_json(back);
          auto* same = std::get_if<std::decay_t<decltype(m)>>(&again);
          REQUIRE(same != nullptr);
          CHECK(mat_eq(same->mat, m.mat));
          CHECK(same->input == m.input);
          CHECK(same->leg_in == m.leg_in);
          // serialization is stable
          CHECK(io::dump(io::open_matrix_to_json(*same)) == io::dump(back));
        },
        any);
  }
}

TEST_CASE("every shipped fixture survives a parse-serialize-parse trip") {
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".json") continue;
    io::json j = io::load_json_file(entry.path().string());
    io::json back;
    if (j.contains("op")) {
      continue;  // expression files reference other files, nothing to dump
    } else if (j.contains("entries")) {
      back = std::visit([](const auto& m) { return io::open_matrix_to_json(m); },
                        io::open_matrix_from_json(j));
      io::json twice =
          std::visit([](const auto& m) { return io::open_matrix_to_json(m); },
                     io::open_matrix_from_json(back));
      CHECK(io::dump(back) == io::dump(twice));
    } else if (j.contains("edges")) {
      back = io::open_graph_to_json(io::open_graph_from_json(j));
      CHECK(io::dump(back) ==
            io::dump(io::open_graph_to_json(io::open_graph_from_json(back))));
    } else if (j.contains("transitions")) {
      back = io::open_net_to_json(io::open_net_from_json(j));
      CHECK(io::dump(back) ==
            io::dump(io::open_net_to_json(io::open_net_from_json(back))));
    }
  }
}

TEST_CASE("weight literals") {
  TropicalQuantale t;
  CHECK(io::value_from_json(t, io::json("inf")) == kInf);
  CHECK(io::value_from_json(t, io::json(2.5)) == 2.5);
  CHECK_THROWS_AS(io::value_from_json(t, io::json("oops")), parse_error);
  CHECK_THROWS_AS(io::value_from_json(t, io::json(-1.0)), semantic_error);
  ViterbiQuantale v;
  CHECK_THROWS_AS(io::value_from_json(v, io::json(1.5)), semantic_error);
  BooleanQuantale b;
  CHECK(io::value_from_json(b, io::json(true)) == true);
  LanguageQuantale l("ab", 2);
  auto words = io::value_from_json(l, io::json::array({"ba", ""}));
  CHECK(words == LanguageQuantale::value_type{"", "ab"});  // normalized
  CHECK_THROWS_AS(io::value_from_json(l, io::json::array({"xyz"})),
                  semantic_error);
}

TEST_CASE("json parse errors carry line and column") {
  try {
    io::parse_json("{\n  \"a\": [1,\n", "test-input");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line >= 2);
    CHECK(std::string(e.what()).find("test-input") != std::string::npos);
  }
}

TEST_CASE("graph and net files round-trip") {
  OpenGraph g = io::open_graph_from_json(io::load_json_file(fixture("loop_g.json")));
  io::json back = io::open_graph_to_json(g);
  OpenGraph again = io::open_graph_from_json(back);
  CHECK(again.graph.vertices() == g.graph.vertices());
  CHECK(again.graph.edges() == g.graph.edges());
  CHECK(again.leg_in == g.leg_in);

  OpenNet n = io::open_net_from_json(io::load_json_file(fixture("open_p1.json")));
  io::json nback = io::open_net_to_json(n);
  OpenNet nagain = io::open_net_from_json(nback);
  CHECK(nagain.net.places == n.net.places);
  REQUIRE(nagain.net.transitions.size() == n.net.transitions.size());
  CHECK(nagain.net.transitions[0].src == n.net.transitions[0].src);
  CHECK(io::dump(io::open_net_to_json(nagain)) == io::dump(nback));
}

TEST_CASE("dot export of an edgeless graph is just the header and nodes") {
  Graph g(VertexSet{"a", "b"}, {});
  CHECK(io::graph_to_dot(g) == "digraph {\n  \"a\";\n  \"b\";\n}\n");
}

TEST_CASE("dot import reads node and edge statements") {
  Graph g(VertexSet{"u", "v", "w"},
          {Edge{"e0", "u", "v"}, Edge{"e1", "v", "w"}});
  Graph back = io::graph_from_dot(io::graph_to_dot(g));
  CHECK(back.vertices() == g.vertices());
  CHECK(back.edges() == g.edges());
  Graph minimal = io::graph_from_dot("digraph {\n a -> b;\n c;\n}\n");
  CHECK(minimal.vertices().labels() ==
        std::vector<std::string>{"a", "b", "c"});
  REQUIRE(minimal.edges().size() == 1);
  CHECK(minimal.edges()[0].src == "a");
}

TEST_CASE("compose command reproduces the frozen composite byte for byte") {
  TempFile out("composite.json");
  cli::RunConfig cfg;
  cfg.command = "compose";
  cfg.inputs = {fixture("open_m.json"), fixture("open_n.json")};
  cfg.output = out.path;
  CHECK(run_cli(cfg) == cli::kOk);
  CHECK(io::read_file(out.path) == io::read_file(fixture("composite_expected.json")));
  // determinism: a second run writes identical bytes
  CHECK(run_cli(cfg) == cli::kOk);
  CHECK(io::read_file(out.path) == io::read_file(fixture("composite_expected.json")));
}

TEST_CASE("solve on an already-closed matrix returns the same file") {
  TropicalQuantale q;
  VertexSet v{"a", "b"};
  auto closed = identity_matrix(q, v);
  TempFile in("identity.json"), out("identity_solved.json");
  io::write_file(in.path, io::dump(io::matrix_to_json(closed)));
  cli::RunConfig cfg;
  cfg.command = "solve";
  cfg.inputs = {in.path};
  cfg.output = out.path;
  cfg.check_oracle = true;
  CHECK(run_cli(cfg) == cli::kOk);
  CHECK(io::read_file(out.path) == io::read_file(in.path));
}

TEST_CASE("solve modes agree on the functional chain expression") {
  TempFile glued("chain_glued.json"), comp("chain_comp.json");
  cli::RunConfig cfg;
  cfg.command = "solve";
  cfg.inputs = {fixture("chain_expr.json")};
  cfg.mode = SolveMode::glued;
  cfg.output = glued.path;
  CHECK(run_cli(cfg) == cli::kOk);
  cfg.mode = SolveMode::compositional;
  cfg.output = comp.path;
  CHECK(run_cli(cfg) == cli::kOk);
  CHECK(io::read_file(glued.path) == io::read_file(comp.path));
  io::json j = io::load_json_file(comp.path);
  auto any = io::matrix_from_json(j);
  auto* m = std::get_if<RMatrix<TropicalQuantale>>(&any);
  REQUIRE(m != nullptr);
  CHECK(m->at("s", "t") == 7.0);  // 1.5 + 2 + 0.5 + 3
}

TEST_CASE("solve with the series and squaring algorithms") {
  for (ClosureAlgo algo : {ClosureAlgo::series, ClosureAlgo::square}) {
    TempFile out("algo.json");
    cli::RunConfig cfg;
    cfg.command = "solve";
    cfg.inputs = {fixture("composite_expected.json")};
    cfg.algo = algo;
    cfg.check_oracle = true;
    cfg.output = out.path;
    CHECK(run_cli(cfg) == cli::kOk);
    io::json j = io::load_json_file(out.path);
    auto any = io::matrix_from_json(j);
    auto* m = std::get_if<RMatrix<TropicalQuantale>>(&any);
    REQUIRE(m != nullptr);
    CHECK(m->at("a", "b") == 1.1);
  }
}

TEST_CASE("blackbox command on the worked example") {
  std::string text;
  cli::RunConfig cfg;
  cfg.command = "blackbox";
  cfg.inputs = {fixture("open_m.json")};
  cfg.raw = true;
  CHECK(run_cli(cfg, &text) == cli::kOk);
  CHECK(text.find("0.1") != std::string::npos);
  CHECK(text.find("0.2") != std::string::npos);
}

TEST_CASE("check-functional sniffs the file kind") {
  auto check = [&](const std::string& file, const std::string& expect) {
    std::string text;
    cli::RunConfig cfg;
    cfg.command = "check-functional";
    cfg.inputs = {fixture(file)};
    CHECK(run_cli(cfg, &text) == cli::kOk);
    CHECK(text == "functional: " + expect + "\n");
  };
  check("open_m.json", "false");
  check("func_left.json", "true");
  check("loop_g.json", "false");
  check("zigzag_p.json", "false");
  check("open_p1.json", "true");
}

TEST_CASE("binomial-check passes on the functional chain") {
  std::string text;
  cli::RunConfig cfg;
  cfg.command = "binomial-check";
  cfg.inputs = {fixture("func_left.json"), fixture("func_right.json")};
  cfg.binomial_n = 4;
  CHECK(run_cli(cfg, &text) == cli::kOk);
  CHECK(text.find("n=4: equal") != std::string::npos);
  // non-functional inputs are a semantic error
  cfg.inputs = {fixture("open_m.json"), fixture("open_n.json")};
  CHECK(run_cli(cfg) == cli::kSemantic);
}

TEST_CASE("graph commands") {
  std::string text;
  cli::RunConfig cfg;
  cfg.command = "graph-blackbox";
  cfg.inputs = {fixture("loop_g.json")};
  cfg.bound = 5;
  CHECK(run_cli(cfg, &text) == cli::kOk);
  CHECK(text.find("a -> b: 1") != std::string::npos);
  CHECK(text.find("a -> c: 0") != std::string::npos);

  cli::RunConfig paths;
  paths.command = "graph-paths";
  paths.inputs = {fixture("loop_g.json")};
  paths.length = 1;
  CHECK(run_cli(paths, &text) == cli::kOk);
  CHECK(text.find("u -> v: 1 path") != std::string::npos);
}

TEST_CASE("net commands") {
  std::string text;
  cli::RunConfig cfg;
  cfg.command = "net-reach";
  cfg.inputs = {fixture("intro_net.json")};
  cfg.marking_json = R"({"p1":1,"p2":1})";
  cfg.depth = 2;
  cfg.cap = 5;
  CHECK(run_cli(cfg, &text) == cli::kOk);
  CHECK(text.find("2*p2") != std::string::npos);

  cli::RunConfig fire_cfg;
  fire_cfg.command = "net-fire";
  fire_cfg.inputs = {fixture("intro_net.json")};
  fire_cfg.marking_json = R"({"p1":1,"p2":1})";
  fire_cfg.transition = "t1";
  CHECK(run_cli(fire_cfg, &text) == cli::kOk);
  CHECK(text == "p3\n");

  TempFile out("net_composite.json");
  cli::RunConfig comp;
  comp.command = "net-compose";
  comp.inputs = {fixture("open_p1.json"), fixture("open_q1.json")};
  comp.output = out.path;
  CHECK(run_cli(comp, &text) == cli::kOk);
  OpenNet composite = io::open_net_from_json(io::load_json_file(out.path));
  CHECK(composite.net.places.labels() ==
        std::vector<std::string>{"A", "B", "C", "F"});

  cli::RunConfig bb;
  bb.command = "net-blackbox";
  bb.inputs = {fixture("zigzag_p.json")};
  bb.cap = 1;
  bb.depth = 2;
  CHECK(run_cli(bb, &text) == cli::kOk);
  CHECK(text.find("=>") != std::string::npos);

  cli::RunConfig tr;
  tr.command = "net-translate";
  tr.inputs = {fixture("intro_net.json")};
  tr.to_kind = "bounded:2";
  TempFile trout("translated.json");
  tr.output = trout.path;
  CHECK(run_cli(tr, &text) == cli::kOk);
  QNet translated = io::net_from_json(io::load_json_file(trout.path));
  CHECK(translated.kind == ResourceKind::bounded(2));
  CHECK(translated.transition("t2").tgt.get("p2") == 1);  // 2 collapses to 1
}

TEST_CASE("prenet files translate to natural nets") {
  TempFile in("prenet.json"), out("abelianized.json");
  io::write_file(in.path, R"({
  "kind": "prenet",
  "places": ["a", "b"],
  "transitions": [{"id": "t", "src": ["a", "b", "a"], "tgt": ["b"]}]
})");
  cli::RunConfig cfg;
  cfg.command = "net-translate";
  cfg.inputs = {in.path};
  cfg.to_kind = "natural";
  cfg.output = out.path;
  CHECK(run_cli(cfg) == cli::kOk);
  QNet net = io::net_from_json(io::load_json_file(out.path));
  CHECK(net.transition("t").src.get("a") == 2);
  cfg.to_kind = "integer";
  CHECK(run_cli(cfg) == cli::kSemantic);
}

TEST_CASE("export-dot writes matrices and graphs") {
  std::string text;
  cli::RunConfig cfg;
  cfg.command = "export-dot";
  cfg.inputs = {fixture("composite_expected.json")};
  CHECK(run_cli(cfg, &text) == cli::kOk);
  CHECK(text.find("\"a\" -> \"c\" [label=\"0.1\"];") != std::string::npos);
  CHECK(text.find("label=\"inf\"") == std::string::npos);  // bottoms skipped
  cfg.inputs = {fixture("loop_g.json")};
  CHECK(run_cli(cfg, &text) == cli::kOk);
  CHECK(text.find("\"u\" -> \"v\" [label=\"g1\"];") != std::string::npos);
}

TEST_CASE("exit codes") {
  cli::RunConfig cfg;
  cfg.command = "no-such-command";
  CHECK(run_cli(cfg) == cli::kUsage);

  TempFile bad("bad.json");
  io::write_file(bad.path, "{ not json");
  cfg.command = "solve";
  cfg.inputs = {bad.path};
  CHECK(run_cli(cfg) == cli::kParse);

  cfg.inputs = {fixture("missing_file.json")};
  CHECK(run_cli(cfg) == cli::kParse);

  // boundary mismatch: composing in the wrong order
  cfg.command = "compose";
  cfg.inputs = {fixture("open_n.json"), fixture("open_m.json")};
  CHECK(run_cli(cfg) == cli::kSemantic);
}
