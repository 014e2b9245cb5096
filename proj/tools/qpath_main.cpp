// Command-line front end for the open-network path and reachability solver.

#include <string>

#include <CLI11.hpp>

#include "qpath/cli.hpp"

namespace {

void add_output_flag(CLI::App* app, qpath::cli::RunConfig& cfg) {
  app->add_option("-o,--output", cfg.output, "write the result to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compositional algebraic path problems and open resource nets"};
  app.require_subcommand(1);

  qpath::cli::RunConfig cfg;
  std::string algo = "fw", mode = "auto";

  auto* solve = app.add_subcommand(
      "solve", "solve the path problem on a matrix or expression file");
  solve->add_option("input", cfg.inputs, "matrix or expression file");
  solve->add_option("--expr", cfg.expr_path, "gluing plan (expression file)");
  solve->add_option("--algo", algo, "closure algorithm: fw|series|square");
  solve->add_option("--mode", mode, "strategy: auto|glued|compositional");
  solve->add_flag("--check-oracle", cfg.check_oracle,
                  "cross-check against the truncated series");
  add_output_flag(solve, cfg);

  auto* comp = app.add_subcommand("compose", "glue two open matrices");
  comp->add_option("inputs", cfg.inputs, "two open matrix files")
      ->expected(2)->required();
  add_output_flag(comp, cfg);

  auto* tens = app.add_subcommand("tensor", "put two open matrices in parallel");
  tens->add_option("inputs", cfg.inputs, "two open matrix files")
      ->expected(2)->required();
  add_output_flag(tens, cfg);

  auto* bb = app.add_subcommand(
      "blackbox", "restrict a solved open matrix to its boundaries");
  bb->add_option("input", cfg.inputs, "open matrix file")->required();
  bb->add_option("--algo", algo, "closure algorithm: fw|series|square");
  bb->add_flag("--raw", cfg.raw, "skip solving, restrict the raw apex");
  add_output_flag(bb, cfg);

  auto* chk = app.add_subcommand(
      "check-functional",
      "are all inputs sources and all outputs sinks?");
  chk->add_option("input", cfg.inputs, "open matrix, graph or net file")
      ->required();

  auto* bino = app.add_subcommand(
      "binomial-check",
      "compare both sides of the glued power expansion for n = 0..N");
  bino->add_option("inputs", cfg.inputs, "two functional open matrix files")
      ->expected(2)->required();
  bino->add_option("-n,--max-power", cfg.binomial_n, "largest power to check");

  auto* graph = app.add_subcommand("graph", "path semantics of ordinary graphs");
  graph->require_subcommand(1);
  auto* gpaths = graph->add_subcommand("paths", "enumerate truncated path sets");
  gpaths->add_option("input", cfg.inputs, "graph file (.json or .dot)")
      ->required();
  gpaths->add_option("--length", cfg.length, "exact path length");
  gpaths->add_option("-k,--max-length", cfg.bound, "length bound");
  gpaths->add_option("--from", cfg.from_filter, "restrict to this start");
  gpaths->add_option("--to", cfg.to_filter, "restrict to this end");
  add_output_flag(gpaths, cfg);
  auto* gbb = graph->add_subcommand(
      "blackbox", "boundary-restricted truncated path table");
  gbb->add_option("input", cfg.inputs, "open graph file")->required();
  gbb->add_option("-k,--max-length", cfg.bound, "length bound")->required();
  add_output_flag(gbb, cfg);

  auto* net = app.add_subcommand("net", "resource nets");
  net->require_subcommand(1);
  auto* nfire = net->add_subcommand("fire", "fire one transition");
  nfire->add_option("input", cfg.inputs, "net file")->required();
  nfire->add_option("--marking", cfg.marking_json, "marking as JSON object")
      ->required();
  nfire->add_option("--transition", cfg.transition, "transition id")
      ->required();
  add_output_flag(nfire, cfg);
  auto* nreach = net->add_subcommand("reach", "bounded reachability set");
  nreach->add_option("input", cfg.inputs, "net file")->required();
  nreach->add_option("--marking", cfg.marking_json, "initial marking")
      ->required();
  nreach->add_option("--depth", cfg.depth, "maximum firing count")->required();
  nreach->add_option("--cap", cfg.cap, "coefficient cap")->required();
  add_output_flag(nreach, cfg);
  auto* ncomp = net->add_subcommand("compose", "glue two open nets");
  ncomp->add_option("inputs", cfg.inputs, "two open net files")
      ->expected(2)->required();
  add_output_flag(ncomp, cfg);
  auto* nbb = net->add_subcommand(
      "blackbox", "boundary-to-boundary reachability with witness counts");
  nbb->add_option("input", cfg.inputs, "open net file")->required();
  nbb->add_option("--cap", cfg.cap, "boundary coefficient cap")->required();
  nbb->add_option("--depth", cfg.depth, "maximum firing count")->required();
  add_output_flag(nbb, cfg);
  auto* ntr = net->add_subcommand("translate", "change the resource semantics");
  ntr->add_option("input", cfg.inputs, "net or pre-net file")->required();
  ntr->add_option("--to", cfg.to_kind, "natural | integer | bounded:k")
      ->required();
  add_output_flag(ntr, cfg);

  auto* dot = app.add_subcommand("export-dot", "write a matrix or graph as DOT");
  dot->add_option("input", cfg.inputs, "matrix or graph file")->required();
  add_output_flag(dot, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints the message or requested help text
    return rc == 0 ? 0 : qpath::cli::kUsage;
  }

  try {
    cfg.algo = qpath::cli::parse_algo(algo);
    cfg.mode = qpath::cli::parse_mode(mode);
  } catch (const qpath::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qpath::cli::kUsage;
  }

  if (solve->parsed()) cfg.command = "solve";
  else if (comp->parsed()) cfg.command = "compose";
  else if (tens->parsed()) cfg.command = "tensor";
  else if (bb->parsed()) cfg.command = "blackbox";
  else if (chk->parsed()) cfg.command = "check-functional";
  else if (bino->parsed()) cfg.command = "binomial-check";
  else if (graph->parsed())
    cfg.command = gpaths->parsed() ? "graph-paths" : "graph-blackbox";
  else if (net->parsed()) {
    if (nfire->parsed()) cfg.command = "net-fire";
    else if (nreach->parsed()) cfg.command = "net-reach";
    else if (ncomp->parsed()) cfg.command = "net-compose";
    else if (nbb->parsed()) cfg.command = "net-blackbox";
    else cfg.command = "net-translate";
  } else if (dot->parsed()) {
    cfg.command = "export-dot";
  }

  return qpath::cli::run(cfg);
}
