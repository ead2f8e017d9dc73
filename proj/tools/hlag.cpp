#include <iostream>

#include "CLI11.hpp"

#include "hlag/cli.hpp"

using namespace hlag;
using namespace hlag::cli;

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph Lagrangians, F-freeness and extremal search"};
  app.require_subcommand(1);
  RunConfig config;
  add_run_options(app, config);

  std::string input;
  std::function<int()> command;

  auto* lambda = app.add_subcommand("lambda", "maximize the Lagrangian of a graph file");
  lambda->add_option("input", input, ".hg or .json graph")->required();
  lambda->callback([&] { command = [&] { return cmd_lambda(input, config, std::cout); }; });

  std::vector<std::string> patterns;
  auto* check = app.add_subcommand("check", "test a graph for copies of patterns");
  check->add_option("input", input)->required();
  check->add_option("--free-of", patterns, "pattern name (P3, F5, K6-, ...) or graph file")->required();
  check->callback([&] { command = [&] { return cmd_check(input, patterns, config, std::cout); }; });

  CompressRequest compress_request;
  Vertex ci = 0;
  Vertex cj = 0;
  int loop = 0;
  std::string output;
  auto* compress = app.add_subcommand("compress", "compress j into i, or run the left-compression loop");
  compress->add_option("input", input)->required();
  auto* opt_i = compress->add_option("-i", ci, "target vertex");
  auto* opt_j = compress->add_option("-j", cj, "source vertex");
  auto* opt_loop = compress->add_option("--loop", loop, "path length t (3 or 4)");
  opt_i->needs(opt_j);
  opt_j->needs(opt_i);
  opt_loop->excludes(opt_i)->excludes(opt_j);
  compress->add_option("-o,--output", output, "output graph file");
  compress->callback([&] {
    if (opt_i->count() > 0) compress_request.pair = std::pair{ci, cj};
    if (opt_loop->count() > 0) compress_request.loop_path = loop;
    if (!output.empty()) compress_request.output = output;
    command = [&] { return cmd_compress(input, compress_request, config, std::cout); };
  });

  auto* extend = app.add_subcommand("extend", "build the extension of a graph");
  extend->add_option("input", input)->required();
  extend->add_option("-o,--output", output);
  extend->callback([&] {
    command = [&] {
      return cmd_extend(input, output.empty() ? std::nullopt : std::optional<std::filesystem::path>(output), config,
                        std::cout);
    };
  });

  std::string kind;
  std::vector<long long> params;
  auto* construct = app.add_subcommand("construct", "build K t r, K- t r, P t or T m r n");
  construct->add_option("kind", kind)->required()->check(CLI::IsMember({"K", "K-", "P", "T"}));
  construct->add_option("params", params)->required();
  construct->add_option("-o,--output", output);
  construct->callback([&] {
    command = [&] {
      return cmd_construct(kind, params, output.empty() ? std::nullopt : std::optional<std::filesystem::path>(output),
                           config, std::cout);
    };
  });

  TuranRequest turan_request;
  std::string extension_of;
  std::string strategy = "branch-and-bound";
  auto* turan = app.add_subcommand("turan", "exact Turan number on n vertices");
  turan->add_option("n", turan_request.n)->required()->check(CLI::Range(1, 64));
  turan->add_option("patterns", turan_request.patterns, "forbidden pattern names or files");
  turan->add_option("--extension-of", extension_of, "also forbid the extension of this pattern");
  turan->add_option("--strategy", strategy)->check(CLI::IsMember({"branch-and-bound", "whole-space"}))->capture_default_str();
  turan->callback([&] {
    if (!extension_of.empty()) turan_request.extension_of = extension_of;
    turan_request.strategy = strategy == "whole-space" ? TuranStrategy::whole_space : TuranStrategy::branch_and_bound;
    command = [&] { return cmd_turan(turan_request, config, std::cout); };
  });

  DensityRequest density_request;
  std::string mode = "left-compressed";
  std::string checkpoint;
  std::string resume;
  auto* density = app.add_subcommand("density", "Lagrangians of F-free 3-graphs on n vertices");
  density->add_option("forbidden", density_request.forbidden, "pattern name")->required();
  density->add_option("n", density_request.n)->required()->check(CLI::Range(3, 64));
  density->add_option("--mode", mode)->check(CLI::IsMember({"left-compressed", "all"}))->capture_default_str();
  density->add_option("--checkpoint", checkpoint, "write a checkpoint here if the run is capped");
  density->add_option("--resume", resume, "resume from a checkpoint");
  density->callback([&] {
    density_request.mode = mode == "all" ? DensityMode::all : DensityMode::left_compressed;
    if (!checkpoint.empty()) density_request.checkpoint = checkpoint;
    if (!resume.empty()) density_request.resume = resume;
    command = [&] { return cmd_density(density_request, config, std::cout); };
  });

  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify", "run the bundled verification suite");
  verify->add_option("--only", only, "criterion ids or groups");
  verify->callback([&] { command = [&] { return cmd_verify(config, only, std::cout); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  return run_guarded(command, std::cerr);
}
