#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "textcover/cover.hpp"
#include "textcover/harness.hpp"
#include "textcover/io.hpp"

namespace {

using namespace textcover;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFormat = 2;

struct SolveArgs {
  std::string text, dict, engine = "classical", alphabet = "infer", prime_mode = "fast", stats;
  double epsilon = 0.01;
  double cq = 3.0;
  std::optional<double> gamma;
  std::uint64_t seed = 0;
  bool no_verify = false;
  bool no_inject = false;
};

struct VerifyArgs {
  std::string text, dict, cover, alphabet = "infer";
};

struct GenArgs {
  std::string family = "planted", out, alphabet = "binary";
  std::size_t n = 16, m = 4, len_min = 1, len_max = 4;
  std::uint64_t seed = 0;
  bool unplanted = false;
};

struct BenchArgs {
  std::vector<std::string> engines{"classical"};
  std::vector<std::size_t> sizes;
  std::size_t repeats = 1, m = 4, len = 64;
  std::uint64_t seed = 0;
  std::string family = "scaling", out;
};

int run_solve(const SolveArgs& a) {
  const auto inst = io::decode_instance(a.text, a.dict, io::parse_alphabet_choice(a.alphabet));
  const auto engine = harness::parse_engine(a.engine);

  harness::EngineOptions options;
  options.classical.epsilon = a.epsilon;
  options.classical.seed = a.seed;
  options.classical.verify_final = !a.no_verify;
  if (a.prime_mode == "faithful") {
    options.classical.primes.mode = hashing::PrimeMode::faithful;
  } else if (a.prime_mode != "fast") {
    throw std::invalid_argument("--prime-mode must be faithful or fast");
  }
  options.quantum.gamma = a.gamma;
  options.quantum.cq = a.cq;
  options.quantum.seed = a.seed;
  options.quantum.verify_final = !a.no_verify;
  options.quantum.error_injection = !a.no_inject;

  const auto result = harness::run_engine(engine, inst, options);
  io::RunReport report;
  report.feasible = result.feasible();
  if (result.cover) report.pieces = result.cover->pieces;
  report.stats = result.ledger;
  report.engine = harness::to_string(engine);
  report.seed = a.seed;
  if (engine == harness::Engine::classical) report.epsilon = a.epsilon;
  if (engine == harness::Engine::quantum_sim) report.gamma = resolve_gamma(options.quantum, inst);

  std::cout << io::to_json(report).dump(2) << '\n';
  if (!a.stats.empty()) io::write_file(a.stats, io::ledger_to_json(result.ledger).dump(2) + "\n");
  return kExitOk;
}

int run_verify(const VerifyArgs& a) {
  const auto inst = io::decode_instance(a.text, a.dict, io::parse_alphabet_choice(a.alphabet));
  const auto cover = io::parse_cover(io::read_file(a.cover));
  if (const auto problem = check_cover(inst, cover)) {
    std::cout << "invalid: " << *problem << '\n';
  } else {
    std::cout << "valid\n";
  }
  return kExitOk;
}

int run_gen(const GenArgs& a) {
  harness::GenSpec spec;
  spec.family = harness::parse_family(a.family);
  spec.n = a.n;
  spec.m = a.m;
  spec.len_min = a.len_min;
  spec.len_max = a.len_max;
  spec.seed = a.seed;
  spec.planted = !a.unplanted;
  switch (io::parse_alphabet_choice(a.alphabet)) {
    case io::AlphabetChoice::dna: spec.alphabet = Alphabet::dna(); break;
    case io::AlphabetChoice::ascii: spec.alphabet = Alphabet::ascii(); break;
    default: spec.alphabet = Alphabet::binary(); break;
  }
  io::write_instance(a.out, harness::generate(spec));
  std::cout << (std::filesystem::path(a.out) / io::kTextFileName).string() << '\n'
            << (std::filesystem::path(a.out) / io::kDictFileName).string() << '\n';
  return kExitOk;
}

int run_bench(const BenchArgs& a) {
  harness::BenchSpec spec;
  for (const auto& e : a.engines) spec.engines.push_back(harness::parse_engine(e));
  spec.sizes = a.sizes;
  spec.repeats = a.repeats;
  spec.seed = a.seed;
  spec.family = harness::parse_family(a.family);
  spec.m = a.m;
  spec.len = a.len;
  const auto table = harness::bench_run(spec);

  std::filesystem::path json_path(a.out);
  auto csv_path = json_path;
  if (json_path.extension() == ".csv") {
    json_path.replace_extension(".json");
  } else {
    csv_path.replace_extension(".csv");
  }
  io::write_file(json_path, harness::to_json_string(table) + "\n");
  io::write_file(csv_path, harness::to_csv(table));
  std::cout << json_path.string() << '\n' << csv_path.string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruct a text from overlapping dictionary strings"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Find a cover of the text by dictionary strings");
  solve_cmd->add_option("--text", solve.text, "Text file (first line)")->required();
  solve_cmd->add_option("--dict", solve.dict, "Dictionary file (one string per line)")->required();
  solve_cmd->add_option("--engine", solve.engine, "classical | quantum-sim | naive")
      ->check(CLI::IsMember({"classical", "quantum-sim", "naive"}));
  solve_cmd->add_option("--epsilon", solve.epsilon, "Fingerprint error probability");
  solve_cmd->add_option("--gamma", solve.gamma, "Quantum comparison error parameter");
  solve_cmd->add_option("--cq", solve.cq, "Leading constant of the quantum query cost");
  solve_cmd->add_option("--seed", solve.seed, "Random seed");
  solve_cmd->add_option("--alphabet", solve.alphabet, "infer | binary | dna | ascii")
      ->check(CLI::IsMember({"infer", "binary", "dna", "ascii"}));
  solve_cmd->add_option("--prime-mode", solve.prime_mode, "faithful | fast")
      ->check(CLI::IsMember({"faithful", "fast"}));
  solve_cmd->add_flag("--no-verify", solve.no_verify, "Skip the final symbol-exact cover check");
  solve_cmd->add_flag("--no-inject", solve.no_inject, "Disable simulated quantum comparison errors");
  solve_cmd->add_option("--stats", solve.stats, "Also write the ledger as JSON to this file");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a cover file against an instance");
  verify_cmd->add_option("--text", verify.text)->required();
  verify_cmd->add_option("--dict", verify.dict)->required();
  verify_cmd->add_option("--cover", verify.cover, "JSON with a \"pieces\" array")->required();
  verify_cmd->add_option("--alphabet", verify.alphabet)->check(CLI::IsMember({"infer", "binary", "dna", "ascii"}));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance into a directory");
  gen_cmd->add_option("--family", gen.family, "random | planted | lb-L | lb-n | scaling | long-strings | fixed-shape")
      ->required();
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--m", gen.m);
  gen_cmd->add_option("--len-min", gen.len_min);
  gen_cmd->add_option("--len-max", gen.len_max);
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--alphabet", gen.alphabet, "binary | dna | ascii")
      ->check(CLI::IsMember({"binary", "dna", "ascii"}));
  gen_cmd->add_flag("--unplanted", gen.unplanted, "lb-L / lb-n: emit the infeasible variant");
  gen_cmd->add_option("--out", gen.out, "Output directory")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run engines over a size sweep and record ledgers");
  bench_cmd->add_option("--engines", bench.engines, "Comma-separated engine list")->delimiter(',');
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated text lengths")->delimiter(',')->required();
  bench_cmd->add_option("--repeats", bench.repeats)->required();
  bench_cmd->add_option("--seed", bench.seed)->required();
  bench_cmd->add_option("--family", bench.family);
  bench_cmd->add_option("--m", bench.m);
  bench_cmd->add_option("--len", bench.len);
  bench_cmd->add_option("--out", bench.out, "JSON output; CSV goes next to it")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*verify_cmd) return run_verify(verify);
    if (*gen_cmd) return run_gen(gen);
    if (*bench_cmd) return run_bench(bench);
  } catch (const io::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
