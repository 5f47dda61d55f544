#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "twoadic/twoadic.hpp"

namespace {

using namespace twoadic;

struct GenerateArgs {
  std::string family;
  std::uint32_t parameter = 0;
  std::string output; // empty -> <family>_<param>.seq, "-" -> stdout
};

struct AnalyzeArgs {
  std::string input;
  bool verify = false;
  std::string spectrum_path;
};

struct SweepArgs {
  std::string families = "all";
  std::uint32_t nmax = 16;
  std::uint32_t pmax = 2000;
  std::uint32_t tpmax = 5000;
  std::string output; // empty -> stdout
  unsigned jobs = 0;  // 0 -> hardware concurrency
  bool timing = false;
};

BinarySequence read_input_sequence(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_sequence_text(buf.str());
  }
  return read_sequence_file(path);
}

int run_generate(const GenerateArgs& args) {
  const auto family = sequences::family_from_name(args.family);
  if (!family) {
    std::cerr << "error: unknown family '" << args.family << "'\n";
    return 2;
  }
  const BinarySequence s = sequences::generate({*family, args.parameter});
  if (args.output == "-") {
    std::cout << to_text(s);
    return 0;
  }
  const std::string path =
      args.output.empty() ? args.family + "_" + std::to_string(args.parameter) + ".seq" : args.output;
  write_sequence_file(path, s);
  std::cout << s.period() << "\n";
  return 0;
}

int run_analyze(const AnalyzeArgs& args, bool exit_on_failed_verdict) {
  const BinarySequence s = read_input_sequence(args.input);
  const adic::ComplexityReport report = adic::two_adic_complexity(s, args.verify);
  std::cout << report_to_json(report).dump(2) << "\n";
  if (!args.spectrum_path.empty()) {
    std::ofstream out(args.spectrum_path, std::ios::binary);
    if (!out)
      throw error(errc::io, "cannot open " + args.spectrum_path + " for writing");
    out << spectrum_to_csv(correlation::autocorrelation_spectrum(s));
  }
  if (exit_on_failed_verdict) {
    const bool failed = !report.is_max || report.theorem1 == adic::Verdict::fails ||
                        report.product_congruence == adic::Verdict::fails ||
                        report.gcd_claim == adic::Verdict::fails;
    if (failed) {
      std::cerr << "verification failed for " << args.input << "\n";
      return 1;
    }
  }
  return 0;
}

std::optional<sweep::SweepOptions> parse_families(const std::string& list, sweep::SweepOptions options) {
  options.msequence = options.legendre = options.twinprime = false;
  std::stringstream ss(list);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token == "all")
      options.msequence = options.legendre = options.twinprime = true;
    else if (token == "msequence")
      options.msequence = true;
    else if (token == "legendre")
      options.legendre = true;
    else if (token == "twinprime")
      options.twinprime = true;
    else
      return std::nullopt;
  }
  if (!options.msequence && !options.legendre && !options.twinprime)
    return std::nullopt;
  return options;
}

int run_sweep(const SweepArgs& args) {
  sweep::SweepOptions options;
  options.nmax = args.nmax;
  options.pmax = args.pmax;
  options.tpmax = args.tpmax;
  options.jobs = args.jobs ? args.jobs : std::max(1u, std::thread::hardware_concurrency());
  const auto parsed = parse_families(args.families, options);
  if (!parsed) {
    std::cerr << "error: --families takes a comma-separated subset of "
                 "{msequence,legendre,twinprime} or 'all'\n";
    return 2;
  }

  const auto records = sweep::run_sweep(*parsed);

  const bool to_file = !args.output.empty() && args.output != "-";
  if (to_file) {
    std::ofstream out(args.output, std::ios::binary);
    if (!out)
      throw error(errc::io, "cannot open " + args.output + " for writing");
    sweep::write_csv(out, records, args.timing);
  } else {
    sweep::write_csv(std::cout, records, args.timing);
  }

  const std::size_t all_true = sweep::count_all_true(records);
  std::ostream& summary = to_file ? std::cout : std::cerr;
  summary << records.size() << " rows, " << all_true << " with all verdicts true\n";

  for (const auto& r : records) {
    if (!r.is_ideal) {
      std::cerr << "internal error: generated " << sequences::family_name(r.family) << " "
                << r.parameter << " failed the two-level autocorrelation gate\n";
      return 1;
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"ideal two-level autocorrelation sequences and their exact 2-adic complexity"};
  app.require_subcommand(1);

  GenerateArgs generate_args;
  auto* generate = app.add_subcommand(
      "generate", "generate a family member and write it in the sequence text format");
  generate->add_option("family", generate_args.family, "msequence | legendre | twinprime")
      ->required();
  generate
      ->add_option("param", generate_args.parameter,
                   "degree n (msequence), prime p (legendre), smaller twin prime p (twinprime)")
      ->required();
  generate->add_option("-o,--output", generate_args.output,
                       "output file (default <family>_<param>.seq, '-' for stdout)");

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "compute the 2-adic complexity report of a sequence file");
  analyze->add_option("file", analyze_args.input, "sequence file ('-' for stdin)")->required();
  analyze->add_flag("--verify", analyze_args.verify, "also verify the congruence identities");
  analyze->add_option("--spectrum", analyze_args.spectrum_path,
                      "write the autocorrelation spectrum as CSV to this file");

  AnalyzeArgs verify_args;
  verify_args.verify = true;
  auto* verify = app.add_subcommand(
      "verify", "analyze --verify; exit 1 unless complexity is maximal and every congruence holds");
  verify->add_option("file", verify_args.input, "sequence file ('-' for stdin)")->required();

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "batch-verify whole families and emit a CSV table");
  sweep_cmd->add_option("--families", sweep_args.families,
                        "comma-separated subset of {msequence,legendre,twinprime} or 'all'");
  sweep_cmd->add_option("--nmax", sweep_args.nmax, "largest m-sequence degree (default 16)");
  sweep_cmd->add_option("--pmax", sweep_args.pmax, "largest Legendre prime (default 2000)");
  sweep_cmd->add_option("--tpmax", sweep_args.tpmax, "largest twin-prime period (default 5000)");
  sweep_cmd->add_option("-o,--output", sweep_args.output, "CSV output file (default stdout)");
  sweep_cmd->add_option("--jobs", sweep_args.jobs, "worker threads (default: hardware concurrency)");
  sweep_cmd->add_flag("--timing", sweep_args.timing, "append the elapsed_ms column (non-deterministic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(generate))
      return run_generate(generate_args);
    if (app.got_subcommand(analyze))
      return run_analyze(analyze_args, /*exit_on_failed_verdict=*/false);
    if (app.got_subcommand(verify))
      return run_analyze(verify_args, /*exit_on_failed_verdict=*/true);
    return run_sweep(sweep_args);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::internal ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
