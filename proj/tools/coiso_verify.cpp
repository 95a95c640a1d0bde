// coiso-verify: command-line front end for the verification suites.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 input or validation error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "coiso/pair_json.hpp"
#include "coiso/suites.hpp"

namespace {

struct OutputOptions {
  std::string format = "json";
  std::string out;
  bool record_runtime = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "md"}));
  cmd->add_option("--out", o.out, "also write the report to this file");
  cmd->add_flag("--record-runtime", o.record_runtime, "store wall-clock time in runtime_ms (default 0)");
}

std::string render(const coiso::VerificationReport& r, const std::string& format) {
  return format == "md" ? coiso::to_markdown(r) : coiso::to_json_string(r);
}

int emit(coiso::VerificationReport r, const OutputOptions& o, std::chrono::steady_clock::time_point start,
         bool to_stdout = true) {
  if (o.record_runtime)
    r.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const std::string text = render(r, o.format);
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw coiso::Error("cannot write '" + o.out + "'");
    f << text;
  }
  if (to_stdout) std::cout << text;
  std::cerr << r.suite << ": " << r.count(coiso::CheckStatus::pass) << " pass, " << r.count(coiso::CheckStatus::fail)
            << " fail, " << r.count(coiso::CheckStatus::skip) << " skip\n";
  return r.passed() ? 0 : 1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw coiso::Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for weakly coisotropic geometry, graded sl2 defects and symmetric pairs"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  int max_lambda = 8, trials = 100;
  std::uint64_t seed = 1;
  OutputOptions o_sl2;
  auto* sl2 = verify->add_subcommand("sl2", "graded sl2 defect, duality and delta identities");
  sl2->add_option("--max-lambda", max_lambda, "largest highest weight")->check(CLI::Range(0, 40));
  sl2->add_option("--trials", trials, "random direct sums")->check(CLI::NonNegativeNumber);
  sl2->add_option("--seed", seed, "random seed");
  add_output_options(sl2, o_sl2);

  std::size_t dim = 8;
  int sym_trials = 500;
  OutputOptions o_sym;
  auto* sym = verify->add_subcommand("symplectic", "coisotropic vs weakly coisotropic on random subspaces");
  sym->add_option("--dim", dim, "dimension 2m of the symplectic space");
  sym->add_option("--trials", sym_trials, "random subspaces")->check(CLI::NonNegativeNumber);
  sym->add_option("--seed", seed, "random seed");
  add_output_options(sym, o_sym);

  std::string family, input;
  std::size_t size = 0;
  OutputOptions o_pair;
  auto* pair = verify->add_subcommand("pair", "negative distinguished defect for a symmetric pair");
  auto* fam_opt = pair->add_option("--family", family, "catalog family");
  auto* size_opt = pair->add_option("--size", size, "family size parameter");
  auto* in_opt = pair->add_option("--input", input, "pair given as JSON")->check(CLI::ExistingFile);
  fam_opt->excludes(in_opt);
  fam_opt->needs(size_opt);
  size_opt->needs(fam_opt);
  pair->add_option("--seed", seed, "seed for sampled representatives");
  add_output_options(pair, o_pair);

  std::size_t kl_n = 2;
  std::vector<long> primes;
  OutputOptions o_kl;
  auto* kl = verify->add_subcommand("keylemma", "exhaustive finite-field checks over a Jordan block");
  kl->add_option("--n", kl_n, "size of the Jordan block")->required();
  kl->add_option("--prime", primes, "prime for enumeration (repeatable)")->required()->take_all();
  add_output_options(kl, o_kl);

  OutputOptions o_all;
  auto* all = verify->add_subcommand("all", "every suite in a fixed order");
  all->add_option("--seed", seed, "random seed");
  add_output_options(all, o_all);

  OutputOptions o_rep;
  std::string from;
  auto* rep = app.add_subcommand("report", "write a report of `verify all` (or convert one given by --from)");
  rep->add_option("--format", o_rep.format, "json or md")->check(CLI::IsMember({"json", "md"}))->required();
  rep->add_option("--out", o_rep.out, "output path")->required();
  rep->add_option("--from", from, "existing JSON report to convert")->check(CLI::ExistingFile);
  rep->add_option("--seed", seed, "random seed");
  rep->add_flag("--record-runtime", o_rep.record_runtime, "store wall-clock time in runtime_ms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (*sl2) return emit(coiso::run_sl2(max_lambda, trials, seed), o_sl2, start);
    if (*sym) return emit(coiso::run_symplectic(dim, sym_trials, seed), o_sym, start);
    if (*pair) {
      if (family.empty() && input.empty()) throw coiso::Error("verify pair needs --family NAME --size M or --input FILE");
      if (!input.empty()) {
        const coiso::SymmetricPair p = coiso::pair_from_json_file(input);
        return emit(coiso::run_pair_on(p, coiso::sampled_representatives(p, seed), seed), o_pair, start);
      }
      return emit(coiso::run_pair_family(family, size, seed), o_pair, start);
    }
    if (*kl) return emit(coiso::run_keylemma(kl_n, primes), o_kl, start);
    if (*all) return emit(coiso::run_all(seed), o_all, start);
    if (*rep) {
      coiso::VerificationReport r = from.empty() ? coiso::run_all(seed)
                                                 : coiso::report_from_json(nlohmann::json::parse(slurp(from)));
      if (!from.empty()) o_rep.record_runtime = false;
      return emit(std::move(r), o_rep, start, false);
    }
  } catch (const coiso::InvariantViolation& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const coiso::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << app.help();
  return 2;
}
