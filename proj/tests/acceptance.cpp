// Acceptance run: one line per criterion, exact checks, pinned time limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <sys/wait.h>

#include "coiso/graded_sl2.hpp"
#include "coiso/keylemma.hpp"
#include "coiso/report.hpp"
#include "coiso/sympair.hpp"
#include "coiso/symplectic.hpp"

using namespace coiso;

namespace {

constexpr std::uint64_t kSeed = 20240517;
constexpr int kMaxLambda = 8;
constexpr int kTrials = 100;
constexpr std::size_t kMaxSumDim = 40;
constexpr std::size_t kSymplecticDim = 8;
constexpr int kSubspaces = 500;
constexpr std::size_t kF5Oracle = 145;  // brute-forced |R_A cap L_11| over F_5, n = 2

struct Outcome {
  bool ok;
  std::string detail;
};

std::vector<GradedDecomposition> random_sums(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GradedDecomposition> out;
  const int max_summands = static_cast<int>(kMaxSumDim) / (kMaxLambda + 1);
  while (out.size() < static_cast<std::size_t>(kTrials)) {
    GradedDecomposition d = random_decomposition(rng, kMaxLambda, max_summands);
    if (d.dim() <= kMaxSumDim) out.push_back(std::move(d));
  }
  return out;
}

Outcome criterion1() {
  for (int l = 0; l <= kMaxLambda; ++l)
    for (int w : {1, -1})
      if (defect_closed_form({{l, w}}) != defect_definitional(build_irreducible(l, w)))
        return {false, "V(" + std::to_string(l) + "," + std::to_string(w) + ")"};
  for (const auto& d : random_sums(kSeed))
    if (defect_closed_form(d) != defect_definitional(module_from_decomposition(d))) return {false, d.to_string()};
  return {true, std::to_string(2 * (kMaxLambda + 1)) + " irreducibles, " + std::to_string(kTrials) + " sums"};
}

Outcome criterion2() {
  for (int l = 0; l <= kMaxLambda; ++l)
    for (int w : {1, -1}) {
      const GradedDecomposition d{{l, w}};
      if (dual(dual(d)) != d) return {false, "dual of dual " + d.to_string()};
      if (decompose(dual_module(build_irreducible(l, w))) != dual(d)) return {false, "dual model " + d.to_string()};
    }
  for (const auto& d : random_sums(kSeed + 1))
    if (dual(dual(d)) != d) return {false, "dual of dual " + d.to_string()};
  return {true, "lambda <= 8"};
}

Outcome criterion3() {
  for (const auto& d : random_sums(kSeed + 2))
    if (delta_identity_value(d) != 0) return {false, d.to_string() + " gives " + std::to_string(delta_identity_value(d))};
  return {true, std::to_string(kTrials) + " decompositions"};
}

Outcome criterion4() {
  std::string detail;
  for (std::size_t n = 2; n <= 4; ++n) {
    const SymmetricPair p = diagonal_pair(n);
    std::size_t dist = 0;
    for (const auto& rep : diagonal_representatives(p, n)) {
      const bool d = is_distinguished(p, rep.x);
      if (d != (rep.label == std::to_string(n))) return {false, p.name() + " partition " + rep.label};
      dist += d;
    }
    detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + std::to_string(dist);
  }
  return {true, "distinguished counts " + detail};
}

Outcome criterion5() {
  std::vector<std::pair<SymmetricPair, std::vector<NilpotentRep>>> cases;
  for (std::size_t n : {2, 3}) {
    SymmetricPair p = diagonal_pair(n);
    auto reps = diagonal_representatives(p, n);
    cases.emplace_back(std::move(p), std::move(reps));
  }
  for (std::size_t m : {2, 3, 4}) {
    SymmetricPair p = sl_so_pair(m);
    auto reps = sl_so_representatives(p, m);
    cases.emplace_back(std::move(p), std::move(reps));
  }
  std::size_t checked = 0;
  for (const auto& [p, reps] : cases)
    for (const auto& rep : reps) {
      if (!is_distinguished(p, rep.x)) continue;
      ++checked;
      if (rep.x.is_zero()) return {false, p.name() + ": zero is distinguished"};
      const long def = defect_of_nilpotent(p, rep.x), margin = sakellaridis_margin(p, rep.x);
      if (def >= 0 || margin <= 0)
        return {false, p.name() + " " + rep.label + ": defect " + std::to_string(def) + ", margin " +
                           std::to_string(margin)};
    }
  if (checked == 0) return {false, "no distinguished representatives"};
  return {true, std::to_string(checked) + " distinguished representatives"};
}

Outcome criterion6() {
  const std::size_t m = kSymplecticDim / 2;
  const auto space = SymplecticSpace<Rational>::standard(m);
  std::mt19937_64 rng(kSeed);
  std::size_t co = 0, weak = 0;
  for (int t = 0; t < kSubspaces; ++t) {
    const auto z = random_test_subspace(rng, space);
    const bool c = is_coisotropic_linear(space, z), w = is_weakly_coisotropic_linear(space, z);
    if (c && !w) return {false, "coisotropic but not weakly: " + z.basis().to_string()};
    if (w && z.dim() < m) return {false, "weakly coisotropic of dim " + std::to_string(z.dim())};
    if (w != is_weakly_coisotropic_dual_form(space, z)) return {false, "forms disagree: " + z.basis().to_string()};
    co += c;
    weak += w;
  }
  return {true, std::to_string(co) + " coisotropic, " + std::to_string(weak) + " weakly coisotropic of " +
                    std::to_string(kSubspaces)};
}

template <std::uint32_t P>
Outcome enumerate(std::size_t n, std::map<std::size_t, std::map<long, std::size_t>>& counts) {
  const KeyLemmaInstance<Fp<P>> inst(n);
  for (std::size_t i = 1; i < n; ++i) {
    const auto r = verify_f_vanishes(inst, i);
    if (!r.ok()) return {false, r.violations.front()};
    counts[i][P] = r.members;
  }
  return {true, ""};
}

Outcome criterion7() {
  std::string detail;
  for (std::size_t n : {2, 3}) {
    std::map<std::size_t, std::map<long, std::size_t>> counts;
    for (const auto& o : {enumerate<3>(n, counts), enumerate<5>(n, counts), enumerate<7>(n, counts)})
      if (!o.ok) return o;
    for (const auto& [i, c] : counts) {
      long d = 0;
      try {
        d = estimate_dimension(c);
      } catch (const Inconclusive& e) {
        return {false, e.what()};
      }
      if (d >= static_cast<long>(2 * n))
        return {false, "n=" + std::to_string(n) + " L" + std::to_string(i) + std::to_string(i) + " dimension " +
                           std::to_string(d)};
      detail += " n=" + std::to_string(n) + ",i=" + std::to_string(i) + ":dim " + std::to_string(d);
    }
    if (n == 2 && counts[1][5] != kF5Oracle)
      return {false, "F5 count " + std::to_string(counts[1][5]) + " != oracle " + std::to_string(kF5Oracle)};
    const auto filt = verify_Lii_filter(KeyLemmaInstance<Rational>(n));
    if (!filt.ok) return {false, "survivors differ from the diagonal for n=" + std::to_string(n)};
  }
  return {true, "f = 0 on all members;" + detail};
}

Outcome criterion8() {
  for (std::size_t n = 1; n <= 4; ++n) {
    const KeyLemmaInstance<Rational> inst(n);
    for (std::size_t i = 1; i < n; ++i) {
      const auto r = verify_upper_triangular_symbolic(inst, i);
      if (!r.upper || !r.entry_vanishes) return {false, "n=" + std::to_string(n) + " i=" + std::to_string(i)};
    }
  }
  return {true, "n <= 4, all block shapes"};
}

std::pair<int, std::string> run_tool(const std::string& args) {
  const std::string cmd = std::string(COISO_VERIFY_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[8192];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome criterion9() {
  const std::string args = "verify all --seed " + std::to_string(kSeed);
  const auto a = run_tool(args), b = run_tool(args);
  if (a.second.empty()) return {false, "no output"};
  if (a.second != b.second) return {false, "reports differ"};
  if (a.first != b.first) return {false, "exit codes differ"};
  VerificationReport r;
  try {
    r = report_from_json(nlohmann::json::parse(a.second));
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
  if (a.first != (r.passed() ? 0 : 1)) return {false, "exit code " + std::to_string(a.first) + " vs report status"};
  return {true, std::to_string(a.second.size()) + " identical bytes, " + std::to_string(r.checks.size()) +
                    " checks, exit " + std::to_string(a.first)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "defect oracle equivalence", 10, criterion1},
      {2, "duality", 10, criterion2},
      {3, "delta identity", 5, criterion3},
      {4, "distinguished = regular (group case)", 30, criterion4},
      {5, "nice-pair sweep", 120, criterion5},
      {6, "symplectic properties", 30, criterion6},
      {7, "key lemma, exhaustive", 600, criterion7},
      {8, "upper-triangular claim", 10, criterion8},
      {9, "CLI determinism", 900, criterion9},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.ok && s < c.limit_s;
    all = all && pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", s, c.limit_s);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << " [" << timing << "] "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
