#pragma once

// Verification suites behind the command-line tool. Each returns a report;
// input problems raise exceptions (Error and subclasses).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "coiso/graded_sl2.hpp"
#include "coiso/keylemma.hpp"
#include "coiso/report.hpp"
#include "coiso/sympair.hpp"
#include "coiso/symplectic.hpp"

namespace coiso {

// ------------------------------------------------------------------ sl2

inline VerificationReport run_sl2(int max_lambda, int trials, std::uint64_t seed) {
  if (max_lambda < 0 || max_lambda > 40) throw Error("--max-lambda must be in 0..40");
  if (trials < 0) throw Error("--trials must be non-negative");
  VerificationReport r{"sl2", seed, {}, 0};
  const int max_summands = std::max(1, 40 / (max_lambda + 1));

  std::optional<std::string> bad;
  auto note = [&](const std::string& w) {
    if (!bad) bad = w;
  };

  for (int l = 0; l <= max_lambda; ++l)
    for (int w : {1, -1}) {
      const GradedDecomposition d{{l, w}};
      const long def = defect_definitional(build_irreducible(l, w));
      if (defect_closed_form(d) != def)
        note("V(" + std::to_string(l) + "," + std::to_string(w) + "): closed form " +
             std::to_string(defect_closed_form(d)) + ", definitional " + std::to_string(def));
    }
  r.add("defect_closed_form_irreducible", !bad, bad);

  bad.reset();
  std::optional<std::string> bad_add;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const GradedDecomposition d = random_decomposition(rng, max_lambda, max_summands);
    const long def = defect_definitional(module_from_decomposition(d));
    if (defect_closed_form(d) != def)
      note(d.to_string() + ": closed form " + std::to_string(defect_closed_form(d)) + ", definitional " +
           std::to_string(def));
    long parts = 0;
    for (const auto& [s, m] : d.multiplicities())
      parts += static_cast<long>(m) * defect_definitional(build_irreducible(s.lambda, s.w));
    if (parts != def && !bad_add)
      bad_add = d.to_string() + ": sum of parts " + std::to_string(parts) + ", whole " + std::to_string(def);
  }
  r.add("defect_closed_form_random_sums", !bad, bad);
  r.add("defect_additivity", !bad_add, bad_add);

  bad.reset();
  for (int l = 0; l <= max_lambda; ++l)
    for (int w : {1, -1}) {
      const Rational x = summand_defect({l, w});
      if (x.get_den() != 1) note("V(" + std::to_string(l) + "," + std::to_string(w) + "): " + x.get_str());
    }
  r.add("summand_defect_integral", !bad, bad);

  bad.reset();
  std::optional<std::string> bad_model;
  for (int l = 0; l <= max_lambda; ++l)
    for (int w : {1, -1}) {
      const GradedDecomposition d{{l, w}};
      if (dual(dual(d)) != d) note(d.to_string());
      const GradedDecomposition model = decompose(dual_module(build_irreducible(l, w)));
      if (model != dual(d) && !bad_model)
        bad_model = d.to_string() + ": model " + model.to_string() + ", formula " + dual(d).to_string();
    }
  r.add("dual_involution", !bad, bad);
  r.add("dual_model_matches_formula", !bad_model, bad_model);

  bad.reset();
  std::mt19937_64 rng2(seed + 1);
  for (int t = 0; t < trials; ++t) {
    const GradedDecomposition d = random_decomposition(rng2, max_lambda, max_summands);
    if (!verify_delta_identity(d)) note(d.to_string() + ": value " + std::to_string(delta_identity_value(d)));
  }
  r.add("delta_identity", !bad, bad);
  return r;
}

// ------------------------------------------------------------ symplectic

inline VerificationReport run_symplectic(std::size_t dim, int trials, std::uint64_t seed) {
  if (dim == 0 || dim % 2 != 0 || dim > 40) throw Error("--dim must be a positive even number up to 40");
  if (trials < 0) throw Error("--trials must be non-negative");
  const std::size_t m = dim / 2;
  const auto space = SymplecticSpace<Rational>::standard(m);
  VerificationReport r{"symplectic", seed, {}, 0};
  std::mt19937_64 rng(seed);
  std::optional<std::string> b_dim, b_double, b_co, b_half, b_forms;
  std::size_t co = 0, weak = 0;
  for (int t = 0; t < trials; ++t) {
    const Subspace<Rational> z = random_test_subspace(rng, space);
    const std::string wit = "Z spanned by columns of " + z.basis().to_string();
    const Subspace<Rational> perp = symplectic_complement(space, z);
    if (z.dim() + perp.dim() != dim && !b_dim) b_dim = wit;
    if (symplectic_complement(space, perp) != z && !b_double) b_double = wit;
    const bool c = is_coisotropic_linear(space, z);
    const bool w = is_weakly_coisotropic_linear(space, z);
    co += c;
    weak += w;
    if (c && !w && !b_co) b_co = wit;
    if (w && z.dim() < m && !b_half) b_half = wit;
    if (w != is_weakly_coisotropic_dual_form(space, z) && !b_forms) b_forms = wit;
  }
  r.add("complement_dimension", !b_dim, b_dim);
  r.add("double_complement", !b_double, b_double);
  r.add("coisotropic_implies_weakly_coisotropic", !b_co,
        b_co ? b_co : std::optional<std::string>(std::to_string(co) + " coisotropic of " + std::to_string(trials)));
  r.add("weakly_coisotropic_has_half_dimension", !b_half,
        b_half ? b_half
               : std::optional<std::string>(std::to_string(weak) + " weakly coisotropic of " + std::to_string(trials)));
  r.add("weakly_coisotropic_forms_agree", !b_forms, b_forms);
  return r;
}

// ------------------------------------------------------------------ pairs

/// Checks on one pair over a list of nilpotent representatives.
inline VerificationReport run_pair_on(const SymmetricPair& p, const std::vector<NilpotentRep>& reps,
                                      std::uint64_t seed, const std::string& family = "") {
  VerificationReport r{"pair:" + p.name(), seed, {}, 0};
  r.add("validated", true,
        "dim g=" + std::to_string(p.g().dim()) + " dim h=" + std::to_string(p.h().dim()) +
            " dim g^sigma=" + std::to_string(p.gsigma().dim()) + " representatives=" + std::to_string(reps.size()));
  const NegativeDefectReport nd = check_negative_distinguished_defect(p, reps);
  std::string dist_labels;
  std::optional<std::string> b_def, b_margin, b_delta, b_triple;
  std::size_t n_dist = 0;
  for (std::size_t k = 0; k < nd.findings.size(); ++k) {
    const RepFinding& f = nd.findings[k];
    const std::string wit = f.label + ": x = " + reps[k].x.to_string() + ", defect " + std::to_string(f.defect) +
                            ", margin " + std::to_string(f.margin) + ", decomposition " + f.decomposition.to_string();
    if (!f.delta_identity && !b_delta) b_delta = wit;
    if (!f.triple_independent && !b_triple) b_triple = wit;
    if (!f.distinguished) continue;
    ++n_dist;
    dist_labels += (dist_labels.empty() ? "" : " ") + f.label + "(defect " + std::to_string(f.defect) + ", margin " +
                   std::to_string(f.margin) + ")";
    if ((!f.has_triple || f.defect >= 0) && !b_def) b_def = wit;
    if ((!f.has_triple || f.margin <= 0) && !b_margin) b_margin = wit;
  }
  if (n_dist == 0) {
    r.skip("negative_distinguished_defect", "no distinguished representative among " + std::to_string(reps.size()));
    r.skip("positive_margin", "no distinguished representative");
  } else {
    r.add("negative_distinguished_defect", !b_def, b_def ? b_def : std::optional<std::string>(dist_labels));
    r.add("positive_margin", !b_margin, b_margin);
  }
  r.add("delta_identity", !b_delta, b_delta);
  r.add("defect_independent_of_triple", !b_triple, b_triple);
  if (family == "diag-sl") {
    const std::size_t n = p.g().matrix_size() / 2;
    std::optional<std::string> bad;
    for (const auto& f : nd.findings)
      if (f.distinguished != (f.label == std::to_string(n)) && !bad)
        bad = "partition " + f.label + (f.distinguished ? " is" : " is not") + " distinguished";
    r.add("distinguished_equals_regular", !bad, bad);
  }
  return r;
}

inline std::vector<NilpotentRep> representatives_for(const SymmetricPair& p, const std::string& family,
                                                     std::size_t size, std::uint64_t seed) {
  if (family == "diag-sl" || family == "sl-so") return nilpotent_representatives(p, family, size);
  return sampled_representatives(p, seed);
}

inline VerificationReport run_pair_family(const std::string& family, std::size_t size, std::uint64_t seed) {
  const SymmetricPair p = catalog(family, size);
  VerificationReport r = run_pair_on(p, representatives_for(p, family, size, seed), seed, family);
  r.suite = "pair:" + family + "(" + std::to_string(size) + ")";
  return r;
}

// --------------------------------------------------------------- keylemma

inline const std::vector<long>& keylemma_primes() {
  static const std::vector<long> primes{2, 3, 5, 7, 11, 13};
  return primes;
}

inline constexpr double keylemma_point_cap = 5e6;

namespace detail {

template <std::uint32_t P>
FVanishingResult f_vanishes_for(std::size_t n, std::size_t i) {
  return verify_f_vanishes(KeyLemmaInstance<Fp<P>>(n), i);
}

inline FVanishingResult f_vanishes_dispatch(long p, std::size_t n, std::size_t i) {
  switch (p) {
    case 2: return f_vanishes_for<2>(n, i);
    case 3: return f_vanishes_for<3>(n, i);
    case 5: return f_vanishes_for<5>(n, i);
    case 7: return f_vanishes_for<7>(n, i);
    case 11: return f_vanishes_for<11>(n, i);
    case 13: return f_vanishes_for<13>(n, i);
    default: throw Unsupported("prime " + std::to_string(p) + " is not supported");
  }
}

}  // namespace detail

inline VerificationReport run_keylemma(std::size_t n, std::vector<long> primes) {
  if (n < 1 || n > 4) throw Error("--n must be in 1..4");
  if (primes.empty()) throw Error("at least one --prime is required");
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) throw Error("duplicate --prime");
  for (long p : primes) {
    const auto& ok = keylemma_primes();
    if (std::find(ok.begin(), ok.end(), p) == ok.end())
      throw Error("--prime must be one of 2, 3, 5, 7, 11, 13 (got " + std::to_string(p) + ")");
    if (std::pow(static_cast<double>(p), 2.0 * static_cast<double>(n)) > keylemma_point_cap)
      throw Error("p^(2n) exceeds the enumeration cap for p = " + std::to_string(p));
  }
  VerificationReport r{"keylemma:n=" + std::to_string(n), 0, {}, 0};
  std::map<std::size_t, std::map<long, std::size_t>> counts;
  for (long p : primes)
    for (std::size_t i = 1; i < n; ++i) {
      const FVanishingResult f = detail::f_vanishes_dispatch(p, n, i);
      counts[i][p] = f.members;
      const std::string name = "f_vanishes[F" + std::to_string(p) + ",L" + std::to_string(i) + std::to_string(i) + "]";
      if (f.ok())
        r.add(name, true, std::to_string(f.members) + " members of R_A among " + std::to_string(f.points) + " points");
      else
        r.add(name, false, std::to_string(f.violations.size()) + " violations; first: " + f.violations.front());
    }
  if (n < 2) {
    r.skip("f_vanishes", "no pieces L_ii with 1 <= i <= n-1");
    r.skip("dimension_estimate", "no pieces L_ii with 1 <= i <= n-1");
  } else if (primes.size() < 3) {
    r.skip("dimension_estimate", "needs counts over at least 3 primes");
  } else {
    std::string wit;
    bool ok = true, decided = true;
    for (const auto& [i, c] : counts) {
      try {
        const long d = estimate_dimension(c);
        ok = ok && d < static_cast<long>(2 * n);
        wit += (wit.empty() ? "" : "; ") + std::string("L") + std::to_string(i) + std::to_string(i) + ": " +
               std::to_string(d) + " < " + std::to_string(2 * n);
      } catch (const Inconclusive& e) {
        decided = false;
        wit += (wit.empty() ? "" : "; ") + std::string("L") + std::to_string(i) + std::to_string(i) + ": " + e.what();
      }
    }
    if (decided)
      r.add("dimension_estimate", ok, wit);
    else
      r.skip("dimension_estimate", wit);
  }
  const KeyLemmaInstance<Rational> inst(n);
  const FilterResult filt = verify_Lii_filter(inst);
  std::string surv;
  for (const auto& [i, j] : filt.survivors) surv += (surv.empty() ? "L" : " L") + std::to_string(i) + std::to_string(j);
  r.add("weakly_coisotropic_survivors", filt.ok, surv.empty() ? "none" : surv);
  std::optional<std::string> bad;
  for (std::size_t i = 1; i < n; ++i) {
    const auto u = verify_upper_triangular_symbolic(inst, i);
    if (!u.upper && !bad) bad = "i=" + std::to_string(i) + ": a solution B is not upper triangular";
    if (!u.entry_vanishes && !bad) bad = "i=" + std::to_string(i) + ": [A,B]_{i,i+1} != 0 for nilpotent B";
  }
  if (n < 2)
    r.skip("upper_triangular", "no block shapes for n = 1");
  else
    r.add("upper_triangular", !bad, bad);
  return r;
}

// -------------------------------------------------------------------- all

struct PairSweepEntry {
  std::string family;
  std::size_t lo, hi;
};

/// Fixed order of `verify all`.
inline const std::vector<PairSweepEntry>& default_pair_sweep() {
  static const std::vector<PairSweepEntry> sweep{{"diag-sl", 2, 4},  {"sl-so", 2, 4},    {"sl-slsl", 1, 3},
                                                 {"sp-gl", 1, 3},    {"so-so-k0", 2, 3}, {"so-so-k1", 1, 3},
                                                 {"so-so-k2", 1, 3}};
  return sweep;
}

inline VerificationReport run_all(std::uint64_t seed) {
  VerificationReport r{"all", seed, {}, 0};
  r.absorb(run_sl2(8, 100, seed));
  r.absorb(run_symplectic(8, 500, seed));
  for (const auto& e : default_pair_sweep())
    for (std::size_t s = e.lo; s <= e.hi; ++s) r.absorb(run_pair_family(e.family, s, seed));
  r.absorb(run_keylemma(2, {3, 5, 7}));
  r.absorb(run_keylemma(3, {3, 5, 7}));
  return r;
}

}  // namespace coiso
