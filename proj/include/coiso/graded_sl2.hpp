#pragma once

// Graded sl2 representations: V = V_0 + V_1 with h even and e, f odd.
// Irreducible graded modules are indexed by (lambda, w) where lambda is the
// highest weight and w = +1 / -1 records whether the highest-weight vector is
// even / odd.

#include <compare>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "coiso/errors.hpp"
#include "coiso/linalg.hpp"

namespace coiso {

struct Summand {
  int lambda = 0;
  int w = 1;
  auto operator<=>(const Summand&) const = default;
};

/// Multiset of irreducible graded summands.
class GradedDecomposition {
 public:
  GradedDecomposition() = default;
  GradedDecomposition(std::initializer_list<Summand> summands) {
    for (const auto& s : summands) add(s);
  }

  void add(Summand s, std::size_t count = 1) {
    if (s.lambda < 0 || (s.w != 1 && s.w != -1))
      throw Error("summand needs lambda >= 0 and w = +1 or -1");
    if (count) multiplicity_[s] += count;
  }

  const std::map<Summand, std::size_t>& multiplicities() const { return multiplicity_; }
  bool empty() const { return multiplicity_.empty(); }

  std::size_t dim() const {
    std::size_t d = 0;
    for (const auto& [s, m] : multiplicity_) d += m * static_cast<std::size_t>(s.lambda + 1);
    return d;
  }

  std::size_t odd_dim() const;

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [s, m] : multiplicity_) {
      if (!first) out += ", ";
      first = false;
      out += "(" + std::to_string(s.lambda) + "," + (s.w > 0 ? "+1" : "-1") + ")";
      if (m > 1) out += "x" + std::to_string(m);
    }
    return out + "}";
  }

  friend bool operator==(const GradedDecomposition&, const GradedDecomposition&) = default;

 private:
  std::map<Summand, std::size_t> multiplicity_;
};

/// Odd-part dimension of V_lambda^w: the weight string alternates parity
/// starting from the highest-weight vector.
inline std::size_t odd_dimension(Summand s) {
  const auto len = static_cast<std::size_t>(s.lambda + 1);
  return s.w > 0 ? len / 2 : (len + 1) / 2;
}

inline std::size_t GradedDecomposition::odd_dim() const {
  std::size_t d = 0;
  for (const auto& [s, m] : multiplicity_) d += m * odd_dimension(s);
  return d;
}

/// Representation matrices of e, h, f over Q plus the parity splitting.
class GradedSl2Module {
 public:
  GradedSl2Module(Matrix<Rational> e, Matrix<Rational> h, Matrix<Rational> f,
                  Subspace<Rational> even, Subspace<Rational> odd)
      : e_(std::move(e)), h_(std::move(h)), f_(std::move(f)), even_(std::move(even)),
        odd_(std::move(odd)) {
    const std::size_t d = e_.rows();
    for (const auto* m : {&e_, &h_, &f_})
      if (!m->is_square() || m->rows() != d) throw DimensionMismatch("e, h, f must be d x d");
    if (even_.ambient_dim() != d || odd_.ambient_dim() != d)
      throw DimensionMismatch("parity subspaces must live in the module");
    if (commutator(h_, e_) != e_ * Rational(2))
      throw InvariantViolation("bracket_he", "[h,e] != 2e");
    if (commutator(h_, f_) != f_ * Rational(-2))
      throw InvariantViolation("bracket_hf", "[h,f] != -2f");
    if (commutator(e_, f_) != h_) throw InvariantViolation("bracket_ef", "[e,f] != h");
    if (even_.dim() + odd_.dim() != d || sum(even_, odd_).dim() != d)
      throw InvariantViolation("parity_splitting", "V_0 and V_1 are not complementary");
    if (!odd_.contains(image(e_, even_)) || !even_.contains(image(e_, odd_)) ||
        !odd_.contains(image(f_, even_)) || !even_.contains(image(f_, odd_)))
      throw InvariantViolation("odd_generators", "e or f does not swap V_0 and V_1");
    if (!even_.contains(image(h_, even_)) || !odd_.contains(image(h_, odd_)))
      throw InvariantViolation("even_h", "h does not preserve V_0 and V_1");
  }

  std::size_t dim() const { return e_.rows(); }
  const Matrix<Rational>& e() const { return e_; }
  const Matrix<Rational>& h() const { return h_; }
  const Matrix<Rational>& f() const { return f_; }
  const Subspace<Rational>& even() const { return even_; }
  const Subspace<Rational>& odd() const { return odd_; }

 private:
  Matrix<Rational> e_, h_, f_;
  Subspace<Rational> even_, odd_;
};

/// Weight-basis model v_0, ..., v_lambda with h v_k = (lambda - 2k) v_k,
/// f v_k = v_{k+1}, e v_k = k (lambda - k + 1) v_{k-1}; v_k has parity p + k
/// where w = (-1)^p.
inline GradedSl2Module build_irreducible(int lambda, int w) {
  if (lambda < 0 || (w != 1 && w != -1)) throw Error("build_irreducible needs lambda >= 0, w = +-1");
  const auto d = static_cast<std::size_t>(lambda + 1);
  Matrix<Rational> e(d, d), h(d, d), f(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const long kk = static_cast<long>(k);
    h(k, k) = Rational(lambda - 2 * kk);
    if (k + 1 < d) f(k + 1, k) = Rational(1);
    if (k > 0) e(k - 1, k) = Rational(kk * (lambda - kk + 1));
  }
  std::vector<Vector<Rational>> even, odd;
  const std::size_t p = w > 0 ? 0 : 1;
  for (std::size_t k = 0; k < d; ++k) {
    Vector<Rational> v(d, Rational(0));
    v[k] = 1;
    ((k + p) % 2 == 0 ? even : odd).push_back(v);
  }
  return GradedSl2Module(e, h, f, Subspace<Rational>::span(d, even), Subspace<Rational>::span(d, odd));
}

namespace detail {

inline Subspace<Rational> embed(const Subspace<Rational>& u, std::size_t offset, std::size_t total) {
  std::vector<Vector<Rational>> vs;
  for (const auto& b : u.basis_vectors()) {
    Vector<Rational> v(total, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) v[offset + i] = b[i];
    vs.push_back(std::move(v));
  }
  return Subspace<Rational>::span(total, vs);
}

}  // namespace detail

inline GradedSl2Module direct_sum(const std::vector<GradedSl2Module>& parts) {
  std::vector<Matrix<Rational>> es, hs, fs;
  std::size_t total = 0;
  for (const auto& m : parts) {
    es.push_back(m.e());
    hs.push_back(m.h());
    fs.push_back(m.f());
    total += m.dim();
  }
  Subspace<Rational> even = Subspace<Rational>::zero(total), odd = Subspace<Rational>::zero(total);
  std::size_t offset = 0;
  for (const auto& m : parts) {
    even = sum(even, detail::embed(m.even(), offset, total));
    odd = sum(odd, detail::embed(m.odd(), offset, total));
    offset += m.dim();
  }
  return GradedSl2Module(block_diagonal(es), block_diagonal(hs), block_diagonal(fs), even, odd);
}

/// The same module written in the basis given by the columns of `p`
/// (new coordinates x' = p x).
inline GradedSl2Module change_basis(const GradedSl2Module& m, const Matrix<Rational>& p,
                                    const Matrix<Rational>& p_inverse) {
  if (p * p_inverse != Matrix<Rational>::identity(m.dim())) throw Error("change_basis: p_inverse is not the inverse of p");
  return GradedSl2Module(p * m.e() * p_inverse, p * m.h() * p_inverse, p * m.f() * p_inverse,
                         image(p, m.even()), image(p, m.odd()));
}

/// Dual module: X acts by -X^T on dual coordinates; the even part of V* is
/// the annihilator of V_1 and the odd part the annihilator of V_0.
inline GradedSl2Module dual_module(const GradedSl2Module& m) {
  return GradedSl2Module(-m.e().transpose(), -m.h().transpose(), -m.f().transpose(),
                         annihilator(m.odd()), annihilator(m.even()));
}

/// Trace of an operator restricted to an invariant subspace.
inline Rational restricted_trace(const Matrix<Rational>& op, const Subspace<Rational>& k) {
  Rational t(0);
  for (std::size_t j = 0; j < k.dim(); ++j) {
    const auto coords = k.coordinates(op * k.basis_vector(j));
    if (!coords) throw InvalidModule("subspace is not invariant under the operator");
    t += (*coords)[j];
  }
  return t;
}

/// Highest-weight vectors (ker e) split by parity and h-eigenvalue.
inline GradedDecomposition decompose(const GradedSl2Module& m) {
  const Subspace<Rational> ker_e = kernel(m.e());
  GradedDecomposition out;
  std::size_t found = 0;
  for (int parity = 0; parity < 2; ++parity) {
    const Subspace<Rational> part = intersection(ker_e, parity == 0 ? m.even() : m.odd());
    std::size_t counted = 0;
    for (std::size_t lambda = 0; lambda < m.dim() && counted < part.dim(); ++lambda) {
      Matrix<Rational> shifted = m.h();
      for (std::size_t i = 0; i < m.dim(); ++i) shifted(i, i) -= Rational(static_cast<long>(lambda));
      const std::size_t mult = intersection(part, kernel(shifted)).dim();
      if (mult) out.add({static_cast<int>(lambda), parity == 0 ? 1 : -1}, mult);
      counted += mult;
    }
    if (counted != part.dim())
      throw InvalidModule("h is not diagonalizable with nonnegative integer eigenvalues on ker e");
    found += counted;
  }
  if (found != ker_e.dim() || out.dim() != m.dim())
    throw InvalidModule("highest-weight data does not account for the whole module");
  return out;
}

inline GradedSl2Module module_from_decomposition(const GradedDecomposition& d) {
  std::vector<GradedSl2Module> parts;
  for (const auto& [s, mult] : d.multiplicities())
    for (std::size_t i = 0; i < mult; ++i) parts.push_back(build_irreducible(s.lambda, s.w));
  if (parts.empty()) throw Error("empty decomposition has no module");
  return direct_sum(parts);
}

/// Tr(h on the even part of ker e) - dim V_1.
inline long defect_definitional(const GradedSl2Module& m) {
  const Subspace<Rational> even_kernel = intersection(kernel(m.e()), m.even());
  const Rational t = restricted_trace(m.h(), even_kernel) - Rational(static_cast<long>(m.odd().dim()));
  if (t.get_den() != 1) throw InvalidModule("non-integral trace of h");
  return t.get_num().get_si();
}

/// Closed-form defect of one irreducible summand, kept as an exact rational:
/// (lambda w + w (1 + (-1)^lambda) / 2 - 1) / 2.
inline Rational summand_defect(Summand s) {
  const long even_lambda = s.lambda % 2 == 0 ? 1 : 0;
  Rational r(mpz_class(static_cast<long>(s.lambda) * s.w + s.w * even_lambda - 1), mpz_class(2));
  r.canonicalize();
  return r;
}

inline Rational defect_closed_form_exact(const GradedDecomposition& d) {
  Rational total(0);
  for (const auto& [s, mult] : d.multiplicities())
    total += summand_defect(s) * Rational(static_cast<long>(mult));
  return total;
}

inline long defect_closed_form(const GradedDecomposition& d) {
  const Rational total = defect_closed_form_exact(d);
  if (total.get_den() != 1)
    throw NonIntegralDefect("closed-form defect " + total.get_str() + " is not an integer");
  return total.get_num().get_si();
}

/// (V_lambda^w)^* = V_lambda^{w (-1)^lambda}.
inline GradedDecomposition dual(const GradedDecomposition& d) {
  GradedDecomposition out;
  for (const auto& [s, mult] : d.multiplicities())
    out.add({s.lambda, s.lambda % 2 == 0 ? s.w : -s.w}, mult);
  return out;
}

/// Sum of (lambda + 2) over summands with w (-1)^lambda = -1, minus dim V_1.
inline long delta(const GradedDecomposition& d) {
  long total = 0;
  for (const auto& [s, mult] : d.multiplicities()) {
    const int sign = s.lambda % 2 == 0 ? s.w : -s.w;
    if (sign == -1) total += static_cast<long>(mult) * (s.lambda + 2);
  }
  return total - static_cast<long>(d.odd_dim());
}

inline long delta_identity_value(const GradedDecomposition& d) {
  const GradedDecomposition dd = dual(d);
  return delta(d) + delta(dd) + defect_closed_form(d) + defect_closed_form(dd);
}

inline bool verify_delta_identity(const GradedDecomposition& d) { return delta_identity_value(d) == 0; }

/// Seeded random decomposition with 1..max_summands summands, lambda <= max_lambda.
template <class Rng>
GradedDecomposition random_decomposition(Rng& rng, int max_lambda, int max_summands) {
  std::uniform_int_distribution<int> count(1, max_summands), lam(0, max_lambda), sign(0, 1);
  GradedDecomposition d;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const int l = lam(rng);
    d.add({l, sign(rng) ? 1 : -1});
  }
  return d;
}

}  // namespace coiso
