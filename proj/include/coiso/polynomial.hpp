#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "coiso/errors.hpp"
#include "coiso/matrix.hpp"

namespace coiso {

/// Sparse multivariate polynomial in a fixed number of variables.
template <ExactField S>
class MultiPolynomial {
 public:
  using Exponent = std::vector<unsigned>;

  explicit MultiPolynomial(std::size_t nvars) : nvars_(nvars) {}

  static MultiPolynomial constant(std::size_t nvars, const S& c) {
    MultiPolynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static MultiPolynomial variable(std::size_t nvars, std::size_t i) {
    MultiPolynomial p(nvars);
    Exponent e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, S(1));
    return p;
  }

  std::size_t num_vars() const { return nvars_; }
  const std::map<Exponent, S>& terms() const { return terms_; }

  MultiPolynomial& add_term(const Exponent& e, const S& c) {
    if (e.size() != nvars_) throw DimensionMismatch("exponent length mismatch");
    S& slot = terms_[e];
    slot += c;
    if (is_zero(slot)) terms_.erase(e);
    return *this;
  }

  S evaluate(const Vector<S>& x) const {
    if (x.size() != nvars_) throw DimensionMismatch("evaluation point has wrong length");
    S total(0);
    for (const auto& [e, c] : terms_) {
      S term = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) term *= x[i];
      total += term;
    }
    return total;
  }

  MultiPolynomial derivative(std::size_t var) const {
    MultiPolynomial d(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(var) == 0) continue;
      Exponent f = e;
      --f[var];
      d.add_term(f, c * S(static_cast<long>(e[var])));
    }
    return d;
  }

  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomials in different rings");
    MultiPolynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

 private:
  std::size_t nvars_;
  std::map<Exponent, S> terms_;
};

/// Jacobian of a polynomial system at x: one row per polynomial.
template <ExactField S>
Matrix<S> jacobian(const std::vector<MultiPolynomial<S>>& polys, const Vector<S>& x) {
  Matrix<S> j(polys.size(), x.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) j(r, c) = polys[r].derivative(c).evaluate(x);
  return j;
}

}  // namespace coiso
