#pragma once

// Truncated power series in t whose coefficients live in the residue field's
// image of Z[q]: Z[q]/(Phi_e(q)) for finite e, Laurent polynomials in q for
// infinite e, with integer multiplicities taken mod p in characteristic p.
//
// Reducing modulo the cyclotomic polynomial (rather than only reducing
// exponents mod e) is what makes identities like 1 + q^{e/2} = 0 visible.
// In characteristic p > 0 the reduction is in F_p[q]/(Phi_e); an element
// that is nonzero there but vanishes in one factor field of that ring is not
// detected.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aksch/extended_int.hpp"

namespace aksch {

// Integer cyclotomic polynomial, lowest degree first. Phi_1 = x - 1.
std::vector<long> cyclotomic_polynomial(long n);

class CoefficientRing {
 public:
  CoefficientRing(ExtendedInt e, long char_p);

  using Element = std::map<long, long>;  // q-exponent -> coefficient, normalized

  Element monomial(long coeff, long q_exp) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, long k) const;
  Element multiply(const Element& a, const Element& b) const;
  Element negate(const Element& a) const { return scale(a, -1); }
  bool is_zero(const Element& a) const { return a.empty(); }
  std::string to_string(const Element& a) const;

  const ExtendedInt& e() const { return e_; }
  long char_p() const { return char_p_; }

 private:
  Element normalize(Element raw) const;
  long reduce_int(long v) const;

  ExtendedInt e_;
  long char_p_ = 0;
  std::vector<long> phi_;  // monic, size deg+1; empty for infinite e
};

class TSeries {
 public:
  using Coefficient = CoefficientRing::Element;

  TSeries(std::shared_ptr<const CoefficientRing> ring, int truncation);

  static TSeries constant(std::shared_ptr<const CoefficientRing> ring, int truncation, long coeff, long q_exp);
  // coeff * q^{q_exp} * t^{t_exp}; dropped when t_exp >= truncation.
  static TSeries term(std::shared_ptr<const CoefficientRing> ring, int truncation, long coeff, long q_exp, int t_exp);

  TSeries operator+(const TSeries& o) const;
  TSeries operator-(const TSeries& o) const;
  TSeries operator*(const TSeries& o) const;

  // Least t-exponent with a nonzero coefficient; nullopt if the series
  // vanishes below the truncation order.
  std::optional<int> order() const;
  bool is_zero() const { return terms_.empty(); }

  const std::map<int, Coefficient>& terms() const { return terms_; }
  Coefficient coefficient(int t_exp) const;
  int truncation() const { return truncation_; }
  const CoefficientRing& ring() const { return *ring_; }
  std::string to_string() const;

 private:
  void set(int t_exp, Coefficient c);

  std::shared_ptr<const CoefficientRing> ring_;
  int truncation_;
  std::map<int, Coefficient> terms_;  // no zero coefficients stored
};

// Generalized binomial coefficient C(d, s) for any integer d and s >= 0.
// Throws std::overflow_error past 64 bits.
long generalized_binomial(long d, long s);

}  // namespace aksch
