#include "aksch/tseries.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>

#include "aksch/errors.hpp"

namespace aksch {

namespace {

long checked_add(long a, long b) {
  long out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow");
  return out;
}

long checked_mul(long a, long b) {
  long out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow");
  return out;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long a = num[k];
    quot[k - dn] = a;
    if (a == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] = checked_add(num[k - dn + i], -checked_mul(a, den[i]));
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return quot;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(long n) {
  if (n < 1) throw InvalidArgument("cyclotomic polynomial index must be positive");
  std::vector<long> poly(static_cast<std::size_t>(n + 1), 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  return poly;
}

long generalized_binomial(long d, long s) {
  if (s < 0) return 0;
  // C(d, s) = d (d-1) ... (d-s+1) / s!, built so every prefix is an integer.
  __int128 acc = 1;
  for (long i = 0; i < s; ++i) {
    acc = acc * (d - i);
    acc /= (i + 1);
    if (acc > static_cast<__int128>(LONG_MAX) || acc < static_cast<__int128>(LONG_MIN))
      throw std::overflow_error("binomial coefficient overflow");
  }
  return static_cast<long>(acc);
}

// ----------------------------------------------------------- CoefficientRing

CoefficientRing::CoefficientRing(ExtendedInt e, long char_p) : e_(e), char_p_(char_p) {
  if (e_.is_finite()) {
    if (e_.value() < 1) throw InvalidArgument("e must be positive");
    phi_ = cyclotomic_polynomial(e_.value());
  }
}

long CoefficientRing::reduce_int(long v) const {
  if (char_p_ == 0) return v;
  return ((v % char_p_) + char_p_) % char_p_;
}

CoefficientRing::Element CoefficientRing::normalize(Element raw) const {
  Element out;
  if (e_.is_infinite()) {
    for (auto& [k, c] : raw) {
      const long v = reduce_int(c);
      if (v != 0) out[k] = v;
    }
    return out;
  }
  const long e = e_.value();
  std::vector<long> dense(static_cast<std::size_t>(e), 0);
  for (auto& [k, c] : raw) {
    const auto idx = static_cast<std::size_t>(((k % e) + e) % e);
    dense[idx] = reduce_int(checked_add(dense[idx], c));
  }
  const std::size_t deg = phi_.size() - 1;
  for (std::size_t k = dense.size(); k-- > deg;) {
    const long a = dense[k];
    if (a == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i)
      dense[k - deg + i] = reduce_int(checked_add(dense[k - deg + i], -checked_mul(a, phi_[i])));
  }
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) out[static_cast<long>(k)] = dense[k];
  return out;
}

CoefficientRing::Element CoefficientRing::monomial(long coeff, long q_exp) const {
  return normalize({{q_exp, coeff}});
}

CoefficientRing::Element CoefficientRing::add(const Element& a, const Element& b) const {
  Element raw = a;
  for (const auto& [k, c] : b) raw[k] = checked_add(raw[k], c);
  return normalize(std::move(raw));
}

CoefficientRing::Element CoefficientRing::scale(const Element& a, long k) const {
  Element raw;
  for (const auto& [exp, c] : a) raw[exp] = checked_mul(c, k);
  return normalize(std::move(raw));
}

CoefficientRing::Element CoefficientRing::multiply(const Element& a, const Element& b) const {
  Element raw;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) raw[ka + kb] = checked_add(raw[ka + kb], checked_mul(ca, cb));
  return normalize(std::move(raw));
}

std::string CoefficientRing::to_string(const Element& a) const {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : a) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const long mag = c < 0 ? -c : c;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'q';
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

// ------------------------------------------------------------------- TSeries

TSeries::TSeries(std::shared_ptr<const CoefficientRing> ring, int truncation)
    : ring_(std::move(ring)), truncation_(truncation) {
  if (!ring_) throw InvalidArgument("TSeries needs a coefficient ring");
  if (truncation_ < 1) throw InvalidArgument("truncation order must be positive");
}

TSeries TSeries::constant(std::shared_ptr<const CoefficientRing> ring, int truncation, long coeff,
                          long q_exp) {
  return term(std::move(ring), truncation, coeff, q_exp, 0);
}

TSeries TSeries::term(std::shared_ptr<const CoefficientRing> ring, int truncation, long coeff,
                      long q_exp, int t_exp) {
  TSeries s(ring, truncation);
  if (t_exp < 0) throw InvalidArgument("negative t exponent");
  if (t_exp < truncation) s.set(t_exp, ring->monomial(coeff, q_exp));
  return s;
}

void TSeries::set(int t_exp, Coefficient c) {
  if (ring_->is_zero(c)) {
    terms_.erase(t_exp);
  } else {
    terms_[t_exp] = std::move(c);
  }
}

TSeries::Coefficient TSeries::coefficient(int t_exp) const {
  auto it = terms_.find(t_exp);
  return it == terms_.end() ? Coefficient{} : it->second;
}

TSeries TSeries::operator+(const TSeries& o) const {
  if (truncation_ != o.truncation_) throw InvalidArgument("TSeries truncation orders differ");
  TSeries out = *this;
  for (const auto& [k, c] : o.terms_) out.set(k, ring_->add(out.coefficient(k), c));
  return out;
}

TSeries TSeries::operator-(const TSeries& o) const {
  if (truncation_ != o.truncation_) throw InvalidArgument("TSeries truncation orders differ");
  TSeries out = *this;
  for (const auto& [k, c] : o.terms_) out.set(k, ring_->add(out.coefficient(k), ring_->negate(c)));
  return out;
}

TSeries TSeries::operator*(const TSeries& o) const {
  if (truncation_ != o.truncation_) throw InvalidArgument("TSeries truncation orders differ");
  TSeries out(ring_, truncation_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      if (ka + kb >= truncation_) break;
      out.set(ka + kb, ring_->add(out.coefficient(ka + kb), ring_->multiply(ca, cb)));
    }
  return out;
}

std::optional<int> TSeries::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::string TSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << ring_->to_string(c) << ')';
    if (k > 0) os << "*t^" << k;
  }
  os << " + O(t^" << truncation_ << ')';
  return os.str();
}

}  // namespace aksch
