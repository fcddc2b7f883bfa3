#pragma once

// Parameter arithmetic: q a primitive e-th root of unity (or q = 1), and
// Q_i = q^{f_i}. Everything the classification reads is derived from here.

#include <optional>
#include <string>
#include <vector>

#include "aksch/extended_int.hpp"

namespace aksch {

class ParameterSet {
 public:
  // q != 1 with multiplicative order e (ExtendedInt::infinity() when q is not
  // a root of unity). Finite e needs e >= 2 and 0 <= f_i < e; infinite e
  // needs f_i >= 0. char_p is 0 or a prime not dividing e.
  static ParameterSet root_of_unity(ExtendedInt e, std::vector<long> f, long char_p = 0);
  // q = Q_1 = ... = Q_r = 1.
  static ParameterSet q_one(int r, long char_p = 0);

  int r() const { return static_cast<int>(f_.size()); }
  const ExtendedInt& e() const { return e_; }
  const std::vector<long>& f() const { return f_; }
  long f(int k) const { return f_.at(static_cast<std::size_t>(k - 1)); }  // 1-based
  long char_p() const { return char_p_; }
  bool q_is_one() const { return q_is_one_; }

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

 private:
  ExtendedInt e_ = ExtendedInt::infinity();
  std::vector<long> f_;
  long char_p_ = 0;
  bool q_is_one_ = false;
};

bool is_prime(long p);

struct SpreadInvariants {
  std::vector<ExtendedInt> f_sorted;  // f'_1 .. f'_{2r}, wrapped half = e + f'_i
  std::vector<ExtendedInt> gaps;      // g'_1 .. g'_r
  ExtendedInt f_plus1;
  ExtendedInt f_plus2;
  ExtendedInt g_min;
};

// Precondition: not q_is_one.
SpreadInvariants spread_invariants(const ParameterSet& p);

bool is_semisimple(int n, const ParameterSet& p);

enum class VerdictKind { Semisimple, Finite, Infinite, Wild, OutOfScope };
std::string to_string(VerdictKind k);
inline bool is_finite_type(VerdictKind k) {
  return k == VerdictKind::Semisimple || k == VerdictKind::Finite;
}

struct Verdict {
  VerdictKind kind = VerdictKind::OutOfScope;
  // Absent when not applicable (q = 1).
  std::optional<ExtendedInt> e;
  std::optional<ExtendedInt> two_f1_plus4;
  std::optional<ExtendedInt> f2_plus1;
  std::optional<ExtendedInt> g_plus2;
  std::string note;
};

Verdict classify(int n, const ParameterSet& p);

// Parameters split into orbits whose cross products q^a Q_i - Q_j (|a| < n)
// are all nonzero. The separation is the caller's responsibility.
using OrbitSpec = std::vector<ParameterSet>;

Verdict classify_multi_orbit(int n, const OrbitSpec& orbits);

// Smallest n' >= 1 at which the orbit's algebra stops being semisimple, or
// n_max + 1 if it is semisimple throughout 1..n_max.
int semisimplicity_threshold(int n_max, const ParameterSet& p);

}  // namespace aksch
