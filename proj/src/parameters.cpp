#include "aksch/parameters.hpp"

#include <algorithm>
#include <stdexcept>

#include "aksch/errors.hpp"

namespace aksch {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

ParameterSet ParameterSet::root_of_unity(ExtendedInt e, std::vector<long> f, long char_p) {
  if (f.empty()) throw InvalidArgument("at least one parameter Q_i is required (r >= 1)");
  if (char_p != 0 && !is_prime(char_p)) throw InvalidArgument("characteristic must be 0 or a prime");
  if (e.is_finite()) {
    if (e.value() < 2) throw InvalidArgument("e must be at least 2 (use the q = 1 case for e = 1)");
    for (long fi : f)
      if (fi < 0 || fi >= e.value())
        throw InvalidArgument("exponents f_i must satisfy 0 <= f_i <= e-1");
    if (char_p != 0 && e.value() % char_p == 0)
      throw InvalidArgument("no primitive e-th root of unity exists when the characteristic divides e");
  } else {
    for (long fi : f)
      if (fi < 0) throw InvalidArgument("exponents f_i must be non-negative");
  }
  ParameterSet p;
  p.e_ = e;
  p.f_ = std::move(f);
  p.char_p_ = char_p;
  return p;
}

ParameterSet ParameterSet::q_one(int r, long char_p) {
  if (r < 1) throw InvalidArgument("r must be at least 1");
  if (char_p != 0 && !is_prime(char_p)) throw InvalidArgument("characteristic must be 0 or a prime");
  ParameterSet p;
  p.e_ = ExtendedInt::infinity();
  p.f_.assign(static_cast<std::size_t>(r), 0);
  p.char_p_ = char_p;
  p.q_is_one_ = true;
  return p;
}

namespace {

// a - b where b is finite; infinity stays infinity.
ExtendedInt minus(const ExtendedInt& a, const ExtendedInt& b) {
  if (b.is_infinite()) throw std::logic_error("subtracting infinity");
  if (a.is_infinite()) return a;
  return ExtendedInt(a.value() - b.value());
}

}  // namespace

SpreadInvariants spread_invariants(const ParameterSet& p) {
  if (p.q_is_one()) throw InvalidArgument("spread invariants need q != 1");
  const int r = p.r();
  std::vector<long> sorted = p.f();
  std::sort(sorted.begin(), sorted.end());

  // f'_{r+i} = e + f'_i, extended to 3r terms so f'_{i+2} exists for r = 1.
  std::vector<ExtendedInt> fp;
  for (long v : sorted) fp.emplace_back(v);
  for (int i = 0; i < 2 * r; ++i) fp.push_back(p.e() + fp[static_cast<std::size_t>(i)]);

  SpreadInvariants s;
  s.f_sorted.assign(fp.begin(), fp.begin() + 2 * r);
  s.f_plus1 = ExtendedInt::infinity();
  s.f_plus2 = ExtendedInt::infinity();
  s.g_min = ExtendedInt::infinity();
  for (int i = 0; i < r; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    // fp[ui] is always finite.
    const ExtendedInt gap = minus(fp[ui + 1], fp[ui]);
    s.gaps.push_back(gap);
    s.f_plus1 = std::min(s.f_plus1, gap);
    s.f_plus2 = std::min(s.f_plus2, minus(fp[ui + 2], fp[ui]));
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j)
        s.g_min = std::min(s.g_min, s.gaps[static_cast<std::size_t>(i)] + s.gaps[static_cast<std::size_t>(j)]);
  return s;
}

bool is_semisimple(int n, const ParameterSet& p) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  if (n == 0) return true;
  if (p.q_is_one()) {
    // [i]_q = i vanishes once i reaches the characteristic; for r >= 2 the
    // factor with a = 0 is Q_i - Q_j = 0.
    const bool factorials = p.char_p() == 0 || n < p.char_p();
    return factorials && p.r() == 1;
  }
  // 1 + q + ... + q^{i-1} = 0 exactly when e divides i.
  if (p.e().is_finite() && n >= p.e().value()) return false;
  for (int i = 1; i <= p.r(); ++i) {
    for (int j = i + 1; j <= p.r(); ++j) {
      // q^a Q_i = Q_j  <=>  a = f_j - f_i (mod e) for some |a| < n.
      if (p.e().is_finite()) {
        const long e = p.e().value();
        const long d = ((p.f(i) - p.f(j)) % e + e) % e;
        if (d < n || e - d < n) return false;
      } else {
        const long d = p.f(i) - p.f(j);
        if (std::labs(d) < n) return false;
      }
    }
  }
  return true;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Semisimple: return "SEMISIMPLE";
    case VerdictKind::Finite: return "FINITE";
    case VerdictKind::Infinite: return "INFINITE";
    case VerdictKind::Wild: return "WILD";
    case VerdictKind::OutOfScope: return "OUT_OF_SCOPE";
  }
  return "?";
}

Verdict classify(int n, const ParameterSet& p) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  Verdict v;

  if (p.q_is_one()) {
    if (p.r() == 1) {
      v.kind = VerdictKind::OutOfScope;
      v.note = "q = 1, r = 1 is the group algebra of the symmetric group; not classified here";
      return v;
    }
    if (n == 0) {
      v.kind = VerdictKind::Semisimple;
      v.note = "n = 0";
    } else if (n == 1) {
      v.kind = VerdictKind::Finite;
      v.note = "q = 1, r >= 2: finite type exactly when n = 1";
    } else if (n == 2) {
      v.kind = VerdictKind::Infinite;
      v.note = "q = 1, r >= 2, n = 2: infinite type; tame or wild not determined";
    } else {
      v.kind = VerdictKind::Wild;
      v.note = "q = 1, r >= 2, n >= 3: wild type";
    }
    return v;
  }

  const SpreadInvariants s = spread_invariants(p);
  const ExtendedInt n_ext(n);
  v.e = p.e();
  bool finite = false;

  if (p.r() == 1) {
    // Independent of Q_1: semisimple iff n < e, finite iff n < 2e, wild otherwise.
    if (n_ext < p.e()) {
      v.kind = VerdictKind::Semisimple;
      v.note = "r = 1: n < e";
    } else if (n_ext < 2 * p.e()) {
      v.kind = VerdictKind::Finite;
      v.note = "r = 1: e <= n < 2e";
    } else {
      v.kind = VerdictKind::Wild;
      v.note = "r = 1: n >= 2e";
    }
    return v;
  }

  v.two_f1_plus4 = 2 * s.f_plus1 + ExtendedInt(4);
  if (p.r() == 2) {
    finite = n_ext < std::min(p.e(), *v.two_f1_plus4);
    v.note = "r = 2: finite iff n < min{e, 2f1+4}";
  } else {
    v.f2_plus1 = s.f_plus2 + ExtendedInt(1);
    v.g_plus2 = s.g_min + ExtendedInt(2);
    finite = n_ext < std::min({*v.two_f1_plus4, *v.f2_plus1, *v.g_plus2});
    v.note = "r >= 3: finite iff n < min{2f1+4, f2+1, g+2}";
  }

  const bool semisimple = is_semisimple(n, p);
  if (semisimple && !finite) throw std::logic_error("semisimple parameters outside the finite region");
  if (semisimple) {
    v.kind = VerdictKind::Semisimple;
  } else if (finite) {
    v.kind = VerdictKind::Finite;
  } else {
    v.kind = VerdictKind::Infinite;
    v.note += "; wildness not asserted";
  }
  return v;
}

int semisimplicity_threshold(int n_max, const ParameterSet& p) {
  for (int k = 1; k <= n_max; ++k)
    if (!is_semisimple(k, p)) return k;
  return n_max + 1;
}

// Orbits that are pairwise separated give a Morita equivalence with the sum,
// over n_1 + ... + n_k = n, of tensor products of the orbit algebras. From
// the tensor-product rules for cellular algebras:
//  * a semisimple factor does not change the type of the rest;
//  * two non-semisimple factors give infinite type.
// So the sum is of finite type iff every orbit algebra is finite at every
// n_a <= n (monotone, so at n) and no two orbits can be non-semisimple at the
// same time: t_a + t_b > n for the semisimplicity thresholds t. A wild orbit
// at n appears as the summand with all other n_b = 0, so the sum is wild.
Verdict classify_multi_orbit(int n, const OrbitSpec& orbits) {
  if (orbits.empty()) throw InvalidArgument("at least one orbit is required");
  for (const auto& o : orbits) {
    if (o.q_is_one() != orbits.front().q_is_one() || o.e() != orbits.front().e() ||
        o.char_p() != orbits.front().char_p())
      throw InvalidArgument("all orbits must share q (e, characteristic, q = 1 flag)");
  }
  if (orbits.size() == 1) return classify(n, orbits.front());

  Verdict v;
  if (!orbits.front().q_is_one()) v.e = orbits.front().e();

  std::vector<Verdict> parts;
  std::vector<int> thresholds;
  for (const auto& o : orbits) {
    parts.push_back(classify(n, o));
    thresholds.push_back(semisimplicity_threshold(n, o));
  }

  auto all_of = [&](auto pred) { return std::all_of(parts.begin(), parts.end(), pred); };
  auto any_of = [&](auto pred) { return std::any_of(parts.begin(), parts.end(), pred); };

  if (any_of([](const Verdict& x) { return x.kind == VerdictKind::OutOfScope; })) {
    v.kind = VerdictKind::OutOfScope;
    v.note = "an orbit is outside the classified cases";
    return v;
  }
  // The combination rule only decides finite vs not, so the verdict is FINITE
  // or INFINITE; semisimplicity and wildness of single orbits go in the note.
  if (all_of([](const Verdict& x) { return x.kind == VerdictKind::Semisimple; })) {
    v.kind = VerdictKind::Finite;
    v.note = "every orbit semisimple at n";
    return v;
  }
  if (any_of([](const Verdict& x) { return x.kind == VerdictKind::Wild; })) {
    v.kind = VerdictKind::Infinite;
    v.note = "an orbit is wild at n";
    return v;
  }
  for (std::size_t a = 0; a < orbits.size(); ++a) {
    for (std::size_t b = a + 1; b < orbits.size(); ++b) {
      if (thresholds[a] + thresholds[b] <= n) {
        v.kind = VerdictKind::Infinite;
        v.note = "orbits " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                 " are simultaneously non-semisimple (t = " + std::to_string(thresholds[a]) + ", " +
                 std::to_string(thresholds[b]) + ")";
        return v;
      }
    }
  }
  if (all_of([](const Verdict& x) { return is_finite_type(x.kind); })) {
    v.kind = VerdictKind::Finite;
    v.note = "each orbit finite and at most one orbit non-semisimple per summand";
  } else {
    v.kind = VerdictKind::Infinite;
    v.note = "an orbit is of infinite type at n";
  }
  return v;
}

}  // namespace aksch
