#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ballcarve/rational.hpp"

namespace ballcarve {

/// x (x+1) ... (x+k-1); 1 when k == 0.
Rational rising_factorial(const Rational &x, std::uint64_t k);

/// Lower bound on f_c(n, r) for c > 1:
///   (n/c + r/2)^(r+1 rising) / (r+1)^(r+1).
/// Throws std::invalid_argument unless c > 1, n >= 1 and r >= 1.
Rational bound_gen(std::uint64_t n, std::uint64_t r, std::uint64_t c);

/// Value of a bound stated at a derived chromatic target n.
template <typename T> struct IndexedBound {
  T value;
  std::uint64_t n;
};

/// f_c(k(c-1)+1, r) >= floor(r / 2k)^k.
IndexedBound<BigInt> bound_kst(std::uint64_t k, std::uint64_t c,
                               std::uint64_t r);

/// c = 2 only: f_2(n, r) >= (n+r+1)^(r+1 rising) / (2^r (r+1)^(r+1)).
Rational bound_bb(std::uint64_t n, std::uint64_t r);

/// f_c(k(c-1), r) < ((2rc+1)^k - 1) / (2r).
IndexedBound<Rational> bound_upper_bogdnrv(std::uint64_t k, std::uint64_t c,
                                           std::uint64_t r);

/// f_c(n, r) < n^(4r+5), asymptotic in n. The threshold n_0(r) past which it
/// holds is not known, so the value always comes flagged.
struct AsymptoticBound {
  BigInt value;
  bool requires_large_n = true;
};
AsymptoticBound bound_upper_erdos(std::uint64_t n, std::uint64_t r);

/// Offset that makes (a + m/c)^(r+1 rising) / (r+1)^(r+1) coincide with
/// bound_gen: a = r/2.
Rational default_offset(std::uint64_t r);

/// The induction step from m = n - c to m = n, with
/// B(m) = (a + m/c)^(r+1 rising) / (r+1)^(r+1):
///   (a + n/c + r) / (a + n/c - 1) * B(n - c) >= B(n).
/// Requires c > 1 and n > c; throws std::invalid_argument when
/// a + n/c - 1 <= 0.
bool check_induction_step(std::uint64_t n, std::uint64_t r, std::uint64_t c,
                          const Rational &a);

struct TheoremViolation {
  std::uint64_t v;
  std::size_t levels;
};

struct TheoremConsistencyReport {
  std::uint64_t n = 0, r = 0, c = 0;
  Rational bound;           // bound_gen(n, r, c)
  std::uint64_t v_max = 0;  // ceil(bound) - 1; every 1 <= v <= v_max checked
  std::int64_t min_slack = 0; // min over v of n - c * level_bound(v, r)
  std::int64_t max_slack = 0;
  std::vector<TheoremViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Checks c * level_bound(v, r) <= n for all 1 <= v <= ceil(bound_gen) - 1,
/// i.e. that recursive carving colors every graph below the bound with at
/// most n colors.
TheoremConsistencyReport theorem_consistency(std::uint64_t n, std::uint64_t r,
                                             std::uint64_t c);

} // namespace ballcarve
