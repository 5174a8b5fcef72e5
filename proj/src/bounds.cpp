#include "ballcarve/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ballcarve/decomposition.hpp"

namespace ballcarve {

Rational rising_factorial(const Rational &x, std::uint64_t k) {
  Rational product = 1;
  for (std::uint64_t i = 0; i < k; ++i)
    product *= x + i;
  return product;
}

namespace {

void require(bool ok, const char *what) {
  if (!ok)
    throw std::invalid_argument(what);
}

Rational induction_profile(const Rational &a, std::uint64_t m, std::uint64_t r,
                           std::uint64_t c) {
  return rising_factorial(a + Rational(m, c), r + 1) /
         Rational(ipow(BigInt(r + 1), r + 1));
}

} // namespace

Rational bound_gen(std::uint64_t n, std::uint64_t r, std::uint64_t c) {
  require(c > 1, "bound_gen requires c > 1");
  require(n >= 1 && r >= 1, "bound_gen requires n >= 1 and r >= 1");
  return induction_profile(default_offset(r), n, r, c);
}

IndexedBound<BigInt> bound_kst(std::uint64_t k, std::uint64_t c,
                               std::uint64_t r) {
  require(k >= 1 && c >= 1 && r >= 1, "bound_kst requires k, c, r >= 1");
  return {ipow(BigInt(r / (2 * k)), k), k * (c - 1) + 1};
}

Rational bound_bb(std::uint64_t n, std::uint64_t r) {
  require(n >= 1 && r >= 1, "bound_bb requires n >= 1 and r >= 1");
  return rising_factorial(Rational(n + r + 1), r + 1) /
         Rational(ipow(BigInt(2), r) * ipow(BigInt(r + 1), r + 1));
}

IndexedBound<Rational> bound_upper_bogdnrv(std::uint64_t k, std::uint64_t c,
                                           std::uint64_t r) {
  require(k >= 1 && c >= 1 && r >= 1,
          "bound_upper_bogdnrv requires k, c, r >= 1");
  return {Rational(ipow(BigInt(2 * r * c + 1), k) - 1, 2 * r), k * (c - 1)};
}

AsymptoticBound bound_upper_erdos(std::uint64_t n, std::uint64_t r) {
  require(n >= 1 && r >= 1, "bound_upper_erdos requires n >= 1 and r >= 1");
  return {ipow(BigInt(n), 4 * r + 5), true};
}

Rational default_offset(std::uint64_t r) { return Rational(r, 2); }

bool check_induction_step(std::uint64_t n, std::uint64_t r, std::uint64_t c,
                          const Rational &a) {
  require(c > 1, "check_induction_step requires c > 1");
  require(n > c, "check_induction_step requires n > c");
  require(r >= 1, "check_induction_step requires r >= 1");
  const Rational base = a + Rational(n, c);
  const Rational denom = base - 1;
  require(denom > 0, "check_induction_step requires a + n/c - 1 > 0");
  const Rational lhs =
      (base + r) / denom * induction_profile(a, n - c, r, c);
  return lhs >= induction_profile(a, n, r, c);
}

TheoremConsistencyReport theorem_consistency(std::uint64_t n, std::uint64_t r,
                                             std::uint64_t c) {
  TheoremConsistencyReport report;
  report.n = n;
  report.r = r;
  report.c = c;
  report.bound = bound_gen(n, r, c);
  const BigInt top = ceil(report.bound) - 1;
  report.v_max = top > 0 ? top.convert_to<std::uint64_t>() : 0;

  bool first = true;
  for (std::uint64_t v = 1; v <= report.v_max; ++v) {
    const std::size_t levels = level_bound(v, r);
    const std::int64_t slack = static_cast<std::int64_t>(n) -
                               static_cast<std::int64_t>(c * levels);
    if (first) {
      report.min_slack = report.max_slack = slack;
      first = false;
    }
    report.min_slack = std::min(report.min_slack, slack);
    report.max_slack = std::max(report.max_slack, slack);
    if (slack < 0)
      report.violations.push_back({v, levels});
  }
  return report;
}

} // namespace ballcarve
