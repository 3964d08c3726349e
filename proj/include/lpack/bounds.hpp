#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>

#include "lpack/errors.hpp"
#include "lpack/graph.hpp"

namespace lpack {

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den) {
    const auto g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
  }
  [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Closed-form lower and upper bounds on L_k for a graph with the given
// order and degree extremes. Absent fields do not apply to the parameters.
struct BoundSheet {
  std::size_t n = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t k = 1;
  std::optional<double> average_degree;

  // k > Δ: every vertex fits, L_k = n.
  std::optional<std::size_t> exact;

  // k = 1: greedy distance-2 choice, n / (Δ² + 1).
  std::optional<Rational> greedy_lower;
  // k <= Δ: n k / ((k+1) (C(Δ,k)(Δ+1))^{1/k}).
  std::optional<double> random_lower;
  // k <= Δ: n k/(k+1) ((k+1) C(Δ+1,k+1))^{-1/k}; algebraically equal to random_lower.
  std::optional<double> binomial_lower;
  // k <= Δ: n k / (e Δ^{1+1/k}).
  std::optional<double> power_lower;
  // Δ <= 3, k = 2: n/3.
  std::optional<Rational> subcubic_two_lower;
  // Cubic, k = 2: the older n/4 claim, reported for reference only.
  std::optional<Rational> prior_cubic_two_lower;
  // Cubic, k = 3: 9n/14 (dual of γ <= 5n/14). The domination bound needs
  // every component to have order other than 8: some connected cubic graphs
  // on 8 vertices have γ = 3, giving L_3 = 5 < 36/7. The parameter-only
  // overload cannot see components and assumes this; the graph overload
  // checks it.
  std::optional<Rational> cubic_three_lower;

  // Double counting: k n / (δ + 1).
  Rational upper;

  // Upper bounds on the 2-tuple domination number.
  std::optional<double> harant_henning;      // uses average degree d
  std::optional<double> cockayne_thomason;   // uses δ
  bool harant_henning_informative = false;   // value < n
  bool cockayne_thomason_informative = false;
  std::optional<Rational> cubic_double_domination_upper;  // cubic: 2n/3

  // Largest applicable lower bound (exact value when k > Δ).
  [[nodiscard]] double best_lower() const {
    if (exact) return static_cast<double>(*exact);
    double best = 0.0;
    auto take = [&](const auto& opt) {
      if (!opt) return;
      if constexpr (std::is_same_v<std::decay_t<decltype(*opt)>, Rational>) {
        best = std::max(best, opt->value());
      } else {
        best = std::max(best, *opt);
      }
    };
    take(greedy_lower);
    take(random_lower);
    take(binomial_lower);
    take(power_lower);
    take(subcubic_two_lower);
    take(prior_cubic_two_lower);
    take(cubic_three_lower);
    return best;
  }
};

namespace detail {

// Exact binomial coefficient, nullopt on 128-bit overflow.
inline std::optional<unsigned __int128> binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const unsigned __int128 factor = n - k + i;
    constexpr auto kMax = ~static_cast<unsigned __int128>(0);
    if (result > kMax / factor) return std::nullopt;
    // result * factor is divisible by i since it equals C(n-k+i, i) * i.
    result = result * factor / i;
  }
  return result;
}

// log C(n, k), exact when the coefficient fits in 128 bits.
inline double log_binomial(std::uint64_t n, std::uint64_t k) {
  if (auto exact = binomial(n, k)) return std::log(static_cast<long double>(*exact));
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

// (C(Δ,k)(Δ+1))^{-1/k}, evaluated from the exact product when it fits.
inline double random_rate(std::size_t max_degree, std::size_t k) {
  const auto c = binomial(max_degree, k);
  if (c) {
    constexpr auto kMax = ~static_cast<unsigned __int128>(0);
    if (*c <= kMax / (max_degree + 1)) {
      const long double product = static_cast<long double>(*c * (max_degree + 1));
      return static_cast<double>(std::pow(product, -1.0L / static_cast<long double>(k)));
    }
  }
  const double log_product = log_binomial(max_degree, k) + std::log(static_cast<double>(max_degree) + 1.0);
  return std::exp(-log_product / static_cast<double>(k));
}

}  // namespace detail

inline BoundSheet bound_sheet(std::size_t n, std::size_t max_degree, std::size_t min_degree, std::size_t k,
                              std::optional<double> average_degree = std::nullopt) {
  if (k == 0) throw input_error("k must be positive");
  if (min_degree > max_degree) throw input_error("minimum degree exceeds maximum degree");
  if (!average_degree && min_degree == max_degree) average_degree = static_cast<double>(max_degree);

  BoundSheet s;
  s.n = n;
  s.max_degree = max_degree;
  s.min_degree = min_degree;
  s.k = k;
  s.average_degree = average_degree;
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const bool cubic = max_degree == 3 && min_degree == 3;

  if (k > max_degree) s.exact = n;
  if (k == 1) s.greedy_lower = Rational::make(n, max_degree * max_degree + 1);
  if (k <= max_degree) {
    s.random_lower = nd * kd / (kd + 1.0) * detail::random_rate(max_degree, k);
    const double log_inner = std::log(kd + 1.0) + detail::log_binomial(max_degree + 1, k + 1);
    s.binomial_lower = nd * kd / (kd + 1.0) * std::exp(-log_inner / kd);
    s.power_lower = nd * kd / (std::exp(1.0) * std::pow(static_cast<double>(max_degree), 1.0 + 1.0 / kd));
  }
  if (k == 2 && max_degree <= 3) s.subcubic_two_lower = Rational::make(n, 3);
  if (k == 2 && cubic) s.prior_cubic_two_lower = Rational::make(n, 4);
  if (k == 3 && cubic) s.cubic_three_lower = Rational::make(9 * n, 14);

  s.upper = Rational::make(k * n, min_degree + 1);

  if (min_degree >= 1) {
    const double delta = static_cast<double>(min_degree);
    s.cockayne_thomason = (std::log(1.0 + delta) + std::log(delta) + 1.0) * nd / delta;
    s.cockayne_thomason_informative = *s.cockayne_thomason < nd;
    if (average_degree) {
      s.harant_henning = (std::log(1.0 + *average_degree) + std::log(delta) + 1.0) * nd / delta;
      s.harant_henning_informative = *s.harant_henning < nd;
    }
  }
  if (cubic) s.cubic_double_domination_upper = Rational::make(2 * n, 3);
  return s;
}

inline BoundSheet bound_sheet(const Graph& g, std::size_t k) {
  auto st = degree_stats(g);
  auto s = bound_sheet(st.vertex_count, st.max_degree, st.min_degree, k, average_degree(g));
  if (s.cubic_three_lower) {
    for (const auto& comp : connected_components(g)) {
      if (comp.size() == 8) s.cubic_three_lower.reset();
    }
  }
  return s;
}

inline std::string format_bound_sheet(const BoundSheet& s) {
  std::ostringstream out;
  out.precision(12);
  auto rational = [&](const char* key, const std::optional<Rational>& r) {
    if (r) out << key << ": " << r->num << '/' << r->den << " = " << r->value() << '\n';
  };
  auto real = [&](const char* key, const std::optional<double>& v) {
    if (v) out << key << ": " << *v << '\n';
  };
  out << "n: " << s.n << '\n' << "maxdeg: " << s.max_degree << '\n' << "mindeg: " << s.min_degree << '\n'
      << "k: " << s.k << '\n';
  if (s.exact) out << "exact: " << *s.exact << '\n';
  rational("greedy_lower", s.greedy_lower);
  real("random_lower", s.random_lower);
  real("binomial_lower", s.binomial_lower);
  real("power_lower", s.power_lower);
  rational("subcubic_two_lower", s.subcubic_two_lower);
  rational("prior_cubic_two_lower", s.prior_cubic_two_lower);
  rational("cubic_three_lower", s.cubic_three_lower);
  rational("upper", std::optional<Rational>(s.upper));
  if (s.harant_henning) {
    out << "double_domination_harant_henning: " << *s.harant_henning
        << (s.harant_henning_informative ? "" : " (not informative)") << '\n';
  }
  if (s.cockayne_thomason) {
    out << "double_domination_cockayne_thomason: " << *s.cockayne_thomason
        << (s.cockayne_thomason_informative ? "" : " (not informative)") << '\n';
  }
  rational("double_domination_cubic_upper", s.cubic_double_domination_upper);
  return out.str();
}

}  // namespace lpack
