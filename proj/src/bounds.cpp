#include "permsep/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace permsep {

double entropy(double x1, double x2, double x3) {
  constexpr double kTol = 1e-12;
  if (x1 < -kTol || x2 < -kTol || x3 < -kTol || std::fabs(x1 + x2 + x3 - 1.0) > kTol) {
    throw std::invalid_argument("entropy needs a point of the probability simplex");
  }
  double h = 0.0;
  for (const double x : {x1, x2, x3}) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

namespace {

void check_coloring_k(int k) {
  if (k < 3) throw std::invalid_argument("the coloring bound needs k >= 3");
}

}  // namespace

Color position_color(std::size_t position, int k) {
  check_coloring_k(k);
  if (position == 0) throw std::invalid_argument("positions are 1-based");
  const std::size_t period = 2 * static_cast<std::size_t>(k) - 2;
  const std::size_t m = (position - 1) % period + 1;
  if (m == 1 || m == static_cast<std::size_t>(k)) return Color::Blue;
  if (m < static_cast<std::size_t>(k)) return Color::Red;
  return Color::Green;
}

ColorClassSizes color_class_sizes(std::size_t n, int k) {
  check_coloring_k(k);
  ColorClassSizes s;
  for (std::size_t i = 1; i <= n; ++i) {
    switch (position_color(i, k)) {
      case Color::Red: ++s.red; break;
      case Color::Green: ++s.green; break;
      case Color::Blue: ++s.blue; break;
    }
  }
  return s;
}

Coloring color_ground_set(const Permutation& p, int k) {
  check_coloring_k(k);
  Coloring c;
  c.k = k;
  c.vertices = p.vertex_set();
  c.colors.resize(c.vertices.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto it = std::lower_bound(c.vertices.begin(), c.vertices.end(), p[i]);
    c.colors[static_cast<std::size_t>(it - c.vertices.begin())] = position_color(i + 1, k);
  }
  return c;
}

BoundValue make_bound(BigRational exact, std::string formula) {
  if (exact <= 0) throw std::invalid_argument("bound values must be positive");
  const double l = log2_big(exact);
  return BoundValue{std::move(exact), l, std::move(formula)};
}

BoundValue coloring_count_bound(std::size_t n, int k) {
  check_coloring_k(k);
  const ColorClassSizes s = color_class_sizes(n, k);
  const BigInt count = multinomial(static_cast<unsigned>(n),
                                   {static_cast<unsigned>(s.red), static_cast<unsigned>(s.green),
                                    static_cast<unsigned>(s.blue)});
  return make_bound(BigRational(count), "n! / (n_red! n_green! n_blue!)");
}

double coloring_exponent(int k) {
  check_coloring_k(k);
  const double period = 2.0 * k - 2.0;
  return entropy((k - 2) / period, (k - 2) / period, 2.0 / period);
}

double coloring_exponent_as_stated(int k) {
  check_coloring_k(k);
  const double d = 2.0 * k;
  return entropy((k - 1) / d, (k - 1) / d, 2.0 / d);
}

BoundValue tuza_bound(unsigned a, unsigned b) {
  if (a == 0 || b == 0) throw std::invalid_argument("tuza_bound needs a, b >= 1");
  const BigRational value(ipow(BigInt(a + b), a + b), ipow(BigInt(a), a) * ipow(BigInt(b), b));
  return make_bound(value, "(a+b)^(a+b) / (a^a b^b)");
}

BoundValue bollobas_bound(unsigned a, unsigned b) {
  if (a == 0 || b == 0) throw std::invalid_argument("bollobas_bound needs a, b >= 1");
  return make_bound(BigRational(binomial(a + b, a)), "C(a+b, a)");
}

bool exact_formula_covers(int n, int k) {
  if (n < 2 || k < 2 || k > n) return false;
  // (n-1)! fails at n = 3: the three paths of K_3 pairwise share an edge.
  if (k == 2) return n != 3;
  return k == 3 || k == n;
}

ExactValue exact_formulas(int n, int k) {
  if (!exact_formula_covers(n, k)) {
    throw std::out_of_range("no closed form for P(" + std::to_string(n) + "," +
                            std::to_string(k) + ")");
  }
  const auto un = static_cast<unsigned>(n);
  if (k == 2) {
    const BigInt v = factorial(un - 1);
    return {v, v, "(n-1)!"};
  }
  if (k == 3) {
    if (n % 2 == 1) {
      const BigInt v = binomial(un, un / 2);
      return {v, v, "C(n, floor(n/2))"};
    }
    const BigInt v = binomial(un, un / 2) / 2;
    return {v, v, "C(n, n/2) / 2"};
  }
  if (n % 2 == 0) {
    const BigInt v = 3 * n / 2;
    return {v, v, "3n/2"};
  }
  const BigInt hi = 3 * n / 2;
  return {hi - 1, hi, "floor(3n/2) - 1 <= P(n,n) <= floor(3n/2)"};
}

}  // namespace permsep
