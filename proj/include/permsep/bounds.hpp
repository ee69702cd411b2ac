#pragma once

#include "permsep/bigint.hpp"
#include "permsep/permutation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace permsep {

/// Ternary entropy in bits; 0 log 0 = 0. Inputs must lie on the simplex (1e-12).
double entropy(double x1, double x2, double x3);

enum class Color : std::uint8_t { Red, Green, Blue };

struct ColorClassSizes {
  std::size_t red = 0;
  std::size_t green = 0;
  std::size_t blue = 0;
};

/// Color of position i (1-based) with residue m = ((i-1) mod (2k-2)) + 1:
/// blue for m in {1, k}, red for 2..k-1, green for k+1..2k-2.
Color position_color(std::size_t position, int k);
ColorClassSizes color_class_sizes(std::size_t n, int k);

struct Coloring {
  int k = 3;
  std::vector<Vertex> vertices;  // ascending
  std::vector<Color> colors;     // colors[i] belongs to vertices[i]
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

Coloring color_ground_set(const Permutation& p, int k);

struct BoundValue {
  BigRational exact;
  double log2 = 0.0;
  std::string formula;
};

BoundValue make_bound(BigRational exact, std::string formula);

/// Number of ground-set colorings with the class sizes forced by (n, k).
BoundValue coloring_count_bound(std::size_t n, int k);
/// Per-element exponent implied by the coloring classes for large n.
double coloring_exponent(int k);
/// The alternative exponent H((k-1)/2k, (k-1)/2k, 2/2k).
double coloring_exponent_as_stated(int k);

BoundValue tuza_bound(unsigned a, unsigned b);
BoundValue bollobas_bound(unsigned a, unsigned b);

/// Closed form or interval for P(n, k), for k = 2, k = 3, or k = n.
/// (3, 2) is not covered: P(3,2) = 3, not (3-1)!.
struct ExactValue {
  BigInt lo;
  BigInt hi;
  std::string formula;
  bool exact() const { return lo == hi; }
};

ExactValue exact_formulas(int n, int k);
bool exact_formula_covers(int n, int k);

}  // namespace permsep
