#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace permsep {

using Vertex = std::uint32_t;

/// Unordered vertex pair, always stored as (lo, hi) with lo < hi.
struct Edge {
  Vertex lo = 0;
  Vertex hi = 1;

  static Edge of(Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Label : std::uint8_t { A, B };

inline Label opposite(Label l) { return l == Label::A ? Label::B : Label::A; }
inline char label_char(Label l) { return l == Label::A ? 'a' : 'b'; }

/// Thrown when a construction would enumerate more objects than the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace permsep
