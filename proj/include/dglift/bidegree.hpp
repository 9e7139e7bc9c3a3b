#pragma once

#include <compare>
#include <string>

namespace dglift {

/// (homological degree, internal degree)
struct Bidegree {
  int hdeg = 0;
  int wdeg = 0;

  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.hdeg + b.hdeg, a.wdeg + b.wdeg}; }
  friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.hdeg - b.hdeg, a.wdeg - b.wdeg}; }
  std::string to_string() const { return "(" + std::to_string(hdeg) + "," + std::to_string(wdeg) + ")"; }
};

}  // namespace dglift
