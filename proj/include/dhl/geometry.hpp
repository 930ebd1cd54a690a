#pragma once

#include <compare>
#include <cstddef>
#include <string>

namespace dhl {

// Lattice site (i, j) with i, j >= 0 and i + j <= N. The same pair labels the
// degree (m, n) of the bivariate polynomial attached to that site.
struct Site {
  int i = 0;
  int j = 0;
  auto operator<=>(const Site&) const = default;
};

// Spectral label (x, y) with 0 <= x <= y <= N.
struct GridPoint {
  int x = 0;
  int y = 0;
  auto operator<=>(const GridPoint&) const = default;
};

std::string to_string(const Site& s);
std::string to_string(const GridPoint& g);

// Index maps of the size-N triangle. Sites are ordered row-major with j outer
// and i inner; grid points with y outer and x inner. Both sets have
// (N+1)(N+2)/2 elements.
class Triangle {
 public:
  explicit Triangle(int n);

  int size() const noexcept { return n_; }
  std::size_t count() const noexcept { return count_; }

  bool contains(const Site& s) const noexcept {
    return s.i >= 0 && s.j >= 0 && s.i + s.j <= n_;
  }
  bool contains(const GridPoint& g) const noexcept {
    return g.x >= 0 && g.x <= g.y && g.y <= n_;
  }

  // Throw std::out_of_range for labels outside the triangle.
  std::size_t index(const Site& s) const;
  std::size_t index(const GridPoint& g) const;
  Site site(std::size_t k) const;
  GridPoint grid_point(std::size_t k) const;

  // Mirror image within the column i: (i, N - i - j).
  Site mirror(const Site& s) const;

 private:
  int n_;
  std::size_t count_;
};

}  // namespace dhl
