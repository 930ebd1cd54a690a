#include "dhl/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace dhl {

std::string to_string(const Site& s) {
  return "(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
}

std::string to_string(const GridPoint& g) {
  return "(" + std::to_string(g.x) + "," + std::to_string(g.y) + ")";
}

Triangle::Triangle(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("lattice size N must be nonnegative");
  count_ = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

std::size_t Triangle::index(const Site& s) const {
  if (!contains(s)) throw std::out_of_range("site " + to_string(s) + " outside the lattice");
  // rows j' < j hold N+1-j' sites each
  const std::size_t j = static_cast<std::size_t>(s.j);
  const std::size_t offset = j * static_cast<std::size_t>(n_ + 1) - j * (j - 1) / 2;
  return offset + static_cast<std::size_t>(s.i);
}

std::size_t Triangle::index(const GridPoint& g) const {
  if (!contains(g)) throw std::out_of_range("grid point " + to_string(g) + " outside the grid");
  const std::size_t y = static_cast<std::size_t>(g.y);
  return y * (y + 1) / 2 + static_cast<std::size_t>(g.x);
}

Site Triangle::site(std::size_t k) const {
  if (k >= count_) throw std::out_of_range("site index out of range");
  int j = 0;
  std::size_t row = static_cast<std::size_t>(n_ + 1);
  while (k >= row) {
    k -= row;
    --row;
    ++j;
  }
  return {static_cast<int>(k), j};
}

GridPoint Triangle::grid_point(std::size_t k) const {
  if (k >= count_) throw std::out_of_range("grid index out of range");
  int y = 0;
  while (static_cast<std::size_t>(y + 1) * static_cast<std::size_t>(y + 2) / 2 <= k) ++y;
  return {static_cast<int>(k - static_cast<std::size_t>(y) * static_cast<std::size_t>(y + 1) / 2), y};
}

Site Triangle::mirror(const Site& s) const {
  if (!contains(s)) throw std::out_of_range("site " + to_string(s) + " outside the lattice");
  return {s.i, n_ - s.i - s.j};
}

}  // namespace dhl
