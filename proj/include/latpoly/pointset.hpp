#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <vector>

#include "latpoly/core.hpp"

namespace latpoly {

// Finite set of lattice points, stored deduplicated in lexicographic order.
template <typename Point>
class BasicPointSet {
 public:
  using value_type = Point;
  using const_iterator = typename std::vector<Point>::const_iterator;

  BasicPointSet() = default;
  BasicPointSet(std::initializer_list<Point> pts) : points_(pts) { normalize(); }
  explicit BasicPointSet(std::vector<Point> pts) : points_(std::move(pts)) { normalize(); }

  bool contains(const Point& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

  // Every point of *this is in other.
  bool is_subset_of(const BasicPointSet& other) const {
    return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
  }

  // Points of *this missing from other, in lexicographic order.
  BasicPointSet minus(const BasicPointSet& other) const {
    BasicPointSet out;
    std::set_difference(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
                        std::back_inserter(out.points_));
    return out;
  }

  std::span<const Point> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const_iterator begin() const { return points_.begin(); }
  const_iterator end() const { return points_.end(); }
  const Point& front() const { return points_.front(); }

  friend bool operator==(const BasicPointSet&, const BasicPointSet&) = default;

 private:
  void normalize() {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  std::vector<Point> points_;
};

using PointSet = BasicPointSet<Point2>;

// All pairwise sums add(s, t), deduplicated.
template <typename Point, typename AddFn>
BasicPointSet<Point> sumset_with(const BasicPointSet<Point>& s, const BasicPointSet<Point>& t, AddFn add) {
  std::vector<Point> out;
  out.reserve(s.size() * t.size());
  for (const auto& a : s)
    for (const auto& b : t) out.push_back(add(a, b));
  return BasicPointSet<Point>(std::move(out));
}

}  // namespace latpoly
