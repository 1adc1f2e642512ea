#pragma once

#include <span>
#include <vector>

namespace resonant {

// Half-open arc [start, end) with 0 <= start < end <= 2pi.
struct Arc {
  double start;
  double end;

  double length() const { return end - start; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

/**
 * Finite union of arcs on the circle [0, 2pi).
 *
 * Arcs are kept sorted, pairwise disjoint and non-touching; an arc crossing
 * 2pi is stored as two pieces. Endpoints are plain doubles without outward
 * rounding.
 */
class CircularIntervalSet {
 public:
  CircularIntervalSet() = default;

  static CircularIntervalSet full();
  // Arc starting at `start` (any real, reduced mod 2pi) of the given length.
  // Lengths >= 2pi give the full circle; lengths <= 0 give the empty set.
  static CircularIntervalSet arc(double start, double length);
  // Arcs already inside [0, 2pi]; they may overlap and come in any order.
  static CircularIntervalSet from_arcs(std::vector<Arc> arcs);

  void add_arc(double start, double length);
  void unite(const CircularIntervalSet& other);
  friend CircularIntervalSet set_union(CircularIntervalSet lhs, const CircularIntervalSet& rhs);

  CircularIntervalSet complement() const;

  std::span<const Arc> arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }
  bool contains(double theta) const;
  double measure() const;

  // Point p such that the part of the set inside [0, p) has measure s,
  // for 0 <= s < measure(). Maps uniform samples of [0, measure) onto the set.
  double point_at_measure(double s) const;

  friend bool operator==(const CircularIntervalSet&, const CircularIntervalSet&) = default;

 private:
  void normalize();

  std::vector<Arc> arcs_;
};

}  // namespace resonant
