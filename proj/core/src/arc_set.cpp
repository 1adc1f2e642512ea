#include "resonant/arc_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "resonant/trig.hpp"

namespace resonant {

CircularIntervalSet CircularIntervalSet::full() {
  CircularIntervalSet s;
  s.arcs_.push_back({0.0, kTwoPi});
  return s;
}

CircularIntervalSet CircularIntervalSet::arc(double start, double length) {
  CircularIntervalSet s;
  s.add_arc(start, length);
  return s;
}

CircularIntervalSet CircularIntervalSet::from_arcs(std::vector<Arc> arcs) {
  for (const Arc& a : arcs) {
    if (!(a.start >= 0.0 && a.start <= a.end && a.end <= kTwoPi)) {
      throw std::invalid_argument("arc endpoints must satisfy 0 <= start <= end <= 2pi");
    }
  }
  CircularIntervalSet s;
  s.arcs_ = std::move(arcs);
  s.normalize();
  return s;
}

void CircularIntervalSet::add_arc(double start, double length) {
  if (!(length > 0.0)) return;
  if (length >= kTwoPi) {
    *this = full();
    return;
  }
  const double s = reduce_angle(start);
  const double e = s + length;
  if (e <= kTwoPi) {
    arcs_.push_back({s, e});
  } else {
    arcs_.push_back({s, kTwoPi});
    arcs_.push_back({0.0, e - kTwoPi});
  }
  normalize();
}

void CircularIntervalSet::unite(const CircularIntervalSet& other) {
  arcs_.insert(arcs_.end(), other.arcs_.begin(), other.arcs_.end());
  normalize();
}

CircularIntervalSet set_union(CircularIntervalSet lhs, const CircularIntervalSet& rhs) {
  lhs.unite(rhs);
  return lhs;
}

void CircularIntervalSet::normalize() {
  std::erase_if(arcs_, [](const Arc& a) { return !(a.end > a.start); });
  std::sort(arcs_.begin(), arcs_.end(),
            [](const Arc& x, const Arc& y) { return x.start < y.start; });
  std::vector<Arc> merged;
  merged.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    if (!merged.empty() && a.start <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, a.end);
    } else {
      merged.push_back(a);
    }
  }
  arcs_ = std::move(merged);
}

CircularIntervalSet CircularIntervalSet::complement() const {
  CircularIntervalSet out;
  double cursor = 0.0;
  for (const Arc& a : arcs_) {
    if (a.start > cursor) out.arcs_.push_back({cursor, a.start});
    cursor = a.end;
  }
  if (cursor < kTwoPi) out.arcs_.push_back({cursor, kTwoPi});
  return out;
}

bool CircularIntervalSet::contains(double theta) const {
  const double x = reduce_angle(theta);
  auto it = std::upper_bound(arcs_.begin(), arcs_.end(), x,
                             [](double v, const Arc& a) { return v < a.start; });
  if (it == arcs_.begin()) return false;
  --it;
  return x < it->end;
}

double CircularIntervalSet::measure() const {
  double total = 0.0;
  for (const Arc& a : arcs_) total += a.length();
  return total;
}

double CircularIntervalSet::point_at_measure(double s) const {
  if (!(s >= 0.0)) throw std::out_of_range("point_at_measure: negative measure");
  double acc = 0.0;
  for (const Arc& a : arcs_) {
    const double len = a.length();
    if (s < acc + len) {
      // Clamp against rounding so the point stays inside the arc.
      const double p = a.start + (s - acc);
      return p < a.end ? p : std::nextafter(a.end, a.start);
    }
    acc += len;
  }
  throw std::out_of_range("point_at_measure: beyond the measure of the set");
}

}  // namespace resonant
