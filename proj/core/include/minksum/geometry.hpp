// Copyright 2026 The Minksum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINKSUM_GEOMETRY_HPP
#define MINKSUM_GEOMETRY_HPP

#include <iosfwd>

#include "minksum/scalar.hpp"

namespace minksum {

struct Point {
  Scalar x;
  Scalar y;

  Point() = default;
  Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}

  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  Point operator-() const { return {-x, -y}; }

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

// Vectors share the representation; the distinction is contextual.
using Vector = Point;

inline Scalar cross(const Vector& a, const Vector& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot(const Vector& a, const Vector& b) { return a.x * b.x + a.y * b.y; }

// Total lexicographic order: x first, then y.
inline bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

struct LexLess {
  bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

inline Point midpoint(const Point& a, const Point& b) {
  Scalar half(1, 2);
  return {(a.x + b.x) * half, (a.y + b.y) * half};
}

struct DirectedSegment {
  Point source;
  Point target;

  DirectedSegment() = default;
  DirectedSegment(Point s, Point t) : source(std::move(s)), target(std::move(t)) {}

  Vector direction() const { return target - source; }
  DirectedSegment reversed() const { return {target, source}; }

  friend bool operator==(const DirectedSegment& a, const DirectedSegment& b) {
    return a.source == b.source && a.target == b.target;
  }
};

// Axis-aligned box. The closedness flag only matters for the fit test
// used by the hole filter.
struct Box {
  Scalar xmin, ymin, xmax, ymax;
  bool closed = true;

  Scalar width() const { return xmax - xmin; }
  Scalar height() const { return ymax - ymin; }

  bool contains(const Point& p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
  bool overlaps(const Box& o) const {
    return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
  }
  Box merged(const Box& o) const {
    return {Scalar::min(xmin, o.xmin), Scalar::min(ymin, o.ymin),
            Scalar::max(xmax, o.xmax), Scalar::max(ymax, o.ymax), closed};
  }
  static Box of_segment(const DirectedSegment& s) {
    return {Scalar::min(s.source.x, s.target.x), Scalar::min(s.source.y, s.target.y),
            Scalar::max(s.source.x, s.target.x), Scalar::max(s.source.y, s.target.y), true};
  }
};

std::ostream& operator<<(std::ostream& os, const Point& p);

}  // namespace minksum

#endif  // MINKSUM_GEOMETRY_HPP
