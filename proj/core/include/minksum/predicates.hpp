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

#ifndef MINKSUM_PREDICATES_HPP
#define MINKSUM_PREDICATES_HPP

#include <optional>

#include "minksum/geometry.hpp"

namespace minksum {

enum class Orientation { RIGHT = -1, COLLINEAR = 0, LEFT = 1 };

// Sign of (b-a) x (c-a), computed exactly.
Orientation orientation(const Point& a, const Point& b, const Point& c);

// true iff c lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& c);

// Compares directions by angle with the +x axis in [0, 2pi).
// Returns <0, 0, >0 like a three-way comparison. Vectors must be nonzero;
// 0 means the directions are equal (parallel and co-directional).
int compare_direction(const Vector& u, const Vector& v);

// Compares the counterclockwise offsets of u and v from base, both taken
// in (0, 2pi]; a vector co-directional with base has offset 2pi (a full
// turn), not 0. Used to order convolution successors around a vertex.
int compare_ccw_offset(const Vector& base, const Vector& u, const Vector& v);

// true iff v lies in the counterclockwise angular interval from a to b.
// Boundary semantics: the interval is half-open [a, b); when a and b are
// parallel and opposite it is the open half-plane to the left of a; when
// a and b are co-directional the interval is the full circle.
bool ccw_between(const Vector& v, const Vector& a, const Vector& b);

// true iff v lies strictly inside the ccw interval (a, b); co-directional
// a, b means the full circle minus the single direction a.
bool strictly_ccw_between(const Vector& v, const Vector& a, const Vector& b);

// Sign of the in-circle determinant: > 0 iff d lies strictly inside the
// circumcircle of the counterclockwise triangle (a, b, c).
int in_circle(const Point& a, const Point& b, const Point& c, const Point& d);

struct SegmentIntersection {
  enum class Kind { None, Point, Overlap };
  Kind kind = Kind::None;
  Point p;        // Kind::Point
  Point ov_a;     // Kind::Overlap endpoints
  Point ov_b;
};

// Exact closed-set intersection of two segments. Collinear overlaps are
// reported with both overlap endpoints (which may coincide).
SegmentIntersection intersect_segments(const Point& p1, const Point& p2,
                                       const Point& q1, const Point& q2);

// Intersection parameter-free variant used by the vertical ray shooter:
// the lowest y > y0 at which the segment meets the vertical line x = x0,
// if any.
std::optional<Scalar> vertical_ray_hit(const Point& a, const Point& b,
                                       const Scalar& x0, const Scalar& y0);

}  // namespace minksum

#endif  // MINKSUM_PREDICATES_HPP
