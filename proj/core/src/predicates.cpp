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

#include "minksum/predicates.hpp"

#include <ostream>

#include "minksum/errors.hpp"

namespace minksum {

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << p.x << "," << p.y << ")";
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  int s = cross(b - a, c - a).sign();
  return s > 0 ? Orientation::LEFT : (s < 0 ? Orientation::RIGHT : Orientation::COLLINEAR);
}

bool on_segment(const Point& a, const Point& b, const Point& c) {
  if (orientation(a, b, c) != Orientation::COLLINEAR) return false;
  return Scalar::min(a.x, b.x) <= c.x && c.x <= Scalar::max(a.x, b.x) &&
         Scalar::min(a.y, b.y) <= c.y && c.y <= Scalar::max(a.y, b.y);
}

namespace {

void require_nonzero(const Vector& v) {
  if (v.x.sign() == 0 && v.y.sign() == 0)
    throw GeometryError(ErrorKind::Internal, "zero vector in angular predicate");
}

// 0 for the upper half [0, pi) (includes +x axis), 1 for the lower half.
int half_plane(const Vector& v) {
  int sy = v.y.sign();
  if (sy > 0) return 0;
  if (sy < 0) return 1;
  return v.x.sign() > 0 ? 0 : 1;
}

}  // namespace

int compare_direction(const Vector& u, const Vector& v) {
  require_nonzero(u);
  require_nonzero(v);
  int hu = half_plane(u), hv = half_plane(v);
  if (hu != hv) return hu < hv ? -1 : 1;
  int s = cross(u, v).sign();
  // Same half-plane: positive cross means u comes first.
  return s > 0 ? -1 : (s < 0 ? 1 : 0);
}

namespace {

// Coarse class of the ccw offset of v from base: 0 = co-directional,
// 1 = in (0, pi), 2 = opposite (pi), 3 = in (pi, 2pi).
int offset_class(const Vector& base, const Vector& v) {
  int cr = cross(base, v).sign();
  if (cr > 0) return 1;
  if (cr < 0) return 3;
  return dot(base, v).sign() > 0 ? 0 : 2;
}

}  // namespace

int compare_ccw_offset(const Vector& base, const Vector& u, const Vector& v) {
  require_nonzero(base);
  require_nonzero(u);
  require_nonzero(v);
  // Offsets live in (0, 2pi]: co-directional counts as a full turn.
  int cu = offset_class(base, u);
  int cv = offset_class(base, v);
  if (cu == 0) cu = 4;
  if (cv == 0) cv = 4;
  if (cu != cv) return cu < cv ? -1 : 1;
  if (cu == 2 || cu == 4) return 0;
  int s = cross(u, v).sign();
  return s > 0 ? -1 : (s < 0 ? 1 : 0);
}

bool ccw_between(const Vector& v, const Vector& a, const Vector& b) {
  require_nonzero(v);
  require_nonzero(a);
  require_nonzero(b);
  int cb = offset_class(a, b);
  if (cb == 0) return true;                       // full circle
  if (cb == 2) return cross(a, v).sign() > 0;     // open half-plane left of a
  int cv = offset_class(a, v);
  if (cv == 0) return true;                       // the a end is inside
  if (cv != cb) return cv < cb;
  // Same class, strictly within (0,pi) or (pi,2pi): compare by cross sign.
  return cross(v, b).sign() > 0;
}

bool strictly_ccw_between(const Vector& v, const Vector& a, const Vector& b) {
  require_nonzero(v);
  require_nonzero(a);
  require_nonzero(b);
  int cv = offset_class(a, v);
  if (cv == 0) return false;
  int cb = offset_class(a, b);
  if (cb == 0) return true;  // full circle minus the a direction
  if (cv != cb) return cv < cb;
  if (cv == 2) return false;  // v opposite to a, equal to b
  return cross(v, b).sign() > 0;
}

int in_circle(const Point& a, const Point& b, const Point& c, const Point& d) {
  Scalar adx = a.x - d.x, ady = a.y - d.y;
  Scalar bdx = b.x - d.x, bdy = b.y - d.y;
  Scalar cdx = c.x - d.x, cdy = c.y - d.y;
  Scalar alift = adx * adx + ady * ady;
  Scalar blift = bdx * bdx + bdy * bdy;
  Scalar clift = cdx * cdx + cdy * cdy;
  Scalar det = adx * (bdy * clift - cdy * blift) - ady * (bdx * clift - cdx * blift) +
               alift * (bdx * cdy - cdx * bdy);
  return det.sign();
}

SegmentIntersection intersect_segments(const Point& p1, const Point& p2,
                                       const Point& q1, const Point& q2) {
  SegmentIntersection out;
  Vector r = p2 - p1;
  Vector s = q2 - q1;
  Scalar denom = cross(r, s);
  if (denom.sign() != 0) {
    Scalar t_num = cross(q1 - p1, s);
    Scalar u_num = cross(q1 - p1, r);
    Scalar t = t_num / denom;
    Scalar u = u_num / denom;
    Scalar zero(0), one(1);
    if (t >= zero && t <= one && u >= zero && u <= one) {
      out.kind = SegmentIntersection::Kind::Point;
      out.p = {p1.x + t * r.x, p1.y + t * r.y};
    }
    return out;
  }
  // Parallel. Distinct supporting lines never meet.
  if (cross(q1 - p1, r).sign() != 0) return out;
  // Collinear: order by the dominant axis of r.
  auto key = [&](const Point& p) { return dot(p - p1, r); };
  Scalar kp1(0), kp2 = dot(r, r);
  Scalar kq1 = key(q1), kq2 = key(q2);
  const Point* lo_q = &q1;
  const Point* hi_q = &q2;
  if (kq2 < kq1) {
    std::swap(kq1, kq2);
    lo_q = &q2;
    hi_q = &q1;
  }
  Scalar lo = Scalar::max(kp1, kq1);
  Scalar hi = Scalar::min(kp2, kq2);
  if (lo > hi) return out;
  const Point& lo_pt = (kq1 > kp1) ? *lo_q : p1;
  const Point& hi_pt = (kq2 < kp2) ? *hi_q : p2;
  if (lo == hi) {
    out.kind = SegmentIntersection::Kind::Point;
    out.p = lo_pt;
    return out;
  }
  out.kind = SegmentIntersection::Kind::Overlap;
  out.ov_a = lo_pt;
  out.ov_b = hi_pt;
  return out;
}

std::optional<Scalar> vertical_ray_hit(const Point& a, const Point& b,
                                       const Scalar& x0, const Scalar& y0) {
  if (a.x == b.x) {
    if (a.x != x0) return std::nullopt;
    Scalar lo = Scalar::min(a.y, b.y);
    Scalar hi = Scalar::max(a.y, b.y);
    if (hi <= y0) return std::nullopt;
    return lo > y0 ? lo : std::nullopt;  // ray starting inside the edge is a caller bug
  }
  Scalar xlo = Scalar::min(a.x, b.x);
  Scalar xhi = Scalar::max(a.x, b.x);
  if (x0 < xlo || x0 > xhi) return std::nullopt;
  Scalar t = (x0 - a.x) / (b.x - a.x);
  Scalar y = a.y + t * (b.y - a.y);
  if (y > y0) return y;
  return std::nullopt;
}

}  // namespace minksum
