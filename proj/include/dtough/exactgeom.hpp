#pragma once

// Exact rational geometry: points, closed disks and the predicates every
// other module is built on. Nothing here ever rounds.

#include <dtough/errors.hpp>

#include <gmpxx.h>

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace dtough {

/// Exact rational coordinate, always in lowest terms with positive
/// denominator (GMP keeps mpq_class canonical after every operation).
using Coord = mpq_class;

/// Builds num/den in canonical form. Throws PreconditionViolated on den == 0.
Coord make_coord(long num, long den = 1);

/// Parses "a", "a/b" or a decimal literal such as "-0.25" exactly.
/// Returns nullopt on malformed text.
std::optional<Coord> parse_coord(std::string_view text);

/// Canonical text form: "a" for integers, "a/b" otherwise.
std::string to_string(const Coord& c);

struct Point
{
    Coord x;
    Coord y;

    Point() = default;
    Point(Coord x_, Coord y_) : x(std::move(x_)), y(std::move(y_)) {}
    Point(long x_, long y_) : x(x_), y(y_) {}

    friend bool operator==(const Point& a, const Point& b)
    {
        return a.x == b.x && a.y == b.y;
    }
    /// Lexicographic (x, then y).
    friend bool operator<(const Point& a, const Point& b)
    {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

std::ostream& operator<<(std::ostream& os, const Point& p);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Coord& s, const Point& a);
Coord dot(const Point& a, const Point& b);
Coord cross(const Point& a, const Point& b);
Coord dist_sq(const Point& a, const Point& b);
Point midpoint(const Point& a, const Point& b);

/// Closed disk. The radius is stored squared so it stays rational.
struct Disk
{
    Point center;
    Coord radius_sq;

    friend bool operator==(const Disk&, const Disk&) = default;
};

enum class Orientation { CCW, CW, COLLINEAR };
enum class CircleSide { INSIDE, ON, OUTSIDE };
enum class DiskSide { INTERIOR, BOUNDARY, EXTERIOR };

const char* to_string(Orientation o);
const char* to_string(CircleSide s);
const char* to_string(DiskSide s);

Orientation orient(const Point& a, const Point& b, const Point& c);

/// Position of d relative to the circle through a, b, c. Accepts either
/// orientation of (a, b, c); throws CollinearInput if they are collinear.
CircleSide in_circle(const Point& a, const Point& b, const Point& c,
                     const Point& d);

/// Throws CollinearInput.
Disk circumdisk(const Point& a, const Point& b, const Point& c);

DiskSide disk_classify(const Disk& disk, const Point& p);

/// The disk through `anchor` and `target` whose center lies on the segment
/// from `anchor` to `disk.center`. Requires `anchor` on the boundary and
/// `target` in the interior of `disk`.
Disk shrink_toward(const Disk& disk, const Point& anchor, const Point& target);

/// Parameter t in (0, 1) such that anchor + t * (center - anchor) is
/// equidistant from anchor and target. Smaller t means `target` is met
/// earlier when growing the disk out of `anchor`.
Coord shrink_parameter(const Disk& disk, const Point& anchor,
                       const Point& target);

/// True iff `inner` lies inside `outer` with the boundaries touching, i.e.
/// |c - c'| = R - R', tested in squared rational form.
bool internally_tangent(const Disk& outer, const Disk& inner);

/// True iff the interiors of two closed disks do not intersect
/// (|c - c'| >= r + r').
bool interiors_disjoint(const Disk& a, const Disk& b);

struct GeneralPositionViolation
{
    enum class Kind { DUPLICATE, COLLINEAR, COCIRCULAR };
    Kind kind;
    std::vector<std::size_t> witness;

    friend bool operator==(const GeneralPositionViolation&,
                           const GeneralPositionViolation&) = default;
};

const char* to_string(GeneralPositionViolation::Kind k);

/// Naive O(n^4) scan. Reports the lexicographically first offending tuple,
/// looking for duplicates first, then collinear triples, then cocircular
/// quadruples. nullopt means general position.
std::optional<GeneralPositionViolation>
general_position(std::span<const Point> points);

/// Whether `points` plus `candidate` is in general position, assuming
/// `points` already is. O(n^3).
bool extends_general_position(std::span<const Point> points,
                              const Point& candidate);

double to_double(const Coord& c);

} // namespace dtough
