#include <dtough/exactgeom.hpp>

#include <cctype>
#include <charconv>

namespace dtough {

Coord make_coord(long num, long den)
{
    if (den == 0)
        throw PreconditionViolated("zero denominator");
    Coord c(num, den);
    c.canonicalize();
    return c;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

std::optional<mpz_class> parse_integer(std::string_view s)
{
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        return std::nullopt;
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long k)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

} // namespace

std::optional<Coord> parse_coord(std::string_view text)
{
    if (text.empty())
        return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_integer(text.substr(0, slash));
        auto den_text = text.substr(slash + 1);
        if (!num || !all_digits(den_text))
            return std::nullopt;
        mpz_class den(std::string(den_text), 10);
        if (den == 0)
            return std::nullopt;
        Coord c(*num, den);
        c.canonicalize();
        return c;
    }

    // Decimal literal: [sign] digits [. digits] [e|E [sign] digits]
    bool neg = false;
    if (text.front() == '-' || text.front() == '+') {
        neg = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_text = text.substr(e + 1);
        const char* first = exp_text.data();
        const char* last = first + exp_text.size();
        if (!exp_text.empty() && *first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, last, exponent);
        if (ec != std::errc() || ptr != last || first == last)
            return std::nullopt;
        if (exponent > 4096 || exponent < -4096)
            return std::nullopt;
        text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
        int_part = text.substr(0, dot_pos);
        frac_part = text.substr(dot_pos + 1);
        if (!frac_part.empty() && !all_digits(frac_part))
            return std::nullopt;
    }
    if (int_part.empty() && frac_part.empty())
        return std::nullopt;
    if (!int_part.empty() && !all_digits(int_part))
        return std::nullopt;

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits, 10);
    if (neg)
        num = -num;
    long scale = static_cast<long>(frac_part.size()) - exponent;
    Coord c;
    if (scale >= 0)
        c = Coord(num, pow10(static_cast<unsigned long>(scale)));
    else
        c = Coord(num * pow10(static_cast<unsigned long>(-scale)));
    c.canonicalize();
    return c;
}

std::string to_string(const Coord& c)
{
    return c.get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Point& p)
{
    return os << '(' << to_string(p.x) << ", " << to_string(p.y) << ')';
}

Point operator+(const Point& a, const Point& b)
{
    return {a.x + b.x, a.y + b.y};
}

Point operator-(const Point& a, const Point& b)
{
    return {a.x - b.x, a.y - b.y};
}

Point operator*(const Coord& s, const Point& a)
{
    return {s * a.x, s * a.y};
}

Coord dot(const Point& a, const Point& b)
{
    return a.x * b.x + a.y * b.y;
}

Coord cross(const Point& a, const Point& b)
{
    return a.x * b.y - a.y * b.x;
}

Coord dist_sq(const Point& a, const Point& b)
{
    Coord dx = a.x - b.x;
    Coord dy = a.y - b.y;
    return dx * dx + dy * dy;
}

Point midpoint(const Point& a, const Point& b)
{
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

const char* to_string(Orientation o)
{
    switch (o) {
    case Orientation::CCW: return "CCW";
    case Orientation::CW: return "CW";
    case Orientation::COLLINEAR: return "COLLINEAR";
    }
    return "?";
}

const char* to_string(CircleSide s)
{
    switch (s) {
    case CircleSide::INSIDE: return "INSIDE";
    case CircleSide::ON: return "ON";
    case CircleSide::OUTSIDE: return "OUTSIDE";
    }
    return "?";
}

const char* to_string(DiskSide s)
{
    switch (s) {
    case DiskSide::INTERIOR: return "INTERIOR";
    case DiskSide::BOUNDARY: return "BOUNDARY";
    case DiskSide::EXTERIOR: return "EXTERIOR";
    }
    return "?";
}

const char* to_string(GeneralPositionViolation::Kind k)
{
    switch (k) {
    case GeneralPositionViolation::Kind::DUPLICATE: return "DUPLICATE";
    case GeneralPositionViolation::Kind::COLLINEAR: return "COLLINEAR";
    case GeneralPositionViolation::Kind::COCIRCULAR: return "COCIRCULAR";
    }
    return "?";
}

Orientation orient(const Point& a, const Point& b, const Point& c)
{
    int s = sgn(cross(b - a, c - a));
    if (s > 0)
        return Orientation::CCW;
    if (s < 0)
        return Orientation::CW;
    return Orientation::COLLINEAR;
}

CircleSide in_circle(const Point& a, const Point& b, const Point& c,
                     const Point& d)
{
    Orientation o = orient(a, b, c);
    if (o == Orientation::COLLINEAR)
        throw CollinearInput();

    Point ad = a - d;
    Point bd = b - d;
    Point cd = c - d;
    Coord alift = dot(ad, ad);
    Coord blift = dot(bd, bd);
    Coord clift = dot(cd, cd);
    Coord det = alift * cross(bd, cd) + blift * cross(cd, ad) +
                clift * cross(ad, bd);
    int s = sgn(det);
    if (o == Orientation::CW)
        s = -s;
    if (s > 0)
        return CircleSide::INSIDE;
    if (s < 0)
        return CircleSide::OUTSIDE;
    return CircleSide::ON;
}

Disk circumdisk(const Point& a, const Point& b, const Point& c)
{
    Point ba = b - a;
    Point ca = c - a;
    Coord denom = 2 * cross(ba, ca);
    if (sgn(denom) == 0)
        throw CollinearInput();
    Coord bl = dot(ba, ba);
    Coord cl = dot(ca, ca);
    Point offset{(ca.y * bl - ba.y * cl) / denom,
                 (ba.x * cl - ca.x * bl) / denom};
    return Disk{a + offset, dot(offset, offset)};
}

DiskSide disk_classify(const Disk& disk, const Point& p)
{
    int s = cmp(dist_sq(disk.center, p), disk.radius_sq);
    if (s < 0)
        return DiskSide::INTERIOR;
    if (s > 0)
        return DiskSide::EXTERIOR;
    return DiskSide::BOUNDARY;
}

Coord shrink_parameter(const Disk& disk, const Point& anchor,
                       const Point& target)
{
    if (disk_classify(disk, anchor) != DiskSide::BOUNDARY)
        throw PreconditionViolated("shrink anchor is not on the disk boundary");
    if (disk_classify(disk, target) != DiskSide::INTERIOR)
        throw PreconditionViolated("shrink target is not interior to the disk");
    if (anchor == target)
        throw PreconditionViolated("shrink anchor equals target");
    // |x(t) - anchor|^2 = |x(t) - target|^2 with x(t) = anchor + t (c - anchor)
    // reduces to |anchor - target|^2 = 2 t (target - anchor).(c - anchor).
    Coord denom = 2 * dot(target - anchor, disk.center - anchor);
    return dist_sq(anchor, target) / denom;
}

Disk shrink_toward(const Disk& disk, const Point& anchor, const Point& target)
{
    Coord t = shrink_parameter(disk, anchor, target);
    Point center = anchor + t * (disk.center - anchor);
    return Disk{center, t * t * disk.radius_sq};
}

bool internally_tangent(const Disk& outer, const Disk& inner)
{
    if (outer.radius_sq < inner.radius_sq)
        return false;
    Coord x = outer.radius_sq + inner.radius_sq -
              dist_sq(outer.center, inner.center);
    return sgn(x) >= 0 && x * x == 4 * outer.radius_sq * inner.radius_sq;
}

bool interiors_disjoint(const Disk& a, const Disk& b)
{
    Coord x = dist_sq(a.center, b.center) - a.radius_sq - b.radius_sq;
    return sgn(x) >= 0 && x * x >= 4 * a.radius_sq * b.radius_sq;
}

std::optional<GeneralPositionViolation>
general_position(std::span<const Point> points)
{
    using Kind = GeneralPositionViolation::Kind;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                return GeneralPositionViolation{Kind::DUPLICATE, {i, j}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (orient(points[i], points[j], points[k]) ==
                    Orientation::COLLINEAR)
                    return GeneralPositionViolation{Kind::COLLINEAR,
                                                    {i, j, k}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                    if (in_circle(points[i], points[j], points[k],
                                  points[l]) == CircleSide::ON)
                        return GeneralPositionViolation{Kind::COCIRCULAR,
                                                        {i, j, k, l}};
    return std::nullopt;
}

bool extends_general_position(std::span<const Point> points,
                              const Point& candidate)
{
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (points[i] == candidate)
            return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (orient(points[i], points[j], candidate) ==
                Orientation::COLLINEAR)
                return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (in_circle(points[i], points[j], points[k], candidate) ==
                    CircleSide::ON)
                    return false;
    return true;
}

double to_double(const Coord& c)
{
    return c.get_d();
}

} // namespace dtough
