#pragma once

// Plain-text point files: one "x y" pair per line, coordinates as integers,
// decimals (read exactly) or fractions a/b. '#' starts a comment.

#include <dtough/exactgeom.hpp>

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace dtough::cli {

class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message)
        , line(line)
    {}
    std::size_t line;
};

/// Throws ParseError, including for duplicate points.
std::vector<Point> parse_points(std::istream& in);
std::vector<Point> parse_points(const std::string& text);

/// Throws ParseError or Error if the file cannot be opened.
std::vector<Point> load_points(const std::string& path);

/// Canonical form, one "x y" line per point; parse_points inverts it.
std::string format_points(std::span<const Point> points);

void write_file(const std::string& path, const std::string& contents);

constexpr long kGridDenominator = 1L << 20;

/// Grid points with denominator 2^20 in [0, 1]^2, rejection-sampled into
/// general position.
std::vector<Point> random_points(std::size_t n, std::uint64_t seed);

/// Points (x, x^2) with x on the same grid: always in convex position,
/// rejection-sampled against cocircularity.
std::vector<Point> convex_points(std::size_t n, std::uint64_t seed);

} // namespace dtough::cli
