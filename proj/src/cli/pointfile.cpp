#include <dtough/cli/pointfile.hpp>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace dtough::cli {

std::vector<Point> parse_points(std::istream& in)
{
    std::vector<Point> out;
    std::map<Point, std::size_t> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;)
            tokens.push_back(tok);
        if (tokens.empty())
            continue;
        if (tokens.size() != 2)
            throw ParseError(lineno, "expected two coordinates, got " +
                                         std::to_string(tokens.size()));
        auto x = parse_coord(tokens[0]);
        auto y = parse_coord(tokens[1]);
        if (!x)
            throw ParseError(lineno, "bad coordinate '" + tokens[0] + "'");
        if (!y)
            throw ParseError(lineno, "bad coordinate '" + tokens[1] + "'");
        Point p(std::move(*x), std::move(*y));
        auto [it, inserted] = seen.emplace(p, lineno);
        if (!inserted)
            throw ParseError(lineno, "duplicate of the point on line " +
                                         std::to_string(it->second));
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Point> parse_points(const std::string& text)
{
    std::istringstream in(text);
    return parse_points(in);
}

std::vector<Point> load_points(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    return parse_points(in);
}

std::string format_points(std::span<const Point> points)
{
    std::string out;
    for (const auto& p : points) {
        out += to_string(p.x);
        out += ' ';
        out += to_string(p.y);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << contents;
    if (!out)
        throw Error("write failed: " + path);
}

namespace {

Coord grid(std::mt19937_64& rng)
{
    return Coord(static_cast<long>(rng() % (kGridDenominator + 1)),
                 kGridDenominator);
}

} // namespace

std::vector<Point> random_points(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Point> out;
    while (out.size() < n) {
        Point p(grid(rng), grid(rng));
        p.x.canonicalize();
        p.y.canonicalize();
        if (extends_general_position(out, p))
            out.push_back(std::move(p));
    }
    return out;
}

std::vector<Point> convex_points(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Point> out;
    while (out.size() < n) {
        Coord x = grid(rng);
        x.canonicalize();
        Point p(x, Coord(x * x));
        if (extends_general_position(out, p))
            out.push_back(std::move(p));
    }
    return out;
}

} // namespace dtough::cli
