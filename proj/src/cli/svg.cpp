#include <dtough/cli/svg.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace dtough::cli {

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 24.0;

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000")
        s = "0.000000";
    return s;
}

class Frame
{
public:
    explicit Frame(const Scene& scene)
    {
        auto grow = [&](double x, double y, double r = 0.0) {
            min_x_ = std::min(min_x_, x - r);
            max_x_ = std::max(max_x_, x + r);
            min_y_ = std::min(min_y_, y - r);
            max_y_ = std::max(max_y_, y + r);
        };
        for (const auto& p : scene.points)
            grow(to_double(p.x), to_double(p.y));
        for (const auto& p : scene.blockers)
            grow(to_double(p.x), to_double(p.y));
        for (const auto& d : scene.disks)
            grow(to_double(d.center.x), to_double(d.center.y),
                 std::sqrt(to_double(d.radius_sq)));
        if (min_x_ > max_x_) {
            min_x_ = min_y_ = 0.0;
            max_x_ = max_y_ = 1.0;
        }
        const double extent = std::max({max_x_ - min_x_, max_y_ - min_y_, 1e-12});
        scale_ = (kSize - 2 * kMargin) / extent;
    }

    double x(const Point& p) const { return kMargin + (to_double(p.x) - min_x_) * scale_; }
    double y(const Point& p) const { return kMargin + (max_y_ - to_double(p.y)) * scale_; }
    double length(double world) const { return world * scale_; }

private:
    double min_x_ = 1e300;
    double max_x_ = -1e300;
    double min_y_ = 1e300;
    double max_y_ = -1e300;
    double scale_ = 1.0;
};

} // namespace

std::string render_svg(const Scene& scene)
{
    const Frame f(scene);
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) +
           "\" height=\"" + num(kSize) + "\" viewBox=\"0 0 " + num(kSize) +
           " " + num(kSize) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const auto& d : scene.disks) {
        out += "<circle class=\"disk\" cx=\"" + num(f.x(d.center)) + "\" cy=\"" +
               num(f.y(d.center)) + "\" r=\"" +
               num(f.length(std::sqrt(to_double(d.radius_sq)))) +
               "\" fill=\"none\" stroke=\"#3070c0\" stroke-width=\"0.75\"/>\n";
    }

    if (scene.triangulation) {
        const auto& t = *scene.triangulation;
        auto dashed = [&](int v) {
            return std::find(scene.dashed_around.begin(),
                             scene.dashed_around.end(),
                             v) != scene.dashed_around.end();
        };
        for (const auto& e : t.edges()) {
            const bool bold = t.kind(e) == EdgeKind::BOUNDARY;
            const Point& a = t.vertex(e.a);
            const Point& b = t.vertex(e.b);
            out += "<line x1=\"" + num(f.x(a)) + "\" y1=\"" + num(f.y(a)) +
                   "\" x2=\"" + num(f.x(b)) + "\" y2=\"" + num(f.y(b)) +
                   "\" stroke=\"black\" stroke-width=\"" + (bold ? "3" : "1") +
                   "\"" +
                   (dashed(e.a) || dashed(e.b) ? " stroke-dasharray=\"4 3\"" : "") +
                   "/>\n";
        }
    }

    if (scene.path.size() >= 2) {
        out += "<polyline class=\"path\" fill=\"none\" stroke=\"#d04020\" "
               "stroke-width=\"2.5\" points=\"";
        for (std::size_t i = 0; i < scene.path.size(); ++i) {
            const Point& p = scene.points[static_cast<std::size_t>(scene.path[i])];
            out += (i ? " " : "") + num(f.x(p)) + "," + num(f.y(p));
        }
        out += "\"/>\n";
    }

    for (const auto& b : scene.blockers) {
        const double x = f.x(b);
        const double y = f.y(b);
        out += "<path class=\"blocker\" d=\"M" + num(x - 4) + " " + num(y - 4) +
               " L" + num(x + 4) + " " + num(y + 4) + " M" + num(x - 4) + " " +
               num(y + 4) + " L" + num(x + 4) + " " + num(y - 4) +
               "\" stroke=\"#c00000\" stroke-width=\"1.5\"/>\n";
    }

    for (std::size_t i = 0; i < scene.points.size(); ++i) {
        const bool hollow = std::find(scene.hollow.begin(), scene.hollow.end(),
                                      static_cast<int>(i)) != scene.hollow.end();
        out += "<circle class=\"vertex\" cx=\"" + num(f.x(scene.points[i])) +
               "\" cy=\"" + num(f.y(scene.points[i])) + "\" r=\"4\" fill=\"" +
               (hollow ? "white" : "black") +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace dtough::cli
