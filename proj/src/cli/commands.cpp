#include <dtough/cli/commands.hpp>

#include <dtough/blocking.hpp>
#include <dtough/cli/pointfile.hpp>
#include <dtough/cli/report.hpp>
#include <dtough/cli/svg.hpp>
#include <dtough/diskpath.hpp>
#include <dtough/structure.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

namespace dtough::cli {

namespace {

struct Globals
{
    std::uint64_t seed = 0;
    std::string svg;
    bool json = true;
    bool timing = true;
    std::size_t max_n = 0; ///< 0 keeps the default gates
};

std::size_t gate(const Globals& g, std::size_t fallback)
{
    return g.max_n ? g.max_n : fallback;
}

unsigned thread_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DTOUGH_THREADS")) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0)
            n = static_cast<unsigned>(std::min<unsigned long>(n, cap));
    }
    return n;
}

class Report
{
public:
    explicit Report(const std::string& command)
    {
        json_["command"] = command;
        json_["instance"] = nullptr;
        json_["values"] = Json::object();
        json_["verdicts"] = Json::object();
        json_["witnesses"] = Json::object();
        json_["refused"] = Json::array();
        json_["error"] = nullptr;
        json_["exit_code"] = 0;
        json_["timing"] = Json::object();
    }

    Json& operator[](const char* key) { return json_[key]; }

    template<typename F>
    auto timed(const std::string& label, F&& f)
    {
        const auto start = std::chrono::steady_clock::now();
        auto finish = [&] {
            const std::chrono::duration<double, std::milli> ms =
                std::chrono::steady_clock::now() - start;
            json_["timing"][label] = ms.count();
        };
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            finish();
        } else {
            auto result = f();
            finish();
            return result;
        }
    }

    void refuse(const std::string& check, std::size_t n, std::size_t limit)
    {
        json_["refused"].push_back(
            Json{{"check", check}, {"n", n}, {"limit", limit}});
    }

    void fail(const std::string& type, const std::string& message,
              Json witness = nullptr)
    {
        json_["error"] = Json{{"type", type}, {"message", message}, {"witness", witness}};
    }

    int exit_code(int forced = -1)
    {
        int code = kOk;
        if (forced >= 0) {
            code = forced;
        } else {
            for (const auto& [key, value] : json_["verdicts"].items())
                if (value.is_boolean() && !value.get<bool>())
                    code = kAlarm;
            if (code == kOk && !json_["refused"].empty())
                code = kRefused;
        }
        json_["exit_code"] = code;
        return code;
    }

    void emit(std::ostream& out, const Globals& g) const
    {
        if (!g.json)
            return;
        out << dump(g.timing ? json_ : without_timing(json_));
    }

private:
    Json json_;
};

Coord coordinate_argument(const std::string& text)
{
    auto c = parse_coord(text);
    if (!c)
        throw PreconditionViolated("bad coordinate '" + text + "'");
    return *c;
}

void maybe_render(const Globals& g, const Scene& scene, Report& report)
{
    if (g.svg.empty())
        return;
    write_file(g.svg, render_svg(scene));
    report["values"]["svg"] = g.svg;
}

// ---------------------------------------------------------------- gen

struct GenArgs
{
    std::string kind;
    long n = 0;
    std::string out;
    std::string blockers_out;
};

struct GenBounds
{
    long min;
    long max;
};

GenBounds gen_bounds(const std::string& kind)
{
    if (kind == "fan")
        return {4, 64};
    if (kind == "disjoint-arc")
        return {2, 24};
    return {3, 64};
}

void cmd_gen(const GenArgs& a, const Globals& g, Report& r, std::ostream& out)
{
    const auto bounds = gen_bounds(a.kind);
    const auto n = static_cast<std::size_t>(std::max(a.n, 0L));
    if (a.n < bounds.min)
        throw TooFewPoints(n);
    const long limit = g.max_n ? static_cast<long>(g.max_n) : bounds.max;
    if (a.n > limit)
        throw TooLarge(n, static_cast<std::size_t>(limit));

    std::vector<Point> points;
    std::vector<Point> blockers;
    Scene scene;
    r["values"]["kind"] = a.kind;
    r["values"]["n"] = a.n;
    r["values"]["seed"] = g.seed;

    if (a.kind == "random" || a.kind == "convex") {
        points = r.timed("generate", [&] {
            return a.kind == "random" ? random_points(n, g.seed)
                                      : convex_points(n, g.seed);
        });
        if (auto v = general_position(points))
            throw InvariantBroken("generator emitted a degenerate set");
        r["verdicts"]["general_position"] = true;
        if (a.kind == "convex") {
            const bool convex = build(points).hull().size() == n;
            if (!convex)
                throw InvariantBroken("convex generator emitted an interior point");
            r["verdicts"]["convex_position"] = true;
        }
    } else if (a.kind == "fan") {
        auto inst = r.timed("generate", [&] {
            return fan_instance(static_cast<int>(a.n), g.seed);
        });
        if (!inst.verified)
            throw ConstructionFailed("fan instance did not verify");
        points = inst.p;
        blockers = inst.b;
        r["values"]["blockers"] = blockers.size();
        r["values"]["epsilon"] = to_json(inst.epsilon);
        r["values"]["delta"] = to_json(inst.delta);
        r["verdicts"]["general_position"] = true;
        r["verdicts"]["blocked"] = true;
        std::vector<Point> all = points;
        all.insert(all.end(), blockers.begin(), blockers.end());
        scene.triangulation = build(all);
        scene.blockers = blockers;
    } else {
        auto inst = r.timed("generate", [&] {
            return disjoint_disk_instance(static_cast<int>(a.n));
        });
        if (!inst.pairwise_disjoint)
            throw ConstructionFailed("disk chain is not interior-disjoint");
        points = inst.p;
        r["values"]["flatness"] = to_json(inst.flatness);
        Json disks = Json::array();
        for (const auto& d : inst.disks)
            disks.push_back(to_json(d));
        r["witnesses"]["disks"] = disks;
        r["verdicts"]["general_position"] = true;
        r["verdicts"]["pairwise_disjoint"] = true;
        scene.disks = inst.disks;
    }

    const Triangulation t = build(points);
    r["instance"] = instance_summary(t);
    if (!scene.triangulation)
        scene.triangulation = t;
    scene.points = points;

    std::string blockers_path = a.blockers_out;
    if (blockers_path.empty() && !a.out.empty() && a.kind == "fan")
        blockers_path = a.out + ".blockers";
    if (!blockers_path.empty()) {
        write_file(blockers_path, format_points(blockers));
        r["values"]["blockers_file"] = blockers_path;
    }
    if (a.out.empty()) {
        out << format_points(points);
    } else {
        write_file(a.out, format_points(points));
        r["values"]["file"] = a.out;
    }
    maybe_render(g, scene, r);
}

// ---------------------------------------------------------------- check

const std::vector<std::string> kAllChecks = {"delaunay", "toughness", "mis",
                                             "matching", "audit"};

struct CheckArgs
{
    std::string file;
    std::vector<std::string> checks;
};

void cmd_check(const CheckArgs& a, const Globals& g, Report& r)
{
    const auto points = load_points(a.file);
    const Triangulation t = r.timed("build", [&] { return build(points); });
    const std::size_t n = t.size();
    r["instance"] = instance_summary(t);
    auto wants = [&](const char* name) {
        return std::find(a.checks.begin(), a.checks.end(), name) != a.checks.end();
    };
    auto& values = r["values"];
    auto& verdicts = r["verdicts"];
    auto& witnesses = r["witnesses"];

    if (wants("delaunay")) {
        r.timed("delaunay", [&] {
            Json witness = nullptr;
            if (auto ce = verify_delaunay(t))
                witness = Json{{"triangle", t.triangles()[static_cast<std::size_t>(ce->triangle)]},
                               {"vertex", ce->vertex}};
            for (const auto& e : t.edges()) {
                if (!witness.is_null())
                    break;
                if (t.kind(e) == EdgeKind::INTERIOR &&
                    edge_angle_check(t, e) == AngleCheck::VIOLATED)
                    witness = Json{{"angle_violation", to_json(e)}};
            }
            verdicts["delaunay"] = witness.is_null();
            witnesses["delaunay"] = witness;
        });
    }

    if (wants("toughness")) {
        const std::size_t limit = gate(g, kToughnessLimit);
        if (n > limit) {
            r.refuse("toughness", n, limit);
        } else {
            auto tough = r.timed("toughness", [&] {
                return toughness_exhaustive(t, EnumerationOrder::ASCENDING,
                                            thread_count(), limit);
            });
            if (tough) {
                values["toughness"] = to_json(tough->ratio);
                verdicts["toughness"] = tough->ratio >= 1;
                witnesses["toughness"] = Json{{"separator", to_json(tough->witness)},
                                              {"components", tough->components}};
            } else {
                values["toughness"] = nullptr;
                verdicts["toughness"] = true;
                witnesses["toughness"] = nullptr;
            }
        }
    }

    std::optional<IndependentSet> mis;
    const std::size_t mis_limit = gate(g, kMisLimit);
    if (wants("mis") || wants("audit")) {
        if (n > mis_limit) {
            if (wants("mis"))
                r.refuse("mis", n, mis_limit);
        } else {
            mis = r.timed("mis", [&] { return max_independent_set(t, mis_limit); });
        }
    }
    if (wants("mis") && mis) {
        values["mis"] = mis->size;
        values["mis_bound"] = n / 2;
        verdicts["mis"] = mis->size <= n / 2;
        witnesses["mis"] = to_json(mis->certificate);
    }

    if (wants("matching")) {
        auto m = r.timed("matching", [&] { return maximum_matching(n, t.edges()); });
        values["matching_size"] = m.size();
        verdicts["matching"] = m.size() == n / 2;
        witnesses["matching"] = to_json(m);
    }

    if (wants("audit")) {
        if (!mis) {
            r.refuse("audit", n, mis_limit);
        } else {
            auto audit = r.timed("audit", [&] { return angle_audit(t, mis->certificate); });
            values["audit"] = to_json(audit);
            verdicts["audit"] = audit.passed();
            witnesses["audit"] = Json{{"independent", to_json(mis->certificate)}};
        }
    }

    Scene scene;
    scene.points = points;
    scene.triangulation = t;
    if (mis)
        scene.hollow = mis->certificate.members();
    maybe_render(g, scene, r);
}

// ---------------------------------------------------------------- path

struct PathArgs
{
    std::string file;
    int p = 0;
    int q = 0;
    std::string cx;
    std::string cy;
    std::string r2;
};

Json index_list(const std::vector<int>& v)
{
    return v;
}

void cmd_path(const PathArgs& a, const Globals& g, Report& r)
{
    const auto points = load_points(a.file);
    const Triangulation t = build(points);
    r["instance"] = instance_summary(t);
    const Disk disk{{coordinate_argument(a.cx), coordinate_argument(a.cy)},
                    coordinate_argument(a.r2)};
    const int n = static_cast<int>(t.size());
    if (a.p < 0 || a.p >= n || a.q < 0 || a.q >= n || a.p == a.q)
        throw PreconditionViolated("p and q must be distinct vertex indices");
    r["values"]["disk"] = to_json(disk);

    auto oracle = path_oracle(t, a.p, a.q, disk);
    r["values"]["oracle_path"] = oracle ? index_list(oracle->vertices) : Json(nullptr);

    const DiskPath path = r.timed("path", [&] { return find_path(t, a.p, a.q, disk); });
    r["values"]["path"] = index_list(path.vertices);
    r["verdicts"]["path_valid"] = valid_disk_path(t, a.p, a.q, path);
    r["verdicts"]["oracle_agrees"] = oracle.has_value();

    Scene scene;
    scene.points = points;
    scene.triangulation = t;
    scene.disks = {disk};
    scene.path = path.vertices;
    maybe_render(g, scene, r);
}

// ---------------------------------------------------------------- block

struct BlockArgs
{
    std::string points;
    std::string blockers;
};

void cmd_block(const BlockArgs& a, const Globals& g, Report& r)
{
    const auto p = load_points(a.points);
    const auto b = load_points(a.blockers);
    auto report = r.timed("block", [&] { return lower_bound_report(p, b); });

    std::vector<Point> all = p;
    all.insert(all.end(), b.begin(), b.end());
    const Triangulation t = build(all);
    r["instance"] = instance_summary(t);
    r["values"]["p_size"] = p.size();
    r["values"]["b_size"] = b.size();
    r["values"]["blocked"] = report.blocked;
    r["values"]["tight"] = report.blocked && b.size() == p.size();
    if (report.p_independent)
        r["verdicts"]["p_independent"] = *report.p_independent;
    if (report.size_ok)
        r["verdicts"]["size_ok"] = *report.size_ok;
    r["witnesses"]["unblocked_edge"] =
        report.witness ? to_json(*report.witness) : Json(nullptr);

    Scene scene;
    scene.points = p;
    scene.triangulation = t;
    scene.blockers = b;
    maybe_render(g, scene, r);
}

// ---------------------------------------------------------------- render

struct RenderArgs
{
    std::string file;
    std::string blockers;
    bool mis = false;
    bool audit = false;
    bool witness_disks = false;
};

Scene render_scene(const RenderArgs& a, const Globals& g, Report& r)
{
    const auto points = load_points(a.file);
    const Triangulation t = build(points);
    r["instance"] = instance_summary(t);

    Scene scene;
    scene.points = points;
    scene.triangulation = t;

    if (a.mis || a.audit) {
        const std::size_t limit = gate(g, kMisLimit);
        if (t.size() > limit) {
            r.refuse(a.audit ? "audit" : "mis", t.size(), limit);
        } else {
            const auto mis = max_independent_set(t, limit);
            scene.hollow = mis.certificate.members();
            r["witnesses"]["mis"] = to_json(mis.certificate);
            if (a.audit) {
                const auto aug = sentinel_augment(t, mis.certificate.complement());
                scene.points = aug.augmented.vertices();
                scene.triangulation = aug.augmented;
                scene.dashed_around = scene.hollow;
                r["values"]["sentinels"] =
                    Json{{"u", aug.u}, {"v", to_json(aug.v)}, {"w", to_json(aug.w)}};
            }
        }
    }
    if (a.witness_disks)
        for (const auto& e : t.edges())
            scene.disks.push_back(witness_disk(t, e));
    if (!a.blockers.empty()) {
        scene.blockers = load_points(a.blockers);
        std::vector<Point> all = scene.points;
        all.insert(all.end(), scene.blockers.begin(), scene.blockers.end());
        scene.triangulation = build(all);
    }
    return scene;
}

// ---------------------------------------------------------------- driver

int report_error(Report& r, std::ostream& err, int code, const std::string& type,
                 const std::string& message, Json witness = nullptr)
{
    err << "dtough: " << message << "\n";
    r.fail(type, message, std::move(witness));
    return r.exit_code(code);
}

int guarded(Report& r, std::ostream& err, const std::function<void()>& body)
{
    try {
        body();
        return r.exit_code();
    } catch (const ParseError& e) {
        return report_error(r, err, kBadInput, "ParseError", e.what(),
                            Json{{"line", e.line}});
    } catch (const DegenerateInput& e) {
        return report_error(r, err, kBadInput, "DegenerateInput", e.what(),
                            to_json(e.violation));
    } catch (const TooFewPoints& e) {
        return report_error(r, err, kBadInput, "TooFewPoints", e.what());
    } catch (const TooLarge& e) {
        r.refuse(r["command"].get<std::string>(), e.size, e.limit);
        return report_error(r, err, kRefused, "TooLarge", e.what());
    } catch (const TieOnBoundary& e) {
        return report_error(r, err, kBadInput, "TieOnBoundary", e.what(),
                            Json{{"anchor", e.anchor}, {"vertices", e.vertices}});
    } catch (const NotIndependent& e) {
        return report_error(r, err, kBadInput, "NotIndependent", e.what(),
                            Json{{"edge", e.edge}});
    } catch (const PreconditionViolated& e) {
        return report_error(r, err, kBadInput, "PreconditionViolated", e.what());
    } catch (const InvariantBroken& e) {
        return report_error(r, err, kAlarm, "InvariantBroken", e.what());
    } catch (const Error& e) {
        return report_error(r, err, kBadInput, "Error", e.what());
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Delaunay toughness, matching and blocking checks", "dtough"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Generator seed");
    app.add_option("--svg", g.svg, "Write an SVG figure to this path");
    app.add_flag("--json,!--no-json", g.json, "Print the JSON report (default on)");
    app.add_flag("!--no-timing", g.timing, "Omit the timing member");
    app.add_option("--max-n", g.max_n, "Override the size gates");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a point set");
    gen_cmd->add_option("kind", gen.kind)
        ->required()
        ->check(CLI::IsMember({"random", "convex", "fan", "disjoint-arc"}));
    gen_cmd->add_option("n", gen.n)->required();
    gen_cmd->add_option("--out,-o", gen.out, "Points file (stdout if omitted)");
    gen_cmd->add_option("--blockers-out", gen.blockers_out,
                        "Blockers file for fan instances");

    CheckArgs check;
    check.checks = kAllChecks;
    auto* check_cmd = app.add_subcommand("check", "Verify a point set");
    check_cmd->add_option("file", check.file)->required();
    check_cmd->add_option("--checks", check.checks, "Subset of checks")
        ->delimiter(',')
        ->check(CLI::IsMember(kAllChecks));

    PathArgs path;
    auto* path_cmd = app.add_subcommand("path", "Find a path inside a disk");
    path_cmd->add_option("file", path.file)->required();
    path_cmd->add_option("p", path.p)->required();
    path_cmd->add_option("q", path.q)->required();
    path_cmd->add_option("cx", path.cx)->required();
    path_cmd->add_option("cy", path.cy)->required();
    path_cmd->add_option("r2", path.r2)->required();

    BlockArgs block;
    auto* block_cmd = app.add_subcommand("block", "Verify a blocking set");
    block_cmd->add_option("points", block.points)->required();
    block_cmd->add_option("blockers", block.blockers)->required();

    RenderArgs render;
    auto* render_cmd = app.add_subcommand("render", "Draw a triangulation as SVG");
    render_cmd->add_option("file", render.file)->required();
    render_cmd->add_option("--blockers", render.blockers, "Blockers file");
    render_cmd->add_flag("--mis", render.mis, "Draw a maximum independent set hollow");
    render_cmd->add_flag("--audit", render.audit, "Overlay the sentinel augmentation");
    render_cmd->add_flag("--witness-disks", render.witness_disks,
                         "Draw a witness disk for every edge");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    if (*gen_cmd) {
        Report r("gen");
        const int code = guarded(r, err, [&] { cmd_gen(gen, g, r, out); });
        if (!gen.out.empty() || code != kOk)
            r.emit(out, g);
        return code;
    }
    if (*check_cmd) {
        Report r("check");
        const int code = guarded(r, err, [&] { cmd_check(check, g, r); });
        r.emit(out, g);
        return code;
    }
    if (*path_cmd) {
        Report r("path");
        const int code = guarded(r, err, [&] { cmd_path(path, g, r); });
        r.emit(out, g);
        return code;
    }
    if (*block_cmd) {
        Report r("block");
        const int code = guarded(r, err, [&] { cmd_block(block, g, r); });
        r.emit(out, g);
        return code;
    }

    Report r("render");
    std::string svg;
    const int code = guarded(r, err, [&] {
        svg = render_svg(render_scene(render, g, r));
        if (!g.svg.empty()) {
            write_file(g.svg, svg);
            r["values"]["svg"] = g.svg;
        }
    });
    if (g.svg.empty() && code == kOk)
        out << svg;
    else
        r.emit(out, g);
    return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"dtough"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace dtough::cli
