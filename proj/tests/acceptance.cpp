// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass.

#include "test_support.hpp"

#include <dtough/blocking.hpp>
#include <dtough/cli/commands.hpp>
#include <dtough/cli/pointfile.hpp>
#include <dtough/cli/report.hpp>
#include <dtough/diskpath.hpp>
#include <dtough/structure.hpp>

#include <chrono>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <unistd.h>

using namespace dtough;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome
{
    bool pass = true;
    std::string detail;
    double seconds = 0.0;
    double budget = 0.0; ///< 0 means no time limit
};

std::map<int, Outcome> outcomes;
std::map<int, std::string> titles = {
    {1, "toughness, exhaustive over all separators"},
    {2, "independent set bound and tightness"},
    {3, "distinguished-angle audit"},
    {4, "perfect matchings"},
    {5, "paths inside disks"},
    {6, "blocking set lower bound"},
    {7, "opposite-angle inequality on every interior edge"},
    {8, "oracle equivalences"},
    {9, "determinism of reports and figures"},
};

/// Every triangulation built by the suite, for the edge-angle sweep.
std::deque<Triangulation> registry;

const Triangulation& keep(Triangulation t)
{
    registry.push_back(std::move(t));
    return registry.back();
}

template<typename F>
void criterion(int id, double budget, F&& body)
{
    const auto start = Clock::now();
    Outcome o;
    o.budget = budget;
    body(o);
    o.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget > 0 && o.seconds > budget) {
        o.pass = false;
        o.detail += "; over time budget";
    }
    outcomes[id] = o;
}

std::vector<Point> suite_instance(std::uint64_t seed)
{
    const std::size_t n = 4 + seed % 9;
    return cli::random_points(n, seed);
}

int floor_half(std::size_t n)
{
    return static_cast<int>(n / 2);
}

// ------------------------------------------------------------------ 1 & 8

constexpr std::uint64_t kInstances = 50;

std::vector<std::size_t> instance_ids;

void toughness_sweep()
{
    criterion(1, 120.0, [](Outcome& o) {
        std::size_t violations = 0;
        std::size_t subsets = 0;
        std::size_t oracle_mismatch = 0;
        std::size_t toughness_mismatch = 0;
        for (std::uint64_t seed = 1; seed <= kInstances; ++seed) {
            const Triangulation& t = keep(build(suite_instance(seed)));
            instance_ids.push_back(registry.size() - 1);
            const int n = static_cast<int>(t.size());
            for (std::uint32_t s = 1; s < (1u << n); ++s) {
                VertexSet set(t.size());
                std::vector<bool> removed(t.size());
                for (int v = 0; v < n; ++v)
                    if ((s >> v) & 1u) {
                        set.insert(v);
                        removed[static_cast<std::size_t>(v)] = true;
                    }
                const auto c = components_after_removal(t, set).size();
                if (c > set.count())
                    ++violations;
                if (static_cast<int>(c) !=
                    test::union_find_components(n, t.edges(), removed))
                    ++oracle_mismatch;
                ++subsets;
            }
            const auto tough = toughness_exhaustive(t);
            if (tough && tough->ratio < 1)
                ++violations;
            if (tough.has_value() != test::brute_toughness(t).has_value() ||
                (tough && tough->ratio != *test::brute_toughness(t)))
                ++toughness_mismatch;
        }
        o.pass = violations == 0 && oracle_mismatch == 0 && toughness_mismatch == 0;
        o.detail = std::to_string(kInstances) + " instances, " +
                   std::to_string(subsets) + " separators, " +
                   std::to_string(violations) + " violations";
        // Shared with criterion 8.
        outcomes[80].pass = oracle_mismatch == 0 && toughness_mismatch == 0;
        outcomes[80].detail = std::to_string(oracle_mismatch) +
                              " component mismatches against union-find";
    });
}

// ------------------------------------------------------------------ 2 & 3

std::vector<std::pair<std::size_t, VertexSet>> audit_inputs;

void independence_sweep()
{
    criterion(2, 30.0, [](Outcome& o) {
        std::size_t violations = 0;
        std::size_t tight_failures = 0;
        for (std::size_t id : instance_ids) {
            const auto mis = max_independent_set(registry[id]);
            if (static_cast<int>(mis.size) > floor_half(registry[id].size()) ||
                !is_independent(registry[id], mis.certificate))
                ++violations;
            audit_inputs.emplace_back(id, mis.certificate);
        }
        for (int n = 4; n <= 12; ++n) {
            const Triangulation& t = keep(build(fan_instance(n, 1).p));
            const auto mis = max_independent_set(t);
            if (static_cast<int>(mis.size) != floor_half(t.size()))
                ++tight_failures;
            audit_inputs.emplace_back(registry.size() - 1, mis.certificate);
        }
        o.pass = violations == 0 && tight_failures == 0;
        o.detail = std::to_string(violations) + " bound violations on " +
                   std::to_string(instance_ids.size()) + " instances, " +
                   std::to_string(tight_failures) + " fans n=4..12 off floor(n/2)";
    });

    criterion(3, 0, [](Outcome& o) {
        std::size_t failures = 0;
        double worst = 0.0;
        for (const auto& [id, independent] : audit_inputs) {
            const Triangulation t = registry[id];
            const auto r = angle_audit(t, independent);
            const bool ok = r.euler_ok && r.per_edge_exact_ok && r.strict_inequality &&
                            r.b_equals_independent && r.conclusion_b_le &&
                            r.d_agrees && r.faces_ok && r.bound_ok;
            if (!ok)
                ++failures;
            if (r.d_exact > 0)
                worst = std::max(worst, std::abs(r.d_degrees - static_cast<double>(r.d_exact)) /
                                            static_cast<double>(r.d_exact));
            keep(sentinel_augment(t, independent.complement()).augmented);
        }
        o.pass = failures == 0;
        std::ostringstream d;
        d << audit_inputs.size() << " audits, " << failures
          << " failures, worst relative angle error " << worst;
        o.detail = d.str();
    });
}

// ------------------------------------------------------------------ 4

void matching_sweep()
{
    criterion(4, 0, [](Outcome& o) {
        std::size_t checked = 0;
        std::size_t failures = 0;
        auto check = [&](const Triangulation& t) {
            ++checked;
            const auto m = perfect_matching(t);
            bool ok = m.has_value() && m->size() == t.size() / 2;
            if (ok) {
                std::vector<int> hit(t.size(), 0);
                for (const auto& e : *m) {
                    ok = ok && t.has_edge(e.a, e.b);
                    ++hit[static_cast<std::size_t>(e.a)];
                    ++hit[static_cast<std::size_t>(e.b)];
                }
                ok = ok && std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
            }
            if (t.size() <= 12)
                ok = ok && test::brute_has_perfect_matching(static_cast<int>(t.size()),
                                                            t.edges());
            if (!ok)
                ++failures;
        };
        for (std::size_t id : instance_ids)
            if (registry[id].size() % 2 == 0)
                check(registry[id]);
        for (int n : {4, 6, 8, 10})
            check(keep(build(fan_instance(n, 1).p)));
        o.pass = failures == 0;
        o.detail = std::to_string(checked) + " even instances, " +
                   std::to_string(failures) + " failures";
    });
}

// ------------------------------------------------------------------ 5

void disk_path_sweep()
{
    criterion(5, 0, [](Outcome& o) {
        std::mt19937_64 rng(4);
        int triples = 0;
        int ties = 0;
        int failures = 0;
        int interior_total = 0;
        while (triples < 100) {
            const std::size_t n = 4 + rng() % 11;
            const Triangulation& t = keep(build(cli::random_points(n, rng())));
            const int p = static_cast<int>(rng() % n);
            const int q = static_cast<int>(rng() % n);
            if (p == q)
                continue;
            const auto d = test::disk_through(
                t, p, q, test::q(static_cast<long>(rng() % 257) - 128, 64));
            if (!d)
                continue;
            ++triples;
            interior_total += test::interior_count(t, *d);
            const auto oracle = path_oracle(t, p, q, *d);
            try {
                const auto path = find_path(t, p, q, *d);
                if (!valid_disk_path(t, p, q, path) || !oracle)
                    ++failures;
            } catch (const TieOnBoundary&) {
                ++ties;
            }
        }
        o.pass = failures == 0;
        o.detail = std::to_string(triples) + " triples (" +
                   std::to_string(interior_total) + " interior vertices in total), " +
                   std::to_string(failures) + " failures, " + std::to_string(ties) +
                   " ties excluded";
    });
}

// ------------------------------------------------------------------ 6

void blocking_sweep()
{
    criterion(6, 60.0, [](Outcome& o) {
        std::size_t bad = 0;
        std::size_t tight = 0;
        for (int n = 4; n <= 10; ++n) {
            const auto inst = fan_instance(n, 1);
            std::vector<Point> all = inst.p;
            all.insert(all.end(), inst.b.begin(), inst.b.end());
            keep(build(all));
            const auto r = lower_bound_report(inst.p, inst.b);
            if (!r.blocked || r.alarm())
                ++bad;
            if (r.blocked && inst.b.size() == inst.p.size())
                ++tight;
        }
        std::size_t blocked = 0;
        std::size_t alarms = 0;
        constexpr int kSweep = 10000;
        for (std::uint64_t seed = 0; seed < kSweep; ++seed) {
            const auto pts = cli::random_points(3, seed);
            const std::vector<Point> p{pts[0], pts[1]};
            const std::vector<Point> b{pts[2]};
            const auto r = lower_bound_report(p, b);
            if (r.blocked)
                ++blocked;
            if (r.alarm())
                ++alarms;
        }
        o.pass = bad == 0 && tight == 7 && blocked == 0 && alarms == 0;
        o.detail = "fans n=4..10: " + std::to_string(tight) + "/7 blocked with |B|=|P|; " +
                   std::to_string(kSweep) + " two-point sweeps: " +
                   std::to_string(blocked) + " blocked";
    });
}

// ------------------------------------------------------------------ 8

void oracles()
{
    criterion(8, 0, [](Outcome& o) {
        std::size_t brute_mismatch = 0;
        std::size_t mis_mismatch = 0;
        std::size_t mis_checked = 0;
        for (std::uint64_t seed = 100; seed < 140; ++seed) {
            const std::size_t n = 4 + seed % 13;
            const auto pts = cli::random_points(n, seed);
            const Triangulation& t = keep(build(pts));
            if (n <= 12 && test::sorted_faces(t) != test::brute_delaunay(pts))
                ++brute_mismatch;
            ++mis_checked;
            if (static_cast<int>(max_independent_set(t).size) != test::brute_mis_size(t))
                ++mis_mismatch;
        }
        std::size_t counterexamples = 0;
        for (const auto& t : registry)
            if (verify_delaunay(t))
                ++counterexamples;
        const auto& shared = outcomes[80];
        o.pass = counterexamples == 0 && brute_mismatch == 0 && mis_mismatch == 0 &&
                 shared.pass;
        o.detail = std::to_string(counterexamples) + " empty-circle counterexamples in " +
                   std::to_string(registry.size()) + " triangulations, " +
                   std::to_string(brute_mismatch) + " face-set mismatches, " +
                   shared.detail + ", " + std::to_string(mis_mismatch) +
                   " independent-set mismatches in " + std::to_string(mis_checked);
    });
}

// ------------------------------------------------------------------ 7

void angle_sweep()
{
    criterion(7, 0, [](Outcome& o) {
        std::size_t edges = 0;
        std::size_t violations = 0;
        for (const auto& t : registry)
            for (const auto& e : t.edges())
                if (t.kind(e) == EdgeKind::INTERIOR) {
                    ++edges;
                    if (edge_angle_check(t, e) != AngleCheck::OK)
                        ++violations;
                }
        o.pass = violations == 0;
        o.detail = std::to_string(edges) + " interior edges in " +
                   std::to_string(registry.size()) + " triangulations, " +
                   std::to_string(violations) + " violations";
    });
}

// ------------------------------------------------------------------ 9

struct Run
{
    int code;
    std::string json;
};

Run cli_run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    std::string json = out.str();
    if (!json.empty() && json.front() == '{')
        json = cli::dump(cli::without_timing(cli::Json::parse(json)));
    return {code, json};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

/// Runs a fixed pipeline in `dir` and returns every report and file it
/// produced, keyed by name.
std::map<std::string, std::string> pipeline(const fs::path& dir, int& alarms)
{
    std::map<std::string, std::string> out;
    auto f = [&](const std::string& name) { return (dir / name).string(); };
    auto record = [&](const std::string& key, const std::vector<std::string>& args) {
        const auto r = cli_run(args);
        if (r.code == cli::kAlarm)
            ++alarms;
        out[key] = std::to_string(r.code) + "\n" + r.json;
    };
    record("gen random", {"gen", "random", "12", "--seed", "7", "--out", f("random.txt"),
                          "--svg", f("random.svg")});
    record("gen convex", {"gen", "convex", "9", "--seed", "7", "--out", f("convex.txt")});
    record("gen fan", {"gen", "fan", "8", "--seed", "1", "--out", f("fan.txt")});
    record("gen arc", {"gen", "disjoint-arc", "6", "--out", f("arc.txt"), "--svg",
                       f("arc.svg")});
    for (const char* name : {"random", "convex", "fan", "arc"})
        record(std::string("check ") + name,
               {"check", f(std::string(name) + ".txt"), "--svg",
                f(std::string(name) + "-check.svg")});
    record("block", {"block", f("fan.txt"), f("fan.txt.blockers"), "--svg",
                     f("block.svg")});
    const auto t = build(cli::load_points(f("random.txt")));
    const Edge e = t.edges()[t.edges().size() / 2];
    const Disk d = witness_disk(t, e);
    record("path", {"path", f("random.txt"), std::to_string(e.a), std::to_string(e.b),
                    to_string(d.center.x), to_string(d.center.y), to_string(d.radius_sq),
                    "--svg", f("path.svg")});
    record("render", {"render", f("fan.txt"), "--blockers", f("fan.txt.blockers"), "--mis",
                      "--svg", f("render.svg")});
    record("render audit", {"render", f("random.txt"), "--audit", "--witness-disks",
                            "--svg", f("audit.svg")});
    for (const auto& entry : fs::directory_iterator(dir))
        out["file " + entry.path().filename().string()] = slurp(entry.path());
    return out;
}

std::string relativize(std::string text, const std::string& dir)
{
    for (auto pos = text.find(dir); pos != std::string::npos; pos = text.find(dir, pos))
        text.replace(pos, dir.size(), "$DIR");
    return text;
}

void determinism()
{
    criterion(9, 0, [](Outcome& o) {
        const auto base = fs::temp_directory_path() /
                          ("dtough_acceptance_" + std::to_string(::getpid()));
        std::vector<std::map<std::string, std::string>> runs;
        int alarms = 0;
        // Two plain runs, then one with a single toughness thread.
        for (int i = 0; i < 3; ++i) {
            const auto dir = base / std::to_string(i);
            fs::create_directories(dir);
            if (i == 2)
                ::setenv("DTOUGH_THREADS", "1", 1);
            auto files = pipeline(dir, alarms);
            std::map<std::string, std::string> normalized;
            for (auto& [k, v] : files)
                normalized[k] = relativize(v, dir.string());
            runs.push_back(std::move(normalized));
        }
        ::unsetenv("DTOUGH_THREADS");
        fs::remove_all(base);

        std::size_t differing = 0;
        for (const auto& [key, value] : runs[0])
            for (std::size_t i = 1; i < runs.size(); ++i) {
                auto it = runs[i].find(key);
                if (it == runs[i].end() || it->second != value)
                    ++differing;
            }
        std::size_t svgs = 0;
        for (const auto& [key, value] : runs[0])
            if (key.ends_with(".svg"))
                ++svgs;
        o.pass = differing == 0 && runs[0].size() == runs[1].size() && alarms == 0 &&
                 svgs == 10;
        o.detail = std::to_string(runs[0].size()) + " artifacts (" + std::to_string(svgs) +
                   " SVGs) over 3 runs, " + std::to_string(differing) +
                   " differences, " + std::to_string(alarms) + " alarms";
    });
}

} // namespace

int main()
{
    try {
        toughness_sweep();
        independence_sweep();
        matching_sweep();
        disk_path_sweep();
        blocking_sweep();
        oracles();
        angle_sweep();
        determinism();
    } catch (const std::exception& e) {
        std::cout << "acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }

    bool all = true;
    for (int id = 1; id <= 9; ++id) {
        const auto& o = outcomes.at(id);
        all = all && o.pass;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f s", o.seconds);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << " ("
                  << titles.at(id) << "): " << o.detail << " [" << secs;
        if (o.budget > 0)
            std::cout << ", budget " << o.budget << " s";
        std::cout << "]\n";
    }
    std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
    return all ? 0 : 1;
}
