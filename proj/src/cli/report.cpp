#include <dtough/cli/report.hpp>

namespace dtough::cli {

Json to_json(const Coord& c)
{
    return to_string(c);
}

Json to_json(const Point& p)
{
    return Json::array({to_json(p.x), to_json(p.y)});
}

Json to_json(const Disk& d)
{
    return Json{{"center", to_json(d.center)}, {"radius_sq", to_json(d.radius_sq)}};
}

Json to_json(const Edge& e)
{
    return Json::array({e.a, e.b});
}

Json to_json(const VertexSet& s)
{
    return s.members();
}

Json to_json(const Matching& m)
{
    Json out = Json::array();
    for (const auto& e : m)
        out.push_back(to_json(e));
    return out;
}

Json to_json(const AuditReport& r)
{
    return Json{
        {"anchor_u", r.anchor_u},
        {"sentinel_v", to_json(r.sentinel_v)},
        {"sentinel_w", to_json(r.sentinel_w)},
        {"independent_size", r.independent_size},
        {"g", r.g},
        {"b", r.b},
        {"e", r.e},
        {"s_size", r.s_size},
        {"d_exact", r.d_exact},
        {"d_degrees", r.d_degrees},
        {"faces_ok", r.faces_ok},
        {"euler_ok", r.euler_ok},
        {"d_agrees", r.d_agrees},
        {"per_edge_exact_ok", r.per_edge_exact_ok},
        {"strict_inequality", r.strict_inequality},
        {"b_equals_independent", r.b_equals_independent},
        {"conclusion_b_le", r.conclusion_b_le},
        {"bound_ok", r.bound_ok},
    };
}

Json to_json(const GeneralPositionViolation& v)
{
    return Json{{"kind", to_string(v.kind)}, {"witness", v.witness}};
}

Json instance_summary(const Triangulation& t)
{
    return Json{{"n", t.size()},
                {"hull_size", t.hull().size()},
                {"edge_count", t.edges().size()}};
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

Json without_timing(Json j)
{
    if (j.is_object())
        j.erase("timing");
    return j;
}

} // namespace dtough::cli
