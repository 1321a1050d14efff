#include "zeroforce/json_io.hpp"

namespace zf {
namespace {

Json set_to_json(const VertexSet& s) { return Json(s.to_vector()); }

int checked_vertex(const Json& j, int n) {
    if (!j.is_number_integer()) throw ParseError("trace vertex must be an integer");
    auto v = j.get<std::int64_t>();
    if (v < 0 || v >= n) throw ParseError("trace vertex out of range");
    return static_cast<int>(v);
}

}  // namespace

Json trace_to_json(const ForcingTrace& t) {
    Json steps = Json::array();
    for (auto [forcer, forced] : t.steps) steps.push_back({forcer, forced});
    return {{"initial", set_to_json(t.initial)}, {"steps", steps}};
}

ForcingTrace trace_from_json(const Graph& g, const Json& j) {
    if (!j.is_object() || !j.contains("initial") || !j.contains("steps"))
        throw ParseError("trace JSON needs \"initial\" and \"steps\"");
    const int n = g.order();
    ForcingTrace t{VertexSet(n), {}, VertexSet(n)};
    if (!j["initial"].is_array()) throw ParseError("trace \"initial\" must be an array");
    for (const Json& v : j["initial"]) t.initial.set(checked_vertex(v, n));
    t.final = t.initial;
    if (!j["steps"].is_array()) throw ParseError("trace \"steps\" must be an array");
    for (const Json& step : j["steps"]) {
        if (!step.is_array() || step.size() != 2)
            throw ParseError("trace step must be a [forcer,forced] pair");
        int forcer = checked_vertex(step[0], n);
        int forced = checked_vertex(step[1], n);
        t.steps.emplace_back(forcer, forced);
        t.final.set(forced);
    }
    return t;
}

Json result_to_json(const ForcingNumberResult& r) {
    return {{"status", r.status == SolverStatus::kExact ? "EXACT" : "BOUNDS"},
            {"lo", r.lo},
            {"hi", r.hi},
            {"certificate", r.certificate ? set_to_json(*r.certificate) : Json(nullptr)},
            {"explored", r.explored}};
}

Json decomposition_to_json(const Decomposition& d, const ClaimReport& c) {
    Json si = Json::array();
    for (const VertexSet& s : d.Si) si.push_back(set_to_json(s));
    Json arcs = Json::array();
    for (auto [i, j] : d.arcs) arcs.push_back({i, j});
    Json accounting = Json::array();
    for (bool ok : c.accounting) accounting.push_back(ok);
    return {{"n", d.n},
            {"L", d.L},
            {"X", d.X},
            {"Si", si},
            {"SX", set_to_json(d.SX)},
            {"SXstar", set_to_json(d.SXstar)},
            {"arcs", arcs},
            {"mD", d.mD()},
            {"t", d.t},
            {"eps", d.eps},
            {"claims",
             {{"claim2a", c.claim2a},
              {"claim2b", c.claim2b},
              {"claim2c",
               {{"applicable", c.claim2c_applicable},
                {"holds", c.claim2c_applicable ? Json(c.claim2c_holds) : Json(nullptr)}}},
              {"claim4a", c.claim4a},
              {"accounting", accounting},
              {"gd_triangle_free", c.gd_triangle_free}}}};
}

}  // namespace zf
