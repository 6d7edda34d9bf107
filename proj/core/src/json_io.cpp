#include "ramtower/json_io.hpp"

#include "ramtower/errors.hpp"

namespace ramtower {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw DomainError(std::string("json: missing field '") + key + "'");
    }
    return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const Json::exception& e) {
        throw DomainError(std::string("json: bad ") + what + ": " + e.what());
    }
}

Json rats(const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const Rat& r : v) {
        out.push_back(rat_to_json(r));
    }
    return out;
}

std::vector<Rat> rats_from(const Json& j) {
    if (!j.is_array()) {
        throw DomainError("json: expected an array of rationals");
    }
    std::vector<Rat> out;
    for (const Json& e : j) {
        out.push_back(rat_from_json(e));
    }
    return out;
}

Json table_json(const std::vector<Interval>& t) {
    Json out = Json::array();
    for (const Interval& iv : t) {
        out.push_back({{"lo", rat_to_json(iv.lo)},
                       {"hi", iv.hi ? rat_to_json(*iv.hi) : Json(nullptr)},
                       {"order", iv.order}});
    }
    return out;
}

std::vector<Interval> table_from(const Json& j) {
    std::vector<Interval> out;
    for (const Json& e : j) {
        Interval iv;
        iv.lo = rat_from_json(field(e, "lo"));
        const Json& hi = field(e, "hi");
        if (!hi.is_null()) {
            iv.hi = rat_from_json(hi);
        }
        iv.order = as<std::uint64_t>(field(e, "order"), "order");
        out.push_back(std::move(iv));
    }
    return out;
}

template <class R, class Enc>
Json module_json(const FormalModule<R>& M, Enc enc) {
    const std::size_t D = M.degree();
    Json law = Json::array();
    for (std::size_t i = 0; i <= D; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; i + j <= D; ++j) {
            row.push_back(enc(M.law.get(i, j)));
        }
        law.push_back(std::move(row));
    }
    Json brackets = Json::object();
    for (const auto& [a, f] : M.brackets) {
        Json coeffs = Json::array();
        for (const auto& c : f.coeffs()) {
            coeffs.push_back(enc(c));
        }
        brackets[to_string(a)] = std::move(coeffs);
    }
    return {{"p", M.A.p}, {"q", M.A.q}, {"degree", D}, {"law", std::move(law)}, {"brackets", std::move(brackets)}};
}

} // namespace

Json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
    if (j.is_string()) {
        return parse_rat(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rat(BigInt(j.dump()));
    }
    throw DomainError("json: rational must be a \"num/den\" string, got " + j.dump());
}

Json to_json(const NewtonPolygon& np) {
    Json vertices = Json::array();
    for (const Vertex& v : np.vertices()) {
        vertices.push_back(Json::array({v.x, rat_to_json(v.y)}));
    }
    Json sides = Json::array();
    for (const Side& s : np.sides()) {
        sides.push_back({{"slope", rat_to_json(s.slope)}, {"mu", s.mu}, {"intercept", rat_to_json(s.intercept)}});
    }
    return {{"vertices", std::move(vertices)}, {"sides", std::move(sides)}};
}

NewtonPolygon polygon_from_json(const Json& j) {
    std::vector<Vertex> vertices;
    for (const Json& v : field(j, "vertices")) {
        if (!v.is_array() || v.size() != 2) {
            throw DomainError("json: vertex must be [x, \"y\"]");
        }
        vertices.push_back(Vertex{as<std::int64_t>(v[0], "vertex x"), rat_from_json(v[1])});
    }
    return NewtonPolygon(std::move(vertices));
}

Json to_json(const BreakFiltration& f) {
    Json breaks = Json::array();
    for (const Break& b : f.breaks()) {
        breaks.push_back(Json::array({rat_to_json(b.at), b.drop}));
    }
    return {{"order", f.total_order()}, {"breaks", std::move(breaks)}};
}

BreakFiltration filtration_from_json(const Json& j) {
    std::vector<Break> breaks;
    for (const Json& b : field(j, "breaks")) {
        if (!b.is_array() || b.size() != 2) {
            throw DomainError("json: break must be [\"at\", drop]");
        }
        breaks.push_back(Break{rat_from_json(b[0]), as<std::uint64_t>(b[1], "drop")});
    }
    return BreakFiltration(as<std::uint64_t>(field(j, "order"), "order"), std::move(breaks));
}

Json to_json(const PiecewiseLinear& f) {
    Json points = Json::array();
    for (const auto& [x, y] : f.points()) {
        points.push_back(Json::array({rat_to_json(x), rat_to_json(y)}));
    }
    return {{"points", std::move(points)}, {"final_slope", rat_to_json(f.final_slope())}};
}

PiecewiseLinear piecewise_from_json(const Json& j) {
    std::vector<PiecewiseLinear::Point> points;
    for (const Json& p : field(j, "points")) {
        if (!p.is_array() || p.size() != 2) {
            throw DomainError("json: breakpoint must be [\"x\", \"y\"]");
        }
        points.emplace_back(rat_from_json(p[0]), rat_from_json(p[1]));
    }
    return PiecewiseLinear(std::move(points), rat_from_json(field(j, "final_slope")));
}

Json to_json(const TowerParams& P) {
    return {{"p", P.p}, {"q", P.q}, {"g", P.g}, {"d", P.d}, {"N", P.N}, {"c", rat_to_json(P.c)}};
}

TowerParams tower_params_from_json(const Json& j) {
    TowerParams P;
    P.p = as<std::uint32_t>(field(j, "p"), "p");
    P.q = as<std::uint64_t>(field(j, "q"), "q");
    P.g = as<std::uint32_t>(field(j, "g"), "g");
    P.d = as<std::uint32_t>(field(j, "d"), "d");
    P.N = as<std::uint32_t>(field(j, "N"), "N");
    P.c = rat_from_json(field(j, "c"));
    return P;
}

Json to_json(const BreakSchedule& s) {
    return {{"params", to_json(s.params)},
            {"n", s.n},
            {"B", rats(s.lower)},
            {"W", rats(s.upper)},
            {"lower_table", table_json(s.lower_table)},
            {"upper_table", table_json(s.upper_table)},
            {"lints", s.lints}};
}

BreakSchedule schedule_from_json(const Json& j) {
    BreakSchedule s;
    s.params = tower_params_from_json(field(j, "params"));
    s.n = as<std::uint32_t>(field(j, "n"), "n");
    s.lower = rats_from(field(j, "B"));
    s.upper = rats_from(field(j, "W"));
    s.lower_table = table_from(field(j, "lower_table"));
    s.upper_table = table_from(field(j, "upper_table"));
    s.lints = as<std::vector<std::string>>(field(j, "lints"), "lints");
    return s;
}

Json to_json(const TorsionTrace& t) {
    Json polygons = Json::array();
    for (const NewtonPolygon& np : t.polygons) {
        polygons.push_back(to_json(np));
    }
    return {{"valuations", rats(t.valuations)}, {"m", t.m}, {"m_polygon", t.m_polygon}, {"polygons", polygons}};
}

TorsionTrace torsion_from_json(const Json& j) {
    TorsionTrace t;
    t.valuations = rats_from(field(j, "valuations"));
    t.m = as<std::size_t>(field(j, "m"), "m");
    t.m_polygon = as<std::size_t>(field(j, "m_polygon"), "m_polygon");
    for (const Json& np : field(j, "polygons")) {
        t.polygons.push_back(polygon_from_json(np));
    }
    return t;
}

Json to_json(const TateResult& r) {
    Json points = Json::array();
    for (const RamificationPoint& pt : r.points) {
        points.push_back(Json::array({pt.i, pt.valuation ? rat_to_json(*pt.valuation) : Json(nullptr)}));
    }
    return {{"breaks", rats(r.breaks)}, {"polygon", to_json(r.polygon)}, {"points", std::move(points)}};
}

TateResult tate_result_from_json(const Json& j) {
    TateResult r;
    r.breaks = rats_from(field(j, "breaks"));
    r.polygon = polygon_from_json(field(j, "polygon"));
    for (const Json& p : field(j, "points")) {
        RamificationPoint pt{as<std::size_t>(p.at(0), "point index"), std::nullopt};
        if (!p.at(1).is_null()) {
            pt.valuation = rat_from_json(p.at(1));
        }
        r.points.push_back(std::move(pt));
    }
    return r;
}

Json to_json(const TateHypothesis& h) {
    return {{"holds", h.holds},
            {"witness", h.witness ? Json(*h.witness) : Json(nullptr)},
            {"v_a1", h.v_a1 ? rat_to_json(*h.v_a1) : Json(nullptr)},
            {"degree", h.degree},
            {"degree_is_p_power", h.degree_is_p_power}};
}

Json to_json(const CharacterBreak& c) { return {{"upper", rat_to_json(c.upper)}, {"level", c.level}}; }

Json to_json(const GridReport& g) {
    return {{"ok", g.ok()},
            {"tuples", g.tuples},
            {"w_mismatches", g.w_mismatches},
            {"psi_mismatches", g.psi_mismatches},
            {"first_layer_mismatches", g.first_layer_mismatches},
            {"monotonicity_failures", g.monotonicity_failures},
            {"first_counterexample", g.first_counterexample ? Json(*g.first_counterexample) : Json(nullptr)}};
}

Json to_json(const CheckReport& r) {
    return {{"ok", r.ok}, {"check", r.check}, {"monomial", r.monomial}, {"degree", r.degree}, {"detail", r.detail}};
}

Json to_json(const FormalModule<RationalRing>& M) {
    return module_json(M, [](const Rat& r) { return rat_to_json(r); });
}

Json to_json(const FormalModule<FiniteFieldRing>& M) {
    Json j = module_json(M, [](const FqElem& e) { return Json(e.code); });
    j["field"] = M.ring.field()->describe();
    return j;
}

FormalModule<RationalRing> formal_module_from_json(const Json& j) {
    const ADescriptor A = ADescriptor::make(as<std::uint32_t>(field(j, "p"), "p"), as<std::uint64_t>(field(j, "q"), "q"));
    const auto D = as<std::size_t>(field(j, "degree"), "degree");
    RationalRing ring;
    BivariateSeries<RationalRing> law(ring, D);
    const Json& rows = field(j, "law");
    if (!rows.is_array() || rows.size() != D + 1) {
        throw DomainError("json: law must have degree + 1 rows");
    }
    for (std::size_t i = 0; i <= D; ++i) {
        if (!rows[i].is_array() || rows[i].size() != D + 1 - i) {
            throw DomainError("json: law row " + std::to_string(i) + " has the wrong length");
        }
        for (std::size_t k = 0; i + k <= D; ++k) {
            law.set(i, k, rat_from_json(rows[i][k]));
        }
    }
    FormalModule<RationalRing> M{ring, A, std::move(law), {}};
    for (const auto& [key, coeffs] : field(j, "brackets").items()) {
        std::vector<Rat> c = rats_from(coeffs);
        if (c.size() != D + 1) {
            throw DomainError("json: bracket [" + key + "] has the wrong length");
        }
        M.brackets.emplace_back(parse_rat(key), PowerSeries<RationalRing>(ring, D, std::move(c)));
    }
    return M;
}

std::string to_string(RunStatus s) {
    switch (s) {
    case RunStatus::Ok:
        return "ok";
    case RunStatus::Fail:
        return "fail";
    case RunStatus::PrecisionError:
        return "precision-error";
    }
    return "fail";
}

Json to_json(const RunReport& r) {
    Json diags = Json::array();
    for (const Diagnostic& d : r.diagnostics) {
        diags.push_back({{"code", d.code}, {"message", d.message}});
    }
    return {{"schema_version", r.schema_version},
            {"status", to_string(r.status)},
            {"payload", r.payload},
            {"diagnostics", std::move(diags)}};
}

RunReport run_report_from_json(const Json& j) {
    RunReport r;
    r.schema_version = as<int>(field(j, "schema_version"), "schema_version");
    const auto status = as<std::string>(field(j, "status"), "status");
    if (status == "ok") {
        r.status = RunStatus::Ok;
    } else if (status == "fail") {
        r.status = RunStatus::Fail;
    } else if (status == "precision-error") {
        r.status = RunStatus::PrecisionError;
    } else {
        throw DomainError("json: unknown status '" + status + "'");
    }
    r.payload = field(j, "payload");
    for (const Json& d : field(j, "diagnostics")) {
        r.diagnostics.push_back(Diagnostic{as<std::string>(field(d, "code"), "code"),
                                           as<std::string>(field(d, "message"), "message")});
    }
    return r;
}

} // namespace ramtower
