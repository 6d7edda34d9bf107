#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ramtower/errors.hpp"
#include "ramtower/json_io.hpp"
#include "ramtower/svg.hpp"

namespace ramtower::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        const auto b = cur.find_first_not_of(" \t");
        const auto e = cur.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
    }
    return out;
}

std::optional<Rat> parse_opt_rat(const std::string& s) {
    if (s == "inf" || s == "oo") {
        return std::nullopt;
    }
    return parse_rat(s);
}

std::vector<ValPoint> parse_points(const std::string& s) {
    std::vector<ValPoint> pts;
    for (const std::string& item : split(s, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) {
            throw DomainError("point '" + item + "' must be x:y");
        }
        pts.push_back(ValPoint{std::stoll(parts[0]), parse_opt_rat(parts[1])});
    }
    return pts;
}

std::vector<Break> parse_breaks(const std::string& s) {
    std::vector<Break> out;
    for (const std::string& item : split(s, ',')) {
        if (item.empty()) {
            continue;
        }
        const auto parts = split(item, ':');
        if (parts.size() != 2) {
            throw DomainError("break '" + item + "' must be at:drop");
        }
        out.push_back(Break{parse_rat(parts[0]), std::stoull(parts[1])});
    }
    return out;
}

BreakFiltration filtration_of(const std::vector<Break>& breaks) {
    std::uint64_t total = 1;
    for (const Break& b : breaks) {
        if (b.drop == 0 || total > UINT64_MAX / b.drop) {
            throw DomainError("filtration order overflows");
        }
        total *= b.drop;
    }
    return BreakFiltration(total, breaks);
}

struct Outcome {
    Json payload;
    bool failed = false;
    std::vector<Diagnostic> diagnostics;
    std::optional<NewtonPolygon> svg;
};

GridReport parallel_default_grid() {
    const std::vector<std::uint32_t> ps{2, 3, 5};
    std::vector<std::future<GridReport>> jobs;
    for (const std::uint32_t p : ps) {
        jobs.push_back(std::async(std::launch::async, [p] { return verify_grid({p}, {1, 2, 3}, {1, 2, 3}, {0, 1, 2}, 6); }));
    }
    GridReport total;
    for (auto& job : jobs) {
        const GridReport r = job.get();
        total.tuples += r.tuples;
        total.w_mismatches += r.w_mismatches;
        total.psi_mismatches += r.psi_mismatches;
        total.first_layer_mismatches += r.first_layer_mismatches;
        total.monotonicity_failures += r.monotonicity_failures;
        if (!total.first_counterexample) {
            total.first_counterexample = r.first_counterexample;
        }
    }
    return total;
}

Outcome grid_outcome(const std::string& grid) {
    if (grid != "default") {
        throw DomainError("unknown grid '" + grid + "' (only 'default' is defined)");
    }
    const GridReport r = parallel_default_grid();
    Outcome o{to_json(r), !r.ok(), {}, std::nullopt};
    if (r.first_counterexample) {
        o.diagnostics.push_back({"counterexample", *r.first_counterexample});
    }
    return o;
}

std::size_t default_precision() {
    if (const char* env = std::getenv("RAMTOWER_PREC")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<std::size_t>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return 16;
}

} // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact ramification computations over local fields of characteristic p.\n"
                 "Every command prints a JSON report {schema_version, status, payload, diagnostics}.\n"
                 "Exit codes: 0 ok, 1 domain error or failed check, 2 precision error, 64 usage error.",
                 "ramtower"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string svg_path;
    app.add_option("--svg", svg_path, "Write an SVG drawing of the relevant polygon to PATH");

    std::function<Outcome()> action;

    auto* polygon = app.add_subcommand("polygon", "Lower convex hull of points x:y (y may be inf)");
    std::string points;
    polygon->add_option("--points", points, "Comma-separated x:y pairs, e.g. 1:1,2:1,4:0")->required();
    polygon->callback([&] {
        action = [&] {
            const NewtonPolygon np = build_polygon(parse_points(points));
            Json roots = Json::array();
            for (const RootValuation& r : root_valuations(np)) {
                roots.push_back({{"valuation", rat_to_json(r.valuation)}, {"multiplicity", r.multiplicity}});
            }
            Json intercepts = Json::array();
            for (const Rat& y : y_intercepts(np, true)) {
                intercepts.push_back(rat_to_json(y));
            }
            return Outcome{{{"polygon", to_json(np)}, {"root_valuations", roots}, {"intercepts", intercepts}}, false, {}, np};
        };
    });

    auto* herbrand = app.add_subcommand("herbrand", "Herbrand functions of a filtration or a tower of layers");
    std::string breaks;
    std::vector<std::string> layers;
    std::vector<std::string> at;
    auto* breaks_opt = herbrand->add_option("--breaks", breaks, "Lower breaks at:drop, e.g. 3:2,15:2");
    auto* layers_opt = herbrand->add_option("--layer", layers, "One layer (bottom first) as at:drop,...; repeatable");
    breaks_opt->excludes(layers_opt);
    herbrand->add_option("--at", at, "Evaluate phi and psi at these points")->delimiter(',');
    herbrand->callback([&] {
        action = [&] {
            Json payload;
            PiecewiseLinear phi;
            if (!layers.empty()) {
                std::vector<BreakFiltration> fs;
                for (const std::string& l : layers) {
                    fs.push_back(filtration_of(parse_breaks(l)));
                }
                phi = compose_tower(fs);
            } else {
                const BreakFiltration f = filtration_of(parse_breaks(breaks));
                phi = phi_from_filtration(f);
                payload["filtration"] = to_json(f);
                Json upper = Json::array();
                for (const Rat& u : lower_to_upper(f)) {
                    upper.push_back(rat_to_json(u));
                }
                payload["upper_breaks"] = upper;
            }
            payload["phi"] = to_json(phi);
            payload["psi"] = to_json(psi(phi));
            Json values = Json::array();
            for (const std::string& s : at) {
                const Rat x = parse_rat(s);
                values.push_back({{"x", rat_to_json(x)}, {"phi", rat_to_json(phi(x))}, {"psi", rat_to_json(phi.inverse_at(x))}});
            }
            payload["values"] = values;
            return Outcome{payload, false, {}, std::nullopt};
        };
    });

    auto* formal = app.add_subcommand("formal", "A-typical formal module F_V and its [pi] bracket");
    std::uint32_t fp = 2;
    std::uint64_t fq = 2;
    std::string spec_text;
    std::size_t honda = 0;
    std::size_t prec = default_precision();
    std::size_t congruence_max = 0;
    bool reduce = false;
    formal->add_option("--p", fp, "Residue characteristic")->required();
    formal->add_option("--q", fq, "Residue field size (power of p)")->required();
    auto* spec_opt = formal->add_option("--spec", spec_text, "Values i:v_i, e.g. 1:1,2:0");
    auto* honda_opt = formal->add_option("--honda", honda, "Honda module of height h (v_h = 1)");
    spec_opt->excludes(honda_opt);
    formal->add_option("--prec", prec, "Truncation degree D (default $RAMTOWER_PREC or 16)");
    formal->add_option("--congruence", congruence_max, "Check the [pi] congruence for i = 1..k");
    formal->add_flag("--reduce", reduce, "Dump the law reduced to F_q");
    formal->callback([&] {
        action = [&] {
            const ADescriptor A = ADescriptor::make(fp, fq);
            ATypicalSpec spec;
            if (honda > 0) {
                spec = honda_spec(honda);
            } else {
                for (const std::string& item : split(spec_text, ',')) {
                    if (item.empty()) {
                        continue;
                    }
                    const auto parts = split(item, ':');
                    if (parts.size() != 2) {
                        throw DomainError("spec entry '" + item + "' must be i:v");
                    }
                    spec[std::stoul(parts[0])] = parse_rat(parts[1]);
                }
            }
            const FormalModule<RationalRing> M = atypical_module(A, spec, prec);
            Outcome o;
            if (reduce) {
                const FormalModule<FiniteFieldRing> R = reduce_module(M, fq_make(fp, A.residue_degree()));
                o.payload["module"] = to_json(R);
                const CheckReport law = check_group_law(R.law);
                o.payload["group_law"] = to_json(law);
                o.failed = !law.ok;
                if (const auto h = height(R.pi_bracket(), fq).height) {
                    o.payload["height"] = *h;
                }
            } else {
                o.payload["module"] = to_json(M);
            }
            Json checks = Json::array();
            for (std::size_t i = 1; i <= congruence_max; ++i) {
                const CheckReport r = check_pi_congruence(M, spec, i);
                checks.push_back(to_json(r));
                o.failed = o.failed || !r.ok;
                if (!r.detail.empty() && r.ok) {
                    o.diagnostics.push_back({"vacuous-congruence", "i = " + std::to_string(i) + ": " + r.detail});
                }
            }
            o.payload["congruences"] = checks;
            return o;
        };
    });

    std::uint32_t tp = 2;
    std::uint32_t m = 1;
    std::string poly;
    auto tate_action = [&] {
        const auto F = fq_make(tp, m);
        std::vector<LaurentSeries> coeffs;
        for (const std::string& c : split(poly, ';')) {
            coeffs.push_back(parse_series(F, c));
        }
        const SeriesPoly f(F, coeffs);
        const TateHypothesis h = check_tate_hypothesis(f);
        const TateResult r = tate_breaks(EisensteinExt::make(f));
        Outcome o;
        o.payload = to_json(r);
        o.payload["hypothesis"] = to_json(h);
        o.svg = r.polygon;
        if (!h.holds) {
            o.failed = true;
            o.diagnostics.push_back({"hypothesis", "v(a_" + std::to_string(*h.witness) + ") < v(a_1)"});
        }
        if (h.holds && h.v_a1 && h.degree_is_p_power) {
            const Rat cf = closed_form_break(h.degree, *h.v_a1);
            o.payload["closed_form_break"] = rat_to_json(cf);
            if (r.breaks != std::vector<Rat>{cf}) {
                o.diagnostics.push_back({"closed-form-mismatch", "polygon breaks differ from q v / (q - 1) - 1"});
            }
        }
        return o;
    };
    for (const char* name : {"tate-breaks", "tate"}) {
        auto* tate = app.add_subcommand(name, "Upper breaks of K[x]/(f) from the ramification polygon");
        tate->add_option("--p", tp, "Characteristic")->required();
        tate->add_option("--field-ext", m, "Residue field F_{p^m}");
        tate->add_option("--poly", poly, "Coefficients a_0; a_1; ...; 1 as series literals")->required();
        tate->callback([&] { action = tate_action; });
    }

    auto* tower = app.add_subcommand("tower", "Break schedules of 1/g-towers");
    tower->require_subcommand(1);
    tower->fallthrough();
    TowerParams P;
    std::string c_text = "1";
    std::uint32_t level = 1;
    const auto add_params = [&](CLI::App* sub, bool need_q) {
        sub->add_option("--p", P.p, "Residue characteristic")->required();
        auto* q = sub->add_option("--q", P.q, "Residue field size");
        if (need_q) {
            q->required();
        }
        sub->add_option("--g", P.g, "Height g")->required();
        sub->add_option("--d", P.d, "d = s - g");
        sub->add_option("--N", P.N, "Index N of the base layer")->required();
        sub->add_option("--c", c_text, "c = v_N(a_1)")->required();
        sub->add_option("--n", level, "Level n")->required();
        return q;
    };
    auto* schedule = tower->add_subcommand("schedule", "B(n), W(n) and filtration tables");
    add_params(schedule, true);
    schedule->callback([&] {
        action = [&] {
            P.c = parse_rat(c_text);
            const BreakSchedule s = filtration_tables(P, level);
            Outcome o{to_json(s), false, {}, std::nullopt};
            for (const std::string& lint : s.lints) {
                o.diagnostics.push_back({"non-integral-galois-break", lint});
            }
            return o;
        };
    });
    auto* character = tower->add_subcommand("character", "Upper break W(ng) and level n of the character");
    auto* character_q = add_params(character, false);
    character->callback([&] {
        action = [&] {
            P.c = parse_rat(c_text);
            if (character_q->count() == 0) {
                P.q = P.p;
            }
            const CharacterBreak cb = character_breaks(P, level);
            Json norm = Json::array();
            for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(level) * P.g; ++k) {
                norm.push_back(norm_index(k, P.g));
            }
            return Outcome{{{"character", to_json(cb)}, {"norm_index", norm}}, false, {}, std::nullopt};
        };
    });
    std::string vals_text;
    std::uint64_t tq = 2;
    std::uint32_t tg = 1;
    std::size_t nmax = 10;
    std::string select = "max";
    auto* torsion = tower->add_subcommand("torsion", "Valuations of a torsion point tower");
    torsion->add_option("--vals", vals_text, "v(a_1),...,v(a_d); inf for a zero coefficient")->required();
    torsion->add_option("--q", tq, "q")->required();
    torsion->add_option("--g", tg, "g")->required();
    torsion->add_option("--nmax", nmax, "Last level");
    torsion->add_option("--select", select, "Root selection")->check(CLI::IsMember({"max", "min"}));
    torsion->callback([&] {
        action = [&] {
            std::vector<std::optional<Rat>> v;
            for (const std::string& s : split(vals_text, ',')) {
                v.push_back(parse_opt_rat(s));
            }
            const TorsionTrace t = torsion_valuations(
                v, tg, tq, nmax, select == "max" ? RootSelection::MaxValuation : RootSelection::MinValuation);
            return Outcome{to_json(t), false, {}, t.polygons.front()};
        };
    });
    std::string W_text;
    std::uint64_t e_N = 1;
    std::string u_text = "0";
    std::string l_text = "0";
    auto* over_k = tower->add_subcommand("over-k", "Move an upper break of K_n/K_N down to K");
    over_k->add_option("--W", W_text, "Upper break over K_N")->required();
    over_k->add_option("--e", e_N, "e_N");
    over_k->add_option("--u", u_text, "u_N");
    over_k->add_option("--l", l_text, "l_N");
    over_k->callback([&] {
        action = [&] {
            const Rat r = breaks_over_K(parse_rat(W_text), BottomLayer{e_N, parse_rat(u_text), parse_rat(l_text)});
            return Outcome{{{"upper_over_K", rat_to_json(r)}}, false, {}, std::nullopt};
        };
    });
    std::string grid = "default";
    auto* tverify = tower->add_subcommand("verify", "Closed forms against composition on a grid");
    tverify->add_option("--grid", grid, "Grid name")->required();
    tverify->callback([&] { action = [&] { return grid_outcome(grid); }; });

    auto* verify = app.add_subcommand("verify", "Same as tower verify");
    verify->add_option("--grid", grid, "Grid name")->required();
    verify->callback([&] { action = [&] { return grid_outcome(grid); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return kUsage;
    }

    RunReport report;
    int code = kOk;
    try {
        Outcome o = action();
        report.payload = std::move(o.payload);
        report.diagnostics = std::move(o.diagnostics);
        if (o.failed) {
            report.status = RunStatus::Fail;
            code = kDomainError;
        }
        if (!svg_path.empty()) {
            if (!o.svg) {
                throw DomainError("--svg: this command has no polygon to draw");
            }
            std::ofstream svg(svg_path, std::ios::binary);
            svg << render_svg(*o.svg);
            if (!svg) {
                throw DomainError("--svg: cannot write " + svg_path);
            }
        }
    } catch (const InsufficientPrecision& e) {
        report = RunReport{};
        report.status = RunStatus::PrecisionError;
        report.payload = Json::object();
        report.diagnostics.push_back({"precision", e.what()});
        code = kPrecisionError;
    } catch (const DomainError& e) {
        report = RunReport{};
        report.status = RunStatus::Fail;
        report.payload = Json::object();
        report.diagnostics.push_back({dynamic_cast<const GuardViolation*>(&e) ? "guard" : "domain", e.what()});
        code = kDomainError;
    } catch (const Error& e) {
        report = RunReport{};
        report.status = RunStatus::Fail;
        report.payload = Json::object();
        report.diagnostics.push_back({"error", e.what()});
        code = kDomainError;
    } catch (const std::invalid_argument& e) {
        err << "error: malformed number (" << e.what() << ")\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: number out of range (" << e.what() << ")\n";
        return kUsage;
    }
    out << to_json(report).dump(2) << '\n';
    return code;
}

} // namespace ramtower::cli
