#include "maxpoly/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "maxpoly/construct.hpp"
#include "maxpoly/formulas.hpp"
#include "maxpoly/oracle.hpp"

namespace maxpoly::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 12345;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string subcommand_name(Subcommand s) {
    switch (s) {
        case Subcommand::volume: return "volume";
        case Subcommand::pentagon: return "pentagon";
        case Subcommand::cases: return "cases";
        case Subcommand::construct: return "construct";
        case Subcommand::search: return "search";
        case Subcommand::counts: return "counts";
        case Subcommand::limits: return "limits";
        case Subcommand::verify: return "verify";
    }
    return "?";
}

bool ci_mode() {
    const char* v = std::getenv("MAXPOLY_CI");
    return v != nullptr && std::string(v) == "1";
}

ordered_json point_records(const geom::PointSet& ps, const char* labelKey = "label") {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        ordered_json row;
        row[labelKey] = ps.labels.empty() ? ("v" + std::to_string(i + 1)) : ps.labels[i];
        for (std::size_t d = 0; d < ps.dim(); ++d)
            row["x" + std::to_string(d + 1)] = ps[i][d];
        arr.push_back(std::move(row));
    }
    return arr;
}

oracle::SearchConfig config_from(const CommandRequest& req, int defaultStarts) {
    oracle::SearchConfig cfg;
    cfg.seed = req.seed.value_or(kDefaultSeed);
    cfg.starts = req.starts.value_or(defaultStarts);
    return cfg;
}

ReportDocument make_report(const CommandRequest& req, ordered_json inputs, ordered_json results,
                           ordered_json diagnostics) {
    ReportDocument rep;
    rep.doc["schemaVersion"] = "1";
    rep.doc["subcommand"] = subcommand_name(req.subcommand);
    rep.doc["inputs"] = std::move(inputs);
    rep.doc["results"] = std::move(results);
    rep.doc["diagnostics"] = std::move(diagnostics);
    return rep;
}

ordered_json pentagon_solution_json(const pentagon::PentagonSolution& sol) {
    ordered_json results;
    results["r"] = sol.r;
    results["x"] = sol.x;
    results["y"] = sol.y;
    results["z"] = sol.z;
    results["area"] = sol.area;
    ordered_json pts = ordered_json::array();
    for (std::size_t i = 0; i < sol.points.size(); ++i)
        pts.push_back({{"label", sol.points.labels[i]},
                       {"px", sol.points[i][0]},
                       {"py", sol.points[i][1]}});
    results["points"] = pts;
    ordered_json tight = ordered_json::array();
    for (const auto& tp : sol.tightPairs)
        tight.push_back({{"i", tp.i + 1}, {"j", tp.j + 1}, {"cap", tp.cap}});
    results["tightPairs"] = tight;
    ordered_json records = ordered_json::array();
    for (std::size_t i = 0; i < sol.points.size(); ++i)
        records.push_back({{"label", sol.points.labels[i]},
                           {"px", sol.points[i][0]},
                           {"py", sol.points[i][1]}});
    results["records"] = records;
    return results;
}

RunOutcome validation_error(const std::string& message) {
    RunOutcome out;
    out.status = 2;
    out.error = message;
    return out;
}

RunOutcome run_volume(const CommandRequest& req) {
    if (!req.n || !req.k) return validation_error("volume: --n and --k are required");
    const int n = *req.n;
    const int k = *req.k;
    if (n < 2) return validation_error("volume: n must be >= 2");
    if (k < n + 1) return validation_error("volume: k must be >= n + 1");
    formulas::VolumeResult vr;
    if (n == 2 && k % 2 == 1)
        vr = formulas::v2k_odd(k);
    else if (k == n + 1)
        vr = formulas::v_simplex(n);
    else if (k == n + 2)
        vr = formulas::v_n_plus_2(n);
    else if (k == n + 3 && n >= 3)
        vr = formulas::v_n_plus_3(n);
    else
        return validation_error("volume: V(" + std::to_string(n) + "," + std::to_string(k) +
                                ") is unknown to this artifact (supported: k = n+1, n+2, n+3, "
                                "and odd k for n = 2)");
    ordered_json results;
    results["volume"] = vr.volume;
    results["provenance"] = vr.provenance;
    results["records"] = ordered_json::array(
        {{{"n", vr.n}, {"k", vr.k}, {"volume", vr.volume}, {"provenance", vr.provenance}}});
    return {0, make_report(req, {{"n", n}, {"k", k}}, std::move(results), ordered_json::object()),
            ""};
}

RunOutcome run_pentagon(const CommandRequest& req) {
    if (!req.r) return validation_error("pentagon: --r is required");
    const double r = *req.r;
    pentagon::PentagonSolution sol;
    if (req.x) {
        const double x = *req.x;
        sol.r = r;
        sol.x = x;
        sol.area = pentagon::area_A(std::min(r, 1.0), x);  // domain-checks x
        sol.y = std::sqrt(1.0 - (0.5 + x) * (0.5 + x));
        sol.z = std::sqrt(r * r - x * x);
        sol.points.points = {geom::Point{0.5, sol.y - sol.z}, geom::Point{x, -sol.z},
                             geom::Point{-x, -sol.z}, geom::Point{-0.5, sol.y - sol.z},
                             geom::Point{0.0, 0.0}};
        sol.points.labels = {"P1", "P2", "P3", "P4", "P5"};
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) {
                const double cap = (j == 4) ? r : 1.0;
                if (std::fabs(geom::distance(sol.points[static_cast<std::size_t>(i)],
                                             sol.points[static_cast<std::size_t>(j)]) -
                              cap) <= 1e-9)
                    sol.tightPairs.push_back({i, j, cap});
            }
    } else {
        sol = pentagon::best_area(r);
    }
    ordered_json diagnostics;
    diagnostics["tolerances"] = {{"rootBracketWidth", 1e-13}, {"derivativeAtRoot", 1e-9}};
    return {0, make_report(req, {{"r", r}, {"x", req.x ? ordered_json(*req.x) : ordered_json()}},
                           pentagon_solution_json(sol), std::move(diagnostics)),
            ""};
}

RunOutcome run_cases(const CommandRequest& req) {
    if (!req.caseTag || !req.r) return validation_error("cases: --case and --r are required");
    if (ci_mode() && !req.seed)
        return validation_error("cases: --seed is required when MAXPOLY_CI=1");
    const std::string& tag = *req.caseTag;
    if (tag.size() != 1 || tag[0] < 'A' || tag[0] > 'F')
        return validation_error("cases: --case must be one of A..F");
    const auto caseTag = static_cast<pentagon::CaseTag>(tag[0] - 'A');
    const oracle::SearchConfig cfg = config_from(req, 12);
    const auto [area, points] = pentagon::case_max(caseTag, *req.r, cfg);
    ordered_json results;
    results["case"] = tag;
    results["r"] = *req.r;
    results["area"] = area;
    results["records"] = point_records(points);
    ordered_json diagnostics;
    diagnostics["seed"] = cfg.seed;
    diagnostics["starts"] = cfg.starts;
    return {0, make_report(req, {{"case", tag}, {"r", *req.r}}, std::move(results),
                           std::move(diagnostics)),
            ""};
}

RunOutcome run_construct(const CommandRequest& req) {
    construct::PolytopeSpec spec;
    ordered_json inputs;
    if (req.h) {
        if (req.n && *req.n != 3)
            return validation_error("construct: --h applies to the 3-dimensional build (n = 3)");
        spec = construct::build_pyramidal_3d(*req.h);
        inputs["n"] = 3;
        inputs["h"] = *req.h;
    } else {
        if (!req.n) return validation_error("construct: --n is required");
        spec = construct::build_optimal(*req.n);
        inputs["n"] = *req.n;
    }
    ordered_json results;
    results["typeTag"] = construct::to_string(spec.typeTag);
    results["n"] = spec.n;
    results["vertexCount"] = spec.vertices.size();
    results["claimedVolume"] = spec.claimedVolume;
    results["diameter"] = geom::diameter(spec.vertices);
    results["records"] = point_records(spec.vertices);
    return {0, make_report(req, std::move(inputs), std::move(results), ordered_json::object()),
            ""};
}

RunOutcome run_search(const CommandRequest& req) {
    if (!req.mode) return validation_error("search: --mode polygon|polytope3d is required");
    if (ci_mode() && !req.seed)
        return validation_error("search: --seed is required when MAXPOLY_CI=1");
    const oracle::SearchConfig cfg = config_from(req, 64);
    oracle::SearchResult res;
    ordered_json inputs;
    inputs["mode"] = *req.mode;
    if (*req.mode == "polygon") {
        pentagon::CapMatrix caps;
        if (req.capsFile) {
            std::ifstream in(*req.capsFile);
            if (!in) return validation_error("search: cannot open caps file " + *req.capsFile);
            caps = parse_cap_matrix(in);
            inputs["caps"] = *req.capsFile;
        } else {
            if (!req.k) return validation_error("search: --k or --caps is required for polygon");
            if (*req.k < 3) return validation_error("search: k must be >= 3");
            caps = pentagon::CapMatrix(*req.k, 1.0);
            inputs["k"] = *req.k;
        }
        res = oracle::search_max_area_polygon(caps, cfg);
    } else if (*req.mode == "polytope3d") {
        if (!req.points) return validation_error("search: --points is required for polytope3d");
        res = oracle::search_max_volume_3d(*req.points, cfg);
        inputs["points"] = *req.points;
    } else {
        return validation_error("search: unknown mode " + *req.mode);
    }
    inputs["seed"] = cfg.seed;
    inputs["starts"] = cfg.starts;
    ordered_json results;
    results["bestValue"] = res.bestValue;
    results["feasible"] = res.feasible;
    results["perStartValues"] = res.perStartValues;
    results["records"] = point_records(res.bestPoints, "point");
    ordered_json diagnostics;
    diagnostics["evaluations"] = res.evaluations;
    diagnostics["feasibilityTolerance"] = 1e-9;
    return {0, make_report(req, std::move(inputs), std::move(results), std::move(diagnostics)),
            ""};
}

std::string mpq_to_string(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

RunOutcome run_counts(const CommandRequest& req) {
    if (req.trackleations == req.benderWormald)
        return validation_error("counts: exactly one of --trackleations, --bender-wormald");
    formulas::CountResult cr;
    ordered_json inputs;
    std::string formula;
    if (req.trackleations) {
        if (!req.m) return validation_error("counts: --m is required with --trackleations");
        cr = formulas::trackleation_count(*req.m);
        formula = "trackleations";
        inputs["m"] = *req.m;
    } else {
        if (!req.k) return validation_error("counts: --k is required with --bender-wormald");
        cr = formulas::bender_wormald(*req.k);
        formula = "bender-wormald";
        inputs["k"] = *req.k;
    }
    ordered_json results;
    results["value"] = mpq_to_string(cr.value);
    results["numerator"] = cr.value.get_num().get_str();
    results["denominator"] = cr.value.get_den().get_str();
    results["integer"] = cr.is_integer();
    results["approx"] = cr.value.get_d();
    results["records"] = ordered_json::array({{{"formula", formula},
                                               {"parameter", cr.parameter},
                                               {"value", mpq_to_string(cr.value)},
                                               {"integer", cr.is_integer()}}});
    return {0, make_report(req, std::move(inputs), std::move(results), ordered_json::object()),
            ""};
}

RunOutcome run_limits(const CommandRequest& req) {
    if (!req.n && !req.m) return validation_error("limits: --n is required");
    const long n = req.m ? *req.m : static_cast<long>(*req.n);
    const formulas::LimitRatios lr = formulas::limit_ratios(n);
    ordered_json results;
    results["ratio1"] = lr.ratio1;
    results["ratio2"] = lr.ratio2;
    results["records"] =
        ordered_json::array({{{"n", n}, {"ratio1", lr.ratio1}, {"ratio2", lr.ratio2}}});
    return {0, make_report(req, {{"n", n}}, std::move(results), ordered_json::object()), ""};
}

RunOutcome run_verify(const CommandRequest& req) {
    if (!req.projection) return validation_error("verify: --projection is required");
    if (ci_mode() && !req.seed)
        return validation_error("verify: --seed is required when MAXPOLY_CI=1");
    const long trials = req.trials.value_or(1000);
    if (trials < 1) return validation_error("verify: --trials must be >= 1");
    oracle::SearchConfig cfg;
    cfg.seed = req.seed.value_or(kDefaultSeed);
    const oracle::ProjectionReport rep = oracle::verify_projection_monotonicity(trials, cfg);
    ordered_json results;
    results["trials"] = rep.trials;
    results["distanceViolations"] = rep.distanceViolations;
    results["volumeMismatches"] = rep.volumeMismatches;
    results["structureResamples"] = rep.structureResamples;
    results["maxVolumeDelta"] = rep.maxVolumeDelta;
    results["pass"] = rep.pass;
    results["records"] = ordered_json::array({{{"trials", rep.trials},
                                               {"distanceViolations", rep.distanceViolations},
                                               {"volumeMismatches", rep.volumeMismatches},
                                               {"pass", rep.pass}}});
    ordered_json diagnostics;
    diagnostics["volumeTolerance"] = 1e-9;
    diagnostics["seed"] = cfg.seed;
    return {0, make_report(req, {{"trials", trials}}, std::move(results), std::move(diagnostics)),
            ""};
}

}  // namespace

RunOutcome run(const CommandRequest& request) {
    try {
        switch (request.subcommand) {
            case Subcommand::volume: return run_volume(request);
            case Subcommand::pentagon: return run_pentagon(request);
            case Subcommand::cases: return run_cases(request);
            case Subcommand::construct: return run_construct(request);
            case Subcommand::search: return run_search(request);
            case Subcommand::counts: return run_counts(request);
            case Subcommand::limits: return run_limits(request);
            case Subcommand::verify: return run_verify(request);
        }
        return {1, {}, "unhandled subcommand"};
    } catch (const domain_error& e) {
        return {2, {}, e.what()};
    } catch (const degenerate_hull_error& e) {
        return {2, {}, e.what()};
    } catch (const std::exception& e) {
        return {1, {}, e.what()};
    }
}

namespace {

std::string json_scalar_to_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return fmt12(v.get<double>());
    if (v.is_null()) return "";
    return v.dump();
}

void flatten_into(const std::string& prefix, const ordered_json& obj,
                  std::vector<std::pair<std::string, std::string>>& out) {
    for (const auto& [key, value] : obj.items()) {
        if (key == "records") continue;
        if (value.is_object())
            flatten_into(prefix + key + ".", value, out);
        else if (value.is_array()) {
            std::string joined;
            for (const auto& el : value) {
                if (!joined.empty()) joined += " ";
                joined += json_scalar_to_text(el.is_object() ? ordered_json(el.dump()) : el);
            }
            out.emplace_back(prefix + key, joined);
        } else
            out.emplace_back(prefix + key, json_scalar_to_text(value));
    }
}

}  // namespace

std::string emit(const ReportDocument& report, OutputFormat format) {
    const ordered_json& doc = report.doc;
    if (format == OutputFormat::json) return doc.dump() + "\n";

    const ordered_json* records = nullptr;
    if (doc.contains("results") && doc["results"].contains("records"))
        records = &doc["results"]["records"];

    if (format == OutputFormat::csv) {
        std::ostringstream os;
        if (records != nullptr && records->is_array() && !records->empty()) {
            bool first = true;
            for (const auto& [key, value] : records->front().items()) {
                (void)value;
                os << (first ? "" : ",") << key;
                first = false;
            }
            os << "\n";
            for (const auto& row : *records) {
                first = true;
                for (const auto& [key, value] : row.items()) {
                    (void)key;
                    os << (first ? "" : ",") << json_scalar_to_text(value);
                    first = false;
                }
                os << "\n";
            }
        }
        return os.str();
    }

    // text
    std::vector<std::pair<std::string, std::string>> lines;
    lines.emplace_back("subcommand", doc["subcommand"].get<std::string>());
    flatten_into("inputs.", doc["inputs"], lines);
    flatten_into("", doc["results"], lines);
    flatten_into("diagnostics.", doc["diagnostics"], lines);
    std::size_t width = 0;
    for (const auto& [k, v] : lines) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : lines)
        os << k << std::string(width - k.size() + 2, ' ') << v << "\n";
    if (records != nullptr && records->is_array() && !records->empty()) {
        std::vector<std::string> header;
        for (const auto& [key, value] : records->front().items()) {
            (void)value;
            header.push_back(key);
        }
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : *records) {
            std::vector<std::string> r;
            for (const auto& [key, value] : row.items()) {
                (void)key;
                r.push_back(json_scalar_to_text(value));
            }
            rows.push_back(std::move(r));
        }
        std::vector<std::size_t> w(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) {
            w[c] = header[c].size();
            for (const auto& r : rows) w[c] = std::max(w[c], r[c].size());
        }
        os << "\n";
        for (std::size_t c = 0; c < header.size(); ++c)
            os << header[c] << std::string(w[c] - header[c].size() + 2, ' ');
        os << "\n";
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < header.size(); ++c)
                os << r[c] << std::string(w[c] - r[c].size() + 2, ' ');
            os << "\n";
        }
    }
    return os.str();
}

pentagon::CapMatrix parse_cap_matrix(std::istream& in) {
    int k = 0;
    if (!(in >> k) || k < 2) throw domain_error("cap matrix: first line must be k >= 2");
    pentagon::CapMatrix caps(k, 0.0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            double v = 0.0;
            if (!(in >> v)) throw domain_error("cap matrix: expected k lines of k decimals");
            caps.caps[static_cast<std::size_t>(i) * k + j] = v;
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (std::fabs(caps.at(i, j) - caps.at(j, i)) > 1e-12)
                throw domain_error("cap matrix: not symmetric within 1e-12");
    // exact symmetry below the tolerance, and a validated result
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) caps.set(i, j, caps.at(i, j));
    caps.validate();
    return caps;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"maxpoly: maximal volumes of unit-diameter polytopes with n+1..n+3 vertices"};
    app.require_subcommand(1);

    CommandRequest req;
    std::string format = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format: json, csv, text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option_function<std::uint64_t>(
            "--seed", [&](std::uint64_t s) { req.seed = s; }, "Random seed");
    };

    int n = 0, k = 0, points = 0, starts = 0;
    long m = 0, trials = 0;
    double r = 0, x = 0, h = 0;
    std::string caseTag, mode, capsFile;

    CLI::App* volume = app.add_subcommand("volume", "Evaluate V(n, k)");
    volume->add_option("--n", n, "dimension")->required();
    volume->add_option("--k", k, "vertex count")->required();
    add_common(volume);

    CLI::App* pent = app.add_subcommand("pentagon", "Optimal symmetric pentagon at radius r");
    pent->add_option("--r", r, "apex cap radius")->required();
    CLI::Option* xOpt = pent->add_option("--x", x, "evaluate at a fixed abscissa");
    add_common(pent);

    CLI::App* cases = app.add_subcommand("cases", "Maximize one diameter-graph case");
    cases->add_option("--case", caseTag, "A..F")->required();
    cases->add_option("--r", r, "apex cap radius")->required();
    cases->add_option("--starts", starts, "multistart count");
    add_seed(cases);
    add_common(cases);

    CLI::App* cons = app.add_subcommand("construct", "Emit optimal polytope coordinates");
    cons->set_help_flag("--help", "Print help");  // keep -h free for --h
    cons->add_option("--n", n, "dimension");
    CLI::Option* hOpt = cons->add_option("--h", h, "height of the 3D pyramidal build");
    add_common(cons);

    CLI::App* search = app.add_subcommand("search", "Stochastic search oracle");
    search->add_option("--mode", mode, "polygon | polytope3d")->required();
    search->add_option("--k", k, "polygon vertex count (unit caps)");
    search->add_option("--points", points, "3D point count");
    search->add_option("--caps", capsFile, "cap matrix file");
    search->add_option("--starts", starts, "multistart count");
    add_seed(search);
    add_common(search);

    CLI::App* counts = app.add_subcommand("counts", "Exact counting formulas");
    counts->add_flag("--trackleations", req.trackleations, "trackleation count of the (2n)-gon");
    counts->add_flag("--bender-wormald", req.benderWormald, "Bender-Wormald approximation");
    counts->add_option("--m", m, "trackleation parameter");
    counts->add_option("--k", k, "Bender-Wormald parameter");
    add_common(counts);

    CLI::App* limits = app.add_subcommand("limits", "Limit ratios at dimension n");
    limits->add_option("--n", m, "dimension")->required();
    add_common(limits);

    CLI::App* verify = app.add_subcommand("verify", "Projection property verification");
    verify->add_flag("--projection", req.projection, "run the projection check");
    verify->add_option("--trials", trials, "trial count");
    add_seed(verify);
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    if (volume->parsed()) {
        req.subcommand = Subcommand::volume;
        req.n = n;
        req.k = k;
    } else if (pent->parsed()) {
        req.subcommand = Subcommand::pentagon;
        req.r = r;
        if (xOpt->count() > 0) req.x = x;
    } else if (cases->parsed()) {
        req.subcommand = Subcommand::cases;
        req.caseTag = caseTag;
        req.r = r;
        if (cases->count("--starts") > 0) req.starts = starts;
    } else if (cons->parsed()) {
        req.subcommand = Subcommand::construct;
        if (cons->count("--n") > 0) req.n = n;
        if (hOpt->count() > 0) req.h = h;
    } else if (search->parsed()) {
        req.subcommand = Subcommand::search;
        req.mode = mode;
        if (search->count("--k") > 0) req.k = k;
        if (search->count("--points") > 0) req.points = points;
        if (search->count("--caps") > 0) req.capsFile = capsFile;
        if (search->count("--starts") > 0) req.starts = starts;
    } else if (counts->parsed()) {
        req.subcommand = Subcommand::counts;
        if (counts->count("--m") > 0) req.m = m;
        if (counts->count("--k") > 0) req.k = k;
    } else if (limits->parsed()) {
        req.subcommand = Subcommand::limits;
        req.m = m;
    } else if (verify->parsed()) {
        req.subcommand = Subcommand::verify;
        if (verify->count("--trials") > 0) req.trials = trials;
    }

    req.outputFormat = format == "json"   ? OutputFormat::json
                       : format == "csv" ? OutputFormat::csv
                                         : OutputFormat::text;

    const RunOutcome outcome = run(req);
    if (outcome.status != 0) {
        err << "error: " << outcome.error << "\n";
        return outcome.status;
    }
    out << emit(outcome.report, req.outputFormat);
    return 0;
}

}  // namespace maxpoly::cli
