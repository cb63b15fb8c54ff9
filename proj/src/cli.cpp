#include "bellkit/cli.hpp"

#include "bellkit/fourier.hpp"
#include "bellkit/geom.hpp"
#include "bellkit/json_io.hpp"
#include "bellkit/localset.hpp"
#include "bellkit/nosignaling.hpp"
#include "bellkit/quantum.hpp"
#include "bellkit/scenario.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace bellkit::cli {

namespace {

using jsonio::Json;

enum class Mode { unset, exact, floating };

Mode mode_of(const std::string& s) {
    if (s.empty()) return Mode::unset;
    if (s == "exact") return Mode::exact;
    if (s == "float") return Mode::floating;
    throw std::invalid_argument("--mode must be exact or float");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    in >> j;
    return j;
}

/// JSON to `out` (or the --out file), summary line to `err`.
void emit(const Json& doc, const std::string& out_path, std::ostream& out, std::ostream& err,
          const std::string& summary) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
        f << text;
        err << "wrote " << out_path << "\n";
    }
    if (!summary.empty()) err << summary << "\n";
}

Json scenario_tag() { return Json::array({2, 2, 2, 2}); }

Json cmd_vertices(Mode mode) {
    const bool as_float = mode == Mode::floating;
    Json doc;
    doc["scenario"] = scenario_tag();
    doc["count"] = 16;
    Json list = Json::array();
    for (const auto& v : deterministic_vertices()) {
        Json entry;
        entry["strategy"] =
            Json::array({v.strategy.alice[0], v.strategy.alice[1], v.strategy.bob[0],
                         v.strategy.bob[1]});
        if (as_float) {
            entry["behavior"] = jsonio::behavior_to_json(to_float(v.behavior));
            entry["point"] = jsonio::correlators_to_json(to_float(v.point));
        } else {
            entry["behavior"] = jsonio::behavior_to_json(v.behavior);
            entry["point"] = jsonio::correlators_to_json(v.point);
        }
        list.push_back(std::move(entry));
    }
    doc["vertices"] = std::move(list);
    return doc;
}

bool zero_marginal_part(const geom::Inequality& q) {
    return std::all_of(q.normal.begin(), q.normal.begin() + 4,
                       [](const Rational& x) { return x == 0; });
}

Json cmd_facets(Mode mode, std::string& summary) {
    if (mode == Mode::floating)
        throw std::invalid_argument("facets is an exact computation; --mode float not supported");
    const geom::HPolytope h = geom::facet_enumeration(local_polytope_vertices());
    int chsh = 0, positivity = 0;
    Json doc;
    doc["dim"] = h.ambient_dim;
    Json ineqs = Json::array();
    for (const auto& q : h.ineqs) {
        Json row;
        Json a = Json::array();
        for (const auto& x : q.normal) a.push_back(format_rational(x));
        row["a"] = std::move(a);
        row["b"] = format_rational(q.bound);
        if (zero_marginal_part(q)) {
            row["class"] = "chsh";
            ++chsh;
        } else {
            row["class"] = "positivity";
            ++positivity;
        }
        ineqs.push_back(std::move(row));
    }
    doc["ineqs"] = std::move(ineqs);
    doc["eqs"] = Json::array();
    Json classes;
    classes["chsh"] = chsh;
    classes["positivity"] = positivity;
    doc["classes"] = std::move(classes);
    std::ostringstream s;
    s << h.ineqs.size() << " facets: " << chsh << " chsh, " << positivity << " positivity";
    summary = s.str();
    return doc;
}

Json cmd_ns_vertices(Mode mode, std::string& summary) {
    const bool as_float = mode == Mode::floating;
    const geom::VPolytope ns = geom::canonical(ns_vertices());
    std::set<RatVec> local;
    for (const auto& v : local_polytope_vertices().vertices) local.insert(v);

    int locals = 0, prs = 0;
    Json list = Json::array();
    for (const auto& v : ns.vertices) {
        const CorrelatorPoint point = correlators_from_vector(v);
        const Behavior behavior = from_correlators(point);
        Json entry;
        if (local.count(v)) {
            entry["class"] = "local";
            ++locals;
        } else {
            entry["class"] = "pr";
            ++prs;
        }
        if (as_float) {
            entry["behavior"] = jsonio::behavior_to_json(to_float(behavior));
            entry["point"] = jsonio::correlators_to_json(to_float(point));
        } else {
            entry["behavior"] = jsonio::behavior_to_json(behavior);
            entry["point"] = jsonio::correlators_to_json(point);
        }
        list.push_back(std::move(entry));
    }
    Json doc;
    doc["count"] = ns.vertices.size();
    doc["vertices"] = std::move(list);
    std::ostringstream s;
    s << ns.vertices.size() << " no-signaling vertices: " << locals << " local, " << prs << " pr";
    summary = s.str();
    return doc;
}

Json cmd_member(const std::string& behavior_path, std::string& summary) {
    const jsonio::AnyBehavior any = jsonio::behavior_from_json(read_json_file(behavior_path));
    if (!std::holds_alternative<Behavior>(any))
        throw std::invalid_argument(
            "member requires an exact-mode behavior; float input cannot enter exact arithmetic");
    const Behavior& b = std::get<Behavior>(any);
    b.validate();
    const CorrelatorPoint point = to_correlators(b);
    const auto res = geom::membership(as_vector(point), local_polytope_vertices());

    Json doc;
    if (geom::is_inside(res)) {
        const auto& witness = std::get<geom::InsideWitness>(res);
        doc["inside"] = true;
        Json w = Json::array();
        int support = 0;
        for (const auto& x : witness.weights) {
            w.push_back(format_rational(x));
            if (x != 0) ++support;
        }
        doc["weights"] = std::move(w);
        std::ostringstream s;
        s << "inside: convex combination of " << support << " deterministic vertices";
        summary = s.str();
    } else {
        const auto& sep = std::get<geom::SeparatingHyperplane>(res);
        doc["inside"] = false;
        Json row;
        Json a = Json::array();
        for (const auto& x : sep.normal) a.push_back(format_rational(x));
        row["a"] = std::move(a);
        row["b"] = format_rational(sep.bound);
        doc["separator"] = std::move(row);
        doc["value"] = format_rational(dot(sep.normal, as_vector(point)));
        summary = "outside: separating hyperplane certified";
    }
    return doc;
}

Json cmd_chsh(const std::string& behavior_path, Mode mode, double tol, std::string& summary) {
    const jsonio::AnyBehavior any = jsonio::behavior_from_json(read_json_file(behavior_path));
    Json doc;
    if (std::holds_alternative<Behavior>(any)) {
        const Behavior& b = std::get<Behavior>(any);
        b.validate();
        const CorrelatorPoint point = to_correlators(b);
        const Rational value = chsh_value(point);
        if (mode == Mode::floating) {
            doc["mode"] = "float";
            doc["point"] = jsonio::correlators_to_json(to_float(point));
            doc["value"] = value.convert_to<double>();
        } else {
            doc["mode"] = "exact";
            doc["point"] = jsonio::correlators_to_json(point);
            doc["value"] = format_rational(value);
        }
        summary = "chsh value: " + format_rational(value);
    } else {
        if (mode == Mode::exact)
            throw std::invalid_argument(
                "cannot run a float behavior in exact mode; conversion is one-way");
        const BehaviorF& b = std::get<BehaviorF>(any);
        b.validate(tol);
        const CorrelatorPointF point = to_correlators(b, tol);
        const double value = chsh_value(point);
        doc["mode"] = "float";
        doc["point"] = jsonio::correlators_to_json(point);
        doc["value"] = value;
        std::ostringstream s;
        s << "chsh value: " << value;
        summary = s.str();
    }
    return doc;
}

Json cmd_chsh_max(bool product, bool full_bloch, std::string& summary) {
    quantum::SeesawOptions opts;
    opts.product_state = product;
    opts.full_bloch = full_bloch;
    const quantum::SeesawResult r = quantum::maximize_chsh(opts);
    Json doc;
    doc["value"] = r.value;
    doc["model"] = jsonio::model_to_json(r.model);
    doc["iterations"] = r.iterations;
    std::ostringstream s;
    s << "seesaw converged to " << r.value << " after " << r.iterations << " iterations";
    summary = s.str();
    return doc;
}

Json cmd_quantum(const std::string& model_path, std::string& summary) {
    const quantum::QuantumModel qm = jsonio::model_from_json(read_json_file(model_path));
    const BehaviorF b = quantum::behavior_from_quantum(qm);
    summary = "quantum behavior computed";
    return jsonio::behavior_to_json(b);
}

Json cmd_fourier(const std::string& behavior_path, Mode mode, double tol, std::string& summary) {
    const jsonio::AnyBehavior any = jsonio::behavior_from_json(read_json_file(behavior_path));
    Json doc;
    if (std::holds_alternative<Behavior>(any) && mode != Mode::floating) {
        const Behavior& b = std::get<Behavior>(any);
        b.validate();
        const auto E = fourier::e_matrix(b);
        Json em = Json::array();
        for (int x = 0; x < 2; ++x)
            em.push_back(Json::array({format_rational(E.e[x][0]), format_rational(E.e[x][1])}));
        doc["E"] = std::move(em);
        Json qv;
        for (int m1 = 0; m1 < 2; ++m1)
            for (int m2 = 0; m2 < 2; ++m2) {
                const std::string key = std::to_string(m1) + std::to_string(m2);
                qv[key] = format_rational(fourier::hs_inner(E, fourier::q_functional(m1, m2)));
            }
        doc["q_values"] = std::move(qv);
    } else {
        fourier::EMatrixF E;
        if (std::holds_alternative<Behavior>(any)) {
            const Behavior& b = std::get<Behavior>(any);
            b.validate();
            const auto exact = fourier::e_matrix(b);
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) E.e[x][y] = exact.e[x][y].convert_to<double>();
        } else {
            if (mode == Mode::exact)
                throw std::invalid_argument(
                    "cannot run a float behavior in exact mode; conversion is one-way");
            const BehaviorF& b = std::get<BehaviorF>(any);
            b.validate(tol);
            E = fourier::e_matrix(b);
        }
        Json em = Json::array();
        for (int x = 0; x < 2; ++x) em.push_back(Json::array({E.e[x][0], E.e[x][1]}));
        doc["E"] = std::move(em);
        Json qv;
        for (int m1 = 0; m1 < 2; ++m1)
            for (int m2 = 0; m2 < 2; ++m2) {
                const std::string key = std::to_string(m1) + std::to_string(m2);
                qv[key] = fourier::hs_inner(E, fourier::q_functional(m1, m2));
            }
        doc["q_values"] = std::move(qv);
    }
    summary = "e-matrix and four pairings computed";
    return doc;
}

Json cmd_witness(const std::string& model_path, const std::string& q_label,
                 std::string& summary) {
    if (q_label.size() != 2 || (q_label[0] != '0' && q_label[0] != '1') ||
        (q_label[1] != '0' && q_label[1] != '1'))
        throw std::invalid_argument("--q must be one of 00, 01, 10, 11");
    const quantum::QuantumModel qm = jsonio::model_from_json(read_json_file(model_path));
    quantum::validate_state(qm.state);
    for (const auto& o : qm.alice) o.validate();
    for (const auto& o : qm.bob) o.validate();

    const auto q = fourier::q_functional(q_label[0] - '0', q_label[1] - '0');
    const quantum::Matrix4cd w = quantum::witness(qm.alice, qm.bob, q);
    const double value = quantum::witness_value(w, qm.state);

    Json doc;
    doc["q"] = q_label;
    doc["value"] = value;
    Json entries = Json::array();
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            entries.push_back(Json::array({w(i, k).real(), w(i, k).imag()}));
    doc["witness"] = std::move(entries);
    std::ostringstream s;
    s << "witness value " << value << " for q=" << q_label;
    summary = s.str();
    return doc;
}

Json cmd_check_claims(bool& consistent, int& deviations, std::string& summary) {
    consistent = true;
    deviations = 0;
    Json records = Json::array();
    const auto record = [&](const char* claim, const Json& paper, const Json& computed) {
        const bool agrees = paper == computed;
        if (!agrees) ++deviations;
        Json r;
        r["claim"] = claim;
        r["paper"] = paper;
        r["computed"] = computed;
        r["agrees"] = agrees;
        records.push_back(std::move(r));
    };

    record("ns_dimension", 8, ns_dimension(two_two_scenario()));

    const auto verts = deterministic_vertices();
    record("deterministic_vertex_count", 16, static_cast<int>(verts.size()));

    const geom::HPolytope h = geom::facet_enumeration(local_polytope_vertices());
    consistent = consistent && h.eqs.empty();
    record("facet_count", 24, static_cast<int>(h.ineqs.size()));

    // the zero-marginal facets must be exactly the 8 analytic functionals
    const auto analytic = chsh_facets();
    std::set<RatVec> recovered, expected;
    for (const auto& q : h.ineqs)
        if (zero_marginal_part(q)) {
            RatVec key = q.normal;
            key.push_back(q.bound);
            recovered.insert(std::move(key));
        }
    for (const auto& f : analytic) {
        RatVec key = f.as_vector();
        key.push_back(f.bound);
        expected.insert(std::move(key));
    }
    consistent = consistent && recovered == expected;
    record("tight_bell_count", 8, static_cast<int>(recovered.size()));

    // saturating vertices per facet, and the affine dimension they span
    long common_count = -1;
    long common_dim = -1;
    bool uniform = true;
    for (const auto& f : analytic) {
        const FacetVertexReport report = facet_vertex_count(f);
        geom::VPolytope span;
        span.ambient_dim = 8;
        for (const auto& p : report.vertices) span.vertices.push_back(as_vector(p));
        const long dim = geom::affine_dimension(span);
        if (common_count < 0) common_count = report.count;
        if (common_dim < 0) common_dim = dim;
        uniform = uniform && report.count == common_count && dim == common_dim;
    }
    consistent = consistent && uniform;
    record("facet_vertex_count", 6, static_cast<int>(common_count));
    record("facet_affine_dimension", 7, static_cast<int>(common_dim));

    // the local bound itself
    Rational bound = 0;
    for (const auto& f : analytic)
        for (const auto& v : verts) bound = std::max(bound, f.evaluate(v.point));
    record("local_bound", 2, bound.convert_to<int>());

    const geom::VPolytope ns = ns_vertices();
    geom::VPolytope expected_ns = local_polytope_vertices();
    for (const auto& box : pr_boxes()) expected_ns.vertices.push_back(as_vector(box.point));
    consistent = consistent && geom::same_vertex_set(ns, expected_ns);
    record("ns_vertex_count", 24, static_cast<int>(ns.vertices.size()));

    Rational pr_value = 0;
    const auto boxes = pr_boxes();
    for (std::size_t k = 0; k < boxes.size(); ++k)
        pr_value = std::max(pr_value, analytic[k].evaluate(boxes[k].point));
    record("pr_chsh_value", 4, pr_value.convert_to<int>());

    const TesseractReport tesseract = tesseract_check();
    record("tesseract_complete", true, tesseract.complete);
    consistent = consistent && tesseract.complete;

    Rational hs_max = 0;
    for (int l = 0; l < 16; ++l)
        for (int m1 = 0; m1 < 2; ++m1)
            for (int m2 = 0; m2 < 2; ++m2) {
                const Rational v = fourier::hs_inner(
                    fourier::deterministic_e((l >> 3) & 1, (l >> 2) & 1, (l >> 1) & 1, l & 1),
                    fourier::q_functional(m1, m2));
                hs_max = std::max(hs_max, Rational(boost::multiprecision::abs(v)));
            }
    record("hs_bound", 4, hs_max.convert_to<int>());

    Json doc;
    doc["records"] = std::move(records);
    doc["deviations"] = deviations;
    doc["consistent"] = consistent;
    std::ostringstream s;
    s << doc["records"].size() << " claims checked, " << deviations
      << (deviations == 1 ? " deviation" : " deviations") << " from the source, internally "
      << (consistent ? "consistent" : "inconsistent");
    summary = s.str();
    return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bellkit: correlation sets of the (2,2) Bell scenario"};
    app.name("bellkit");
    app.require_subcommand(1);
    app.fallthrough();

    std::string mode_str, out_path, behavior_path, model_path, q_label = "11";
    double tol = kFloatTol;
    bool product = false, full_bloch = false;

    app.add_option("--mode", mode_str, "numeric mode: exact (default) or float")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--out", out_path, "write the JSON document to this file instead of stdout");
    app.add_option("--tol", tol, "validation tolerance for float-mode inputs (default 1e-9)");

    auto* c_vertices =
        app.add_subcommand("vertices", "the 16 local deterministic vertices");
    auto* c_facets =
        app.add_subcommand("facets", "exact facet enumeration of the local polytope");
    auto* c_nsv =
        app.add_subcommand("ns-vertices", "exact vertex enumeration of the no-signaling polytope");
    auto* c_member =
        app.add_subcommand("member", "local-polytope membership certificate for a behavior");
    c_member->add_option("--behavior", behavior_path, "behavior JSON file")->required();
    auto* c_chsh = app.add_subcommand("chsh", "CHSH value of a behavior");
    c_chsh->add_option("--behavior", behavior_path, "behavior JSON file")->required();
    auto* c_chsh_max =
        app.add_subcommand("chsh-max", "seesaw maximization of CHSH over qubit models");
    c_chsh_max->add_flag("--product", product, "restrict the state to pure products");
    c_chsh_max->add_flag("--full-bloch", full_bloch, "allow observables out of the x-z plane");
    auto* c_quantum = app.add_subcommand("quantum", "behavior of a quantum model");
    c_quantum->add_option("--model", model_path, "quantum model JSON file")->required();
    auto* c_fourier =
        app.add_subcommand("fourier", "E-matrix and sign-functional pairings of a behavior");
    c_fourier->add_option("--behavior", behavior_path, "behavior JSON file")->required();
    auto* c_witness =
        app.add_subcommand("witness", "witness operator and its value on the model state");
    c_witness->add_option("--model", model_path, "quantum model JSON file")->required();
    c_witness->add_option("--q", q_label, "sign functional label (00, 01, 10, 11)");
    auto* c_claims =
        app.add_subcommand("check-claims", "recompute the headline numbers and report deviations");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            err << app.help();
            return kExitOk;
        }
        err << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        const Mode mode = mode_of(mode_str);
        Json doc;
        std::string summary;
        int exit_code = kExitOk;

        if (*c_vertices) {
            doc = cmd_vertices(mode);
            summary = "16 local deterministic vertices";
        } else if (*c_facets) {
            doc = cmd_facets(mode, summary);
        } else if (*c_nsv) {
            doc = cmd_ns_vertices(mode, summary);
        } else if (*c_member) {
            if (mode == Mode::floating)
                throw std::invalid_argument("member is an exact computation; --mode float not supported");
            doc = cmd_member(behavior_path, summary);
        } else if (*c_chsh) {
            doc = cmd_chsh(behavior_path, mode, tol, summary);
        } else if (*c_chsh_max) {
            if (mode == Mode::exact)
                throw std::invalid_argument("chsh-max is a float computation; --mode exact not supported");
            doc = cmd_chsh_max(product, full_bloch, summary);
        } else if (*c_quantum) {
            if (mode == Mode::exact)
                throw std::invalid_argument("quantum is a float computation; --mode exact not supported");
            doc = cmd_quantum(model_path, summary);
        } else if (*c_fourier) {
            doc = cmd_fourier(behavior_path, mode, tol, summary);
        } else if (*c_witness) {
            if (mode == Mode::exact)
                throw std::invalid_argument("witness is a float computation; --mode exact not supported");
            doc = cmd_witness(model_path, q_label, summary);
        } else if (*c_claims) {
            bool consistent = true;
            int deviations = 0;
            doc = cmd_check_claims(consistent, deviations, summary);
            if (!consistent) exit_code = kExitDomain;
        }

        emit(doc, out_path, out, err, summary);
        return exit_code;
    } catch (const NotABehaviorError& e) {
        Json detail;
        detail["type"] = "domain";
        detail["message"] = e.what();
        Json cell;
        cell["x"] = e.cell().x;
        cell["y"] = e.cell().y;
        cell["a"] = e.cell().a;
        cell["b"] = e.cell().b;
        detail["cell"] = std::move(cell);
        Json errdoc;
        errdoc["error"] = std::move(detail);
        out << errdoc.dump(2) << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        Json detail;
        detail["type"] = "domain";
        detail["message"] = e.what();
        Json errdoc;
        errdoc["error"] = std::move(detail);
        out << errdoc.dump(2) << "\n";
        return kExitDomain;
    }
}

}  // namespace bellkit::cli
