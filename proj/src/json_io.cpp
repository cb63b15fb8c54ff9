#include "bellkit/json_io.hpp"

#include <stdexcept>
#include <string>

namespace bellkit::jsonio {

namespace {

Rational rational_field(const Json& j, const char* where) {
    if (!j.is_string())
        throw std::invalid_argument(std::string(where) +
                                    ": exact entries must be \"num/den\" strings");
    return parse_rational(j.get<std::string>());
}

double number_field(const Json& j, const char* where) {
    if (!j.is_number())
        throw std::invalid_argument(std::string(where) + ": float entries must be JSON numbers");
    return j.get<double>();
}

RatVec rational_vector(const Json& j, const char* where) {
    if (!j.is_array()) throw std::invalid_argument(std::string(where) + ": expected an array");
    RatVec out;
    for (const auto& x : j) out.push_back(rational_field(x, where));
    return out;
}

Json rational_vector_to_json(const RatVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(format_rational(x));
    return out;
}

template <typename T, typename Field>
std::array<T, 4> quad(const Json& j, const char* where, Field field) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument(std::string(where) + ": expected an array of 4 entries");
    std::array<T, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = field(j[i], where);
    return out;
}

const Json& member(const Json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string(where) + ": missing \"" + key + "\"");
    return j.at(key);
}

Scenario scenario_from_json(const Json& j, const char* where) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument(std::string(where) +
                                    ": \"scenario\" must be [mA, mB, dA, dB]");
    Scenario s;
    s.alice_settings = j[0].get<int>();
    s.bob_settings = j[1].get<int>();
    s.alice_outcomes = j[2].get<int>();
    s.bob_outcomes = j[3].get<int>();
    s.validate();
    return s;
}

Json scenario_to_json(const Scenario& s) {
    return Json::array({s.alice_settings, s.bob_settings, s.alice_outcomes, s.bob_outcomes});
}

}  // namespace

Json behavior_to_json(const Behavior& b) {
    Json out;
    out["scenario"] = scenario_to_json(b.scenario);
    out["mode"] = "exact";
    Json probs = Json::array();
    for (const auto& p : b.probs) probs.push_back(format_rational(p));
    out["probs"] = std::move(probs);
    return out;
}

Json behavior_to_json(const BehaviorF& b) {
    Json out;
    out["scenario"] = scenario_to_json(b.scenario);
    out["mode"] = "float";
    out["probs"] = b.probs;
    return out;
}

AnyBehavior behavior_from_json(const Json& j) {
    const Scenario s = scenario_from_json(member(j, "scenario", "behavior"), "behavior");
    const std::string mode = member(j, "mode", "behavior").get<std::string>();
    const Json& probs = member(j, "probs", "behavior");
    if (!probs.is_array()) throw std::invalid_argument("behavior: \"probs\" must be an array");

    if (mode == "exact") {
        Behavior b;
        b.scenario = s;
        for (const auto& p : probs) b.probs.push_back(rational_field(p, "behavior probs"));
        return b;
    }
    if (mode == "float") {
        BehaviorF b;
        b.scenario = s;
        for (const auto& p : probs) b.probs.push_back(number_field(p, "behavior probs"));
        return b;
    }
    throw std::invalid_argument("behavior: \"mode\" must be \"exact\" or \"float\"");
}

Json correlators_to_json(const CorrelatorPoint& p) {
    Json out;
    Json m = Json::array(), c = Json::array();
    for (const auto& x : p.m) m.push_back(format_rational(x));
    for (const auto& x : p.c) c.push_back(format_rational(x));
    out["m"] = std::move(m);
    out["c"] = std::move(c);
    return out;
}

Json correlators_to_json(const CorrelatorPointF& p) {
    Json out;
    out["m"] = p.m;
    out["c"] = p.c;
    return out;
}

AnyCorrelators correlators_from_json(const Json& j) {
    const Json& m = member(j, "m", "correlators");
    const Json& c = member(j, "c", "correlators");
    const bool exact = m.is_array() && !m.empty() && m[0].is_string();
    if (exact) {
        CorrelatorPoint p;
        p.m = quad<Rational>(m, "correlators m", rational_field);
        p.c = quad<Rational>(c, "correlators c", rational_field);
        return p;
    }
    CorrelatorPointF p;
    p.m = quad<double>(m, "correlators m", number_field);
    p.c = quad<double>(c, "correlators c", number_field);
    return p;
}

Json vpolytope_to_json(const geom::VPolytope& p) {
    Json out;
    out["dim"] = p.ambient_dim;
    Json vs = Json::array();
    for (const auto& v : p.vertices) vs.push_back(rational_vector_to_json(v));
    out["vertices"] = std::move(vs);
    return out;
}

geom::VPolytope vpolytope_from_json(const Json& j) {
    geom::VPolytope p;
    p.ambient_dim = member(j, "dim", "vpolytope").get<long>();
    for (const auto& v : member(j, "vertices", "vpolytope"))
        p.vertices.push_back(rational_vector(v, "vpolytope vertex"));
    return p;
}

Json hpolytope_to_json(const geom::HPolytope& h) {
    Json out;
    out["dim"] = h.ambient_dim;
    Json ineqs = Json::array();
    for (const auto& q : h.ineqs) {
        Json row;
        row["a"] = rational_vector_to_json(q.normal);
        row["b"] = format_rational(q.bound);
        ineqs.push_back(std::move(row));
    }
    out["ineqs"] = std::move(ineqs);
    Json eqs = Json::array();
    for (const auto& e : h.eqs) {
        Json row;
        row["a"] = rational_vector_to_json(e.normal);
        row["b"] = format_rational(e.value);
        eqs.push_back(std::move(row));
    }
    out["eqs"] = std::move(eqs);
    return out;
}

geom::HPolytope hpolytope_from_json(const Json& j) {
    geom::HPolytope h;
    h.ambient_dim = member(j, "dim", "hpolytope").get<long>();
    for (const auto& row : member(j, "ineqs", "hpolytope")) {
        geom::Inequality q;
        q.normal = rational_vector(member(row, "a", "hpolytope ineq"), "hpolytope ineq");
        q.bound = rational_field(member(row, "b", "hpolytope ineq"), "hpolytope ineq");
        h.ineqs.push_back(std::move(q));
    }
    for (const auto& row : member(j, "eqs", "hpolytope")) {
        geom::Equality e;
        e.normal = rational_vector(member(row, "a", "hpolytope eq"), "hpolytope eq");
        e.value = rational_field(member(row, "b", "hpolytope eq"), "hpolytope eq");
        h.eqs.push_back(std::move(e));
    }
    return h;
}

Json functional_to_json(const BellFunctional& f) {
    Json out;
    Json bm = Json::array(), bc = Json::array();
    for (const auto& x : f.beta_m) bm.push_back(format_rational(x));
    for (const auto& x : f.beta_c) bc.push_back(format_rational(x));
    out["beta_m"] = std::move(bm);
    out["beta_c"] = std::move(bc);
    out["bound"] = format_rational(f.bound);
    return out;
}

BellFunctional functional_from_json(const Json& j) {
    BellFunctional f;
    f.beta_m = quad<Rational>(member(j, "beta_m", "functional"), "functional beta_m",
                              rational_field);
    f.beta_c = quad<Rational>(member(j, "beta_c", "functional"), "functional beta_c",
                              rational_field);
    f.bound = rational_field(member(j, "bound", "functional"), "functional bound");
    return f;
}

Json model_to_json(const quantum::QuantumModel& qm) {
    Json out;
    Json state = Json::array();
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            state.push_back(Json::array({qm.state(i, k).real(), qm.state(i, k).imag()}));
    out["state"] = std::move(state);
    for (const char* key : {"alice", "bob"}) {
        const auto& side = key == std::string("alice") ? qm.alice : qm.bob;
        Json obs = Json::array();
        for (const auto& o : side)
            obs.push_back(Json::array({o.bloch.x(), o.bloch.y(), o.bloch.z()}));
        out[key] = std::move(obs);
    }
    return out;
}

quantum::QuantumModel model_from_json(const Json& j) {
    quantum::QuantumModel qm;
    const Json& state = member(j, "state", "model");
    if (!state.is_array() || state.size() != 16)
        throw std::invalid_argument("model: \"state\" must hold 16 [re, im] entries");
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const Json& entry = state[4 * i + k];
            if (!entry.is_array() || entry.size() != 2)
                throw std::invalid_argument("model: state entries must be [re, im] pairs");
            qm.state(i, k) = std::complex<double>(number_field(entry[0], "model state"),
                                                  number_field(entry[1], "model state"));
        }
    for (const char* key : {"alice", "bob"}) {
        const Json& obs = member(j, key, "model");
        if (!obs.is_array() || obs.size() != 2)
            throw std::invalid_argument("model: each party needs exactly 2 observables");
        auto& side = key == std::string("alice") ? qm.alice : qm.bob;
        for (int t = 0; t < 2; ++t) {
            const Json& n = obs[t];
            if (!n.is_array() || n.size() != 3)
                throw std::invalid_argument("model: observables are [nx, ny, nz] Bloch vectors");
            side[t].bloch = Eigen::Vector3d(number_field(n[0], "model bloch"),
                                            number_field(n[1], "model bloch"),
                                            number_field(n[2], "model bloch"));
        }
    }
    return qm;
}

}  // namespace bellkit::jsonio
