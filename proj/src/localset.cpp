#include "bellkit/localset.hpp"

#include <algorithm>
#include <stdexcept>

namespace bellkit {

namespace {

int value_sign(int v) {
    if (v != 1 && v != -1) throw std::invalid_argument("outcome value must be +1 or -1");
    return v;
}

using CellPerm = std::array<int, 16>;

CellPerm cell_permutation(const Relabeling& g) {
    const Scenario s = two_two_scenario();
    CellPerm perm{};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const CellRef t = g.apply_cell(x, y, a, b);
                    perm[s.index(x, y, a, b)] = static_cast<int>(s.index(t.x, t.y, t.a, t.b));
                }
    return perm;
}

const std::vector<CellPerm>& all_permutations() {
    static const std::vector<CellPerm> perms = [] {
        std::vector<CellPerm> out;
        for (const auto& g : all_relabelings()) out.push_back(cell_permutation(g));
        return out;
    }();
    return perms;
}

Relabeling element_with_permutation(const CellPerm& target) {
    const auto& perms = all_permutations();
    for (std::size_t i = 0; i < perms.size(); ++i)
        if (perms[i] == target) return all_relabelings()[i];
    throw std::logic_error("relabeling group is not closed");  // unreachable
}

/// The 8x8 matrix of the induced linear action on (m, c) coordinates,
/// probed through the behavior action (exact, so probing is faithful).
RatMat action_matrix(const Relabeling& g) {
    RatMat mat(8, RatVec(8, 0));
    for (int k = 0; k < 8; ++k) {
        CorrelatorPoint probe;
        (k < 4 ? probe.m[k] : probe.c[k - 4]) = Rational(1) / 2;
        const CorrelatorPoint image = to_correlators(apply_relabeling(from_correlators(probe), g));
        for (int r = 0; r < 4; ++r) {
            mat[r][k] = 2 * image.m[r];
            mat[4 + r][k] = 2 * image.c[r];
        }
    }
    return mat;
}

}  // namespace

Behavior DeterministicStrategy::behavior() const {
    const Scenario s = two_two_scenario();
    Behavior out;
    out.scenario = s;
    out.probs.assign(16, 0);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if (outcome_value(a) == value_sign(alice[x]) &&
                        outcome_value(b) == value_sign(bob[y]))
                        out.probs[s.index(x, y, a, b)] = 1;
    return out;
}

CorrelatorPoint DeterministicStrategy::correlators() const {
    CorrelatorPoint p;
    p.m = {Rational(alice[0]), Rational(alice[1]), Rational(bob[0]), Rational(bob[1])};
    p.c = {Rational(alice[0] * bob[0]), Rational(alice[0] * bob[1]),
           Rational(alice[1] * bob[0]), Rational(alice[1] * bob[1])};
    return p;
}

Rational BellFunctional::evaluate(const CorrelatorPoint& p) const {
    Rational v = 0;
    for (int i = 0; i < 4; ++i) v += beta_m[i] * p.m[i] + beta_c[i] * p.c[i];
    return v;
}

RatVec BellFunctional::as_vector() const {
    RatVec v(beta_m.begin(), beta_m.end());
    v.insert(v.end(), beta_c.begin(), beta_c.end());
    return v;
}

CellRef Relabeling::apply_cell(int x, int y, int a, int b) const {
    const int x1 = x ^ static_cast<int>(swap_inputs_alice);
    const int y1 = y ^ static_cast<int>(swap_inputs_bob);
    const int a1 = a ^ static_cast<int>(flip_output[x1]);
    const int b1 = b ^ static_cast<int>(flip_output[2 + y1]);
    if (swap_parties) return CellRef{y1, x1, b1, a1};
    return CellRef{x1, y1, a1, b1};
}

std::vector<DeterministicStrategy> deterministic_strategies() {
    std::vector<DeterministicStrategy> out;
    for (int a0 = 0; a0 < 2; ++a0)
        for (int a1 = 0; a1 < 2; ++a1)
            for (int b0 = 0; b0 < 2; ++b0)
                for (int b1 = 0; b1 < 2; ++b1)
                    out.push_back(DeterministicStrategy{
                        {outcome_value(a0), outcome_value(a1)},
                        {outcome_value(b0), outcome_value(b1)}});
    return out;
}

std::vector<LocalVertex> deterministic_vertices() {
    std::vector<LocalVertex> out;
    for (const auto& s : deterministic_strategies())
        out.push_back(LocalVertex{s, s.behavior(), s.correlators()});
    return out;
}

geom::VPolytope local_polytope_vertices() {
    geom::VPolytope p;
    p.ambient_dim = 8;
    for (const auto& s : deterministic_strategies())
        p.vertices.push_back(as_vector(s.correlators()));
    return p;
}

geom::VPolytope correlation_tetrahedron(int s) {
    value_sign(s);
    geom::VPolytope p;
    p.ambient_dim = 4;
    for (int ra = 0; ra < 2; ++ra)
        for (int rb = 0; rb < 2; ++rb) {
            const int pa = ra ? -1 : 1;
            const int pb = rb ? -1 : 1;
            p.vertices.push_back(
                {Rational(s), Rational(s * pb), Rational(s * pa), Rational(s * pa * pb)});
        }
    return p;
}

std::vector<BellFunctional> chsh_facets() {
    std::vector<BellFunctional> out;
    for (int s : {+1, -1})
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const int pi = i ? -1 : 1;
                const int pj = j ? -1 : 1;
                BellFunctional f;
                f.beta_c = {Rational(s), Rational(-s * pj), Rational(-s * pi),
                            Rational(-s * pi * pj)};
                f.bound = 2;
                out.push_back(std::move(f));
            }
    return out;
}

BellFunctional chsh_functional() {
    BellFunctional f;
    f.beta_c = {1, 1, 1, -1};
    f.bound = 2;
    return f;
}

Behavior apply_relabeling(const Behavior& b, const Relabeling& g) {
    if (!b.scenario.is_two_two())
        throw std::invalid_argument("apply_relabeling: (2,2) scenario required");
    const CellPerm perm = cell_permutation(g);
    Behavior out = b;
    for (int i = 0; i < 16; ++i) out.probs[perm[i]] = b.probs[i];
    return out;
}

const std::vector<Relabeling>& all_relabelings() {
    static const std::vector<Relabeling> group = [] {
        std::vector<Relabeling> out;
        for (int sp = 0; sp < 2; ++sp)
            for (int sa = 0; sa < 2; ++sa)
                for (int sb = 0; sb < 2; ++sb)
                    for (int mask = 0; mask < 16; ++mask) {
                        Relabeling g;
                        g.swap_parties = sp;
                        g.swap_inputs_alice = sa;
                        g.swap_inputs_bob = sb;
                        for (int t = 0; t < 4; ++t) g.flip_output[t] = (mask >> t) & 1;
                        out.push_back(g);
                    }
        return out;
    }();
    return group;
}

Relabeling compose(const Relabeling& g, const Relabeling& h) {
    const CellPerm pg = cell_permutation(g);
    const CellPerm ph = cell_permutation(h);
    CellPerm target{};
    for (int i = 0; i < 16; ++i) target[i] = pg[ph[i]];
    return element_with_permutation(target);
}

Relabeling inverse(const Relabeling& g) {
    const CellPerm pg = cell_permutation(g);
    CellPerm target{};
    for (int i = 0; i < 16; ++i) target[pg[i]] = i;
    return element_with_permutation(target);
}

CorrelatorPoint transform_point(const CorrelatorPoint& p, const Relabeling& g) {
    const RatMat mat = action_matrix(g);
    const RatVec v = as_vector(p);
    RatVec image(8);
    for (int r = 0; r < 8; ++r) image[r] = dot(mat[r], v);
    return correlators_from_vector(image);
}

BellFunctional transform_functional(const BellFunctional& f, const Relabeling& g) {
    // contragredient action: multiply by the transpose of the inverse's matrix
    const RatMat mat = action_matrix(inverse(g));
    const RatVec v = f.as_vector();
    BellFunctional out;
    out.bound = f.bound;
    for (int c = 0; c < 8; ++c) {
        Rational val = 0;
        for (int r = 0; r < 8; ++r) val += mat[r][c] * v[r];
        (c < 4 ? out.beta_m[c] : out.beta_c[c - 4]) = val;
    }
    return out;
}

BellFunctional canonical_functional(const BellFunctional& f) {
    std::optional<BellFunctional> best;
    for (const auto& g : all_relabelings()) {
        BellFunctional t = transform_functional(f, g);
        RatVec key = t.as_vector();
        key.push_back(t.bound);
        if (!best) {
            best = std::move(t);
            continue;
        }
        RatVec bestkey = best->as_vector();
        bestkey.push_back(best->bound);
        if (key < bestkey) best = std::move(t);
    }
    return *best;
}

std::optional<Relabeling> find_relabeling(const BellFunctional& from, const BellFunctional& to) {
    for (const auto& g : all_relabelings())
        if (transform_functional(from, g) == to) return g;
    return std::nullopt;
}

FacetVertexReport facet_vertex_count(const BellFunctional& f) {
    FacetVertexReport report;
    for (const auto& v : deterministic_vertices()) {
        if (f.evaluate(v.point) == f.bound) {
            ++report.count;
            report.vertices.push_back(v.point);
        }
    }
    return report;
}

}  // namespace bellkit
