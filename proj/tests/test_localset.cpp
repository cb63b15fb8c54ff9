#include "bellkit/localset.hpp"

#include "bellkit/geom.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

using namespace bellkit;

TEST_CASE("16 deterministic vertices in canonical order, pairing in c") {
    const auto verts = deterministic_vertices();
    REQUIRE(verts.size() == 16);

    // first strategy is all-+1 with unit correlators
    for (int i = 0; i < 4; ++i) {
        CHECK(verts[0].point.m[i] == 1);
        CHECK(verts[0].point.c[i] == 1);
    }

    // all distinct, all valid, all no-signaling
    std::set<std::vector<Rational>> seen;
    for (const auto& v : verts) {
        v.behavior.validate();
        CHECK(is_no_signaling(v.behavior, Rational(0)));
        seen.insert(as_vector(v.point));
    }
    CHECK(seen.size() == 16);

    // the 16 points pair up as (m, c) <-> (-m, c)
    for (const auto& v : verts) {
        CorrelatorPoint twin;
        for (int i = 0; i < 4; ++i) {
            twin.m[i] = -v.point.m[i];
            twin.c[i] = v.point.c[i];
        }
        CHECK(seen.count(as_vector(twin)) == 1);
    }

    // correlators computed two ways agree
    for (const auto& v : verts) CHECK(to_correlators(v.behavior) == v.point);
}

TEST_CASE("strategy marginals follow the phase parametrization") {
    // <A1> = <A0>(-1)^{rA} and <B1> = <B0>(-1)^{rB} for some bits rA, rB
    for (const auto& v : deterministic_vertices()) {
        const auto& m = v.point.m;
        CHECK((m[1] == m[0] || m[1] == -m[0]));
        CHECK((m[3] == m[2] || m[3] == -m[2]));
    }
}

TEST_CASE("correlation tetrahedra") {
    const geom::VPolytope plus = correlation_tetrahedron(+1);
    geom::VPolytope expect;
    expect.ambient_dim = 4;
    expect.vertices = {
        {Rational(1), Rational(1), Rational(1), Rational(1)},
        {Rational(1), Rational(-1), Rational(1), Rational(-1)},
        {Rational(1), Rational(-1), Rational(-1), Rational(1)},
        {Rational(1), Rational(1), Rational(-1), Rational(-1)},
    };
    CHECK(geom::same_vertex_set(plus, expect));

    const geom::VPolytope minus = correlation_tetrahedron(-1);
    geom::VPolytope negated;
    negated.ambient_dim = 4;
    for (const auto& v : expect.vertices) {
        RatVec n;
        for (const auto& x : v) n.push_back(-x);
        negated.vertices.push_back(std::move(n));
    }
    CHECK(geom::same_vertex_set(minus, negated));

    // the two tetrahedra together span the 4-dimensional correlation
    // polytope on 8 distinct vertices
    geom::VPolytope both = plus;
    both.vertices.insert(both.vertices.end(), minus.vertices.begin(), minus.vertices.end());
    both = geom::canonical(both);
    CHECK(both.vertices.size() == 8);
    CHECK(geom::affine_dimension(both) == 4);

    CHECK_THROWS_AS(correlation_tetrahedron(0), std::invalid_argument);
}

TEST_CASE("tetrahedron facets oppose vertices inside the affine hull") {
    const geom::HPolytope h = geom::facet_enumeration(correlation_tetrahedron(+1));
    REQUIRE(h.eqs.size() == 1);
    CHECK(h.eqs[0].normal == RatVec{1, 0, 0, 0});
    CHECK(h.eqs[0].value == 1);
    CHECK(h.ineqs.size() == 4);
}

TEST_CASE("chsh facet functionals") {
    const auto facets = chsh_facets();
    REQUIRE(facets.size() == 8);

    for (const auto& f : facets) {
        CHECK(f.bound == 2);
        for (int i = 0; i < 4; ++i) CHECK(f.beta_m[i] == 0);
    }

    // f^+_00 = (1,-1,-1,-1), f^+_11 is the CHSH pattern (1,1,1,-1)
    CHECK(facets[0].beta_c == std::array<Rational, 4>{1, -1, -1, -1});
    CHECK(facets[3].beta_c == std::array<Rational, 4>{1, 1, 1, -1});
    CHECK(facets[3] == chsh_functional());

    // saturation: f^s_ij . c^s_{rA rB} = 2 exactly when (rA, rB) != (i, j)
    for (int si = 0; si < 2; ++si) {
        const int s = si == 0 ? +1 : -1;
        const auto tetra = correlation_tetrahedron(s).vertices;  // (rA,rB) lexicographic
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const auto& f = facets[4 * si + 2 * i + j];
                for (int ra = 0; ra < 2; ++ra)
                    for (int rb = 0; rb < 2; ++rb) {
                        Rational v = 0;
                        for (int t = 0; t < 4; ++t) v += f.beta_c[t] * tetra[2 * ra + rb][t];
                        if (ra == i && rb == j)
                            CHECK(v == -2);
                        else
                            CHECK(v == 2);
                    }
            }
    }

    // f^+_11 evaluates to 4 on the opposing PR correlator
    CorrelatorPoint pr;
    pr.c = {1, 1, 1, -1};
    CHECK(facets[3].evaluate(pr) == 4);

    // local bound: max over the 16 deterministic vertices is exactly 2
    for (const auto& f : facets) {
        Rational best = -100;
        for (const auto& v : deterministic_vertices()) best = std::max(best, f.evaluate(v.point));
        CHECK(best == 2);
    }
}

TEST_CASE("chsh_value") {
    CorrelatorPoint pr;
    pr.c = {1, 1, 1, -1};
    CHECK(chsh_value(pr) == 4);
    CHECK(chsh_value(CorrelatorPoint{}) == 0);
    for (const auto& v : deterministic_vertices()) {
        const Rational val = chsh_value(v.point);
        CHECK((val == 2 || val == -2));
    }
    BasicCorrelatorPoint<double> fp;
    fp.c = {0.5, 0.5, 0.5, -0.5};
    CHECK(chsh_value(fp) == doctest::Approx(2.0));
}

TEST_CASE("relabeling group structure") {
    const auto& group = all_relabelings();
    REQUIRE(group.size() == 128);

    // faithful: all 128 cell permutations distinct
    const Behavior probe = [] {
        // a behavior with 16 distinct probabilities, to fingerprint permutations
        Behavior b = uniform_behavior(two_two_scenario());
        Rational total = 0;
        for (int i = 0; i < 16; ++i) total += i + 1;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                Rational cell = 0;
                for (int a = 0; a < 2; ++a)
                    for (int bb = 0; bb < 2; ++bb)
                        cell += b.scenario.index(x, y, a, bb) + 1;
                for (int a = 0; a < 2; ++a)
                    for (int bb = 0; bb < 2; ++bb)
                        b.probs[b.scenario.index(x, y, a, bb)] =
                            Rational(b.scenario.index(x, y, a, bb) + 1) / cell;
            }
        return b;
    }();
    std::set<std::vector<Rational>> images;
    for (const auto& g : group) images.insert(apply_relabeling(probe, g).probs);
    CHECK(images.size() == 128);

    // identity element
    const Relabeling id{};
    CHECK(apply_relabeling(probe, id).probs == probe.probs);

    // closure and compatibility with composition on a sample of pairs
    std::mt19937 rng(321);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        const Relabeling& g = group[pick(rng)];
        const Relabeling& h = group[pick(rng)];
        const Relabeling gh = compose(g, h);
        CHECK(apply_relabeling(apply_relabeling(probe, h), g).probs ==
              apply_relabeling(probe, gh).probs);
        const Relabeling ginv = inverse(g);
        CHECK(apply_relabeling(apply_relabeling(probe, g), ginv).probs == probe.probs);
        CHECK(compose(ginv, g) == id);
    }
}

TEST_CASE("relabeling action on correlators") {
    // flipping both of Alice's outputs negates her marginals and both
    // rows of c (each product loses one sign)
    Relabeling flip_alice;
    flip_alice.flip_output = {true, true, false, false};
    const auto verts = deterministic_vertices();
    for (const auto& v : verts) {
        const CorrelatorPoint t = to_correlators(apply_relabeling(v.behavior, flip_alice));
        CHECK(t.m[0] == -v.point.m[0]);
        CHECK(t.m[1] == -v.point.m[1]);
        CHECK(t.m[2] == v.point.m[2]);
        CHECK(t.m[3] == v.point.m[3]);
        for (int i = 0; i < 4; ++i) CHECK(t.c[i] == -v.point.c[i]);
        // transform_point agrees with the behavior-level action
        CHECK(transform_point(v.point, flip_alice) == t);
    }

    // flipping all four outputs keeps c and negates m
    Relabeling flip_all;
    flip_all.flip_output = {true, true, true, true};
    for (const auto& v : verts) {
        const CorrelatorPoint t = transform_point(v.point, flip_all);
        for (int i = 0; i < 4; ++i) {
            CHECK(t.m[i] == -v.point.m[i]);
            CHECK(t.c[i] == v.point.c[i]);
        }
    }

    // party swap transposes the correlator matrix
    Relabeling swap;
    swap.swap_parties = true;
    for (const auto& v : verts) {
        const CorrelatorPoint t = transform_point(v.point, swap);
        CHECK(t.m[0] == v.point.m[2]);
        CHECK(t.m[1] == v.point.m[3]);
        CHECK(t.m[2] == v.point.m[0]);
        CHECK(t.m[3] == v.point.m[1]);
        CHECK(t.c[0] == v.point.c[0]);
        CHECK(t.c[1] == v.point.c[2]);
        CHECK(t.c[2] == v.point.c[1]);
        CHECK(t.c[3] == v.point.c[3]);
    }
}

TEST_CASE("functional transform is contragredient to the point transform") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::size_t> pick(0, all_relabelings().size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const Relabeling& g = all_relabelings()[pick(rng)];
        BellFunctional f;
        for (int i = 0; i < 4; ++i) {
            f.beta_m[i] = coeff(rng);
            f.beta_c[i] = coeff(rng);
        }
        f.bound = coeff(rng);
        CorrelatorPoint p;
        for (int i = 0; i < 4; ++i) {
            p.m[i] = Rational(coeff(rng)) / 3;
            p.c[i] = Rational(coeff(rng)) / 3;
        }
        CHECK(transform_functional(f, g).evaluate(transform_point(p, g)) == f.evaluate(p));
    }
}

TEST_CASE("the 8 chsh facets form a single relabeling orbit") {
    const auto facets = chsh_facets();
    const BellFunctional chsh = chsh_functional();
    const BellFunctional canon = canonical_functional(chsh);
    for (const auto& f : facets) {
        CHECK(canonical_functional(f) == canon);
        const auto g = find_relabeling(f, chsh);
        REQUIRE(g.has_value());
        CHECK(transform_functional(f, *g) == chsh);
    }
}

TEST_CASE("facet recovery: 24 facets, 8 chsh + 16 positivity") {
    const geom::HPolytope h = geom::facet_enumeration(local_polytope_vertices());
    CHECK(h.eqs.empty());
    REQUIRE(h.ineqs.size() == 24);

    const BellFunctional chsh_canon = canonical_functional(chsh_functional());
    int chsh_count = 0, positivity_count = 0;
    for (const auto& q : h.ineqs) {
        const bool zero_m = std::all_of(q.normal.begin(), q.normal.begin() + 4,
                                        [](const Rational& x) { return x == 0; });
        BellFunctional f;
        for (int i = 0; i < 4; ++i) {
            f.beta_m[i] = q.normal[i];
            f.beta_c[i] = q.normal[4 + i];
        }
        f.bound = q.bound;
        if (zero_m) {
            ++chsh_count;
            // must be one of the 8 analytic functionals, and relabel to CHSH
            const auto facets = chsh_facets();
            CHECK(std::find(facets.begin(), facets.end(), f) != facets.end());
            CHECK(canonical_functional(f) == chsh_canon);
        } else {
            ++positivity_count;
            // positivity facets are the ns_hrep rows: recover p(ab|xy) >= 0
            // shape: normal = -(a, b, ab) pattern with bound 1
            CHECK(q.bound == 1);
        }
    }
    CHECK(chsh_count == 8);
    CHECK(positivity_count == 16);
}

TEST_CASE("facet_vertex_count reports 8 saturating vertices per facet") {
    for (const auto& f : chsh_facets()) {
        const FacetVertexReport r = facet_vertex_count(f);
        CHECK(r.count == 8);
        REQUIRE(r.vertices.size() == 8);

        // they span an affine space of dimension 7
        geom::VPolytope p;
        p.ambient_dim = 8;
        for (const auto& v : r.vertices) p.vertices.push_back(as_vector(v));
        CHECK(geom::affine_dimension(p) == 7);

        // no other facet is violated by any of them
        for (const auto& other : chsh_facets())
            for (const auto& v : r.vertices) CHECK(other.evaluate(v) <= other.bound);

        // each saturating vertex sits over a tetrahedron c-vertex, with
        // the two members of a +/- marginal pair both present
        std::set<std::array<Rational, 4>> cs;
        for (const auto& v : r.vertices) {
            cs.insert(v.c);
            CorrelatorPoint twin;
            for (int t = 0; t < 4; ++t) {
                twin.m[t] = -v.m[t];
                twin.c[t] = v.c[t];
            }
            bool twin_present = false;
            for (const auto& w : r.vertices)
                if (w == twin) twin_present = true;
            CHECK(twin_present);
        }
        CHECK(cs.size() == 4);
    }
}

TEST_CASE("local bound holds on random mixtures") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> w(0, 9);
    const auto verts = deterministic_vertices();
    for (int trial = 0; trial < 100; ++trial) {
        RatVec weights(16, 0);
        Rational total = 0;
        for (auto& wi : weights) {
            wi = w(rng);
            total += wi;
        }
        if (total == 0) continue;
        CorrelatorPoint mix;
        for (int i = 0; i < 16; ++i)
            for (int t = 0; t < 4; ++t) {
                mix.m[t] += weights[i] / total * verts[i].point.m[t];
                mix.c[t] += weights[i] / total * verts[i].point.c[t];
            }
        for (const auto& f : chsh_facets()) CHECK(f.evaluate(mix) <= 2);
    }
}
