#pragma once

#include "bellkit/geom.hpp"
#include "bellkit/scenario.hpp"

#include <array>
#include <optional>
#include <vector>

namespace bellkit {

/// Local deterministic strategy: a fixed outcome value in {-1,+1} for each
/// party and setting. There are exactly 16 of them in the (2,2) scenario.
struct DeterministicStrategy {
    std::array<int, 2> alice{};  // values of A0, A1
    std::array<int, 2> bob{};    // values of B0, B1

    Behavior behavior() const;
    CorrelatorPoint correlators() const;
    bool operator==(const DeterministicStrategy&) const = default;
};

/// A deterministic vertex of the local polytope in all three guises.
struct LocalVertex {
    DeterministicStrategy strategy;
    Behavior behavior;
    CorrelatorPoint point;
};

/// Linear functional beta.(m, c) <= bound over correlator space.
struct BellFunctional {
    std::array<Rational, 4> beta_m{};
    std::array<Rational, 4> beta_c{};
    Rational bound;

    Rational evaluate(const CorrelatorPoint& p) const;
    RatVec as_vector() const;  // the 8 coefficients, m-part first
    bool operator==(const BellFunctional&) const = default;
};

/// Symmetry of the (2,2) scenario: optional input swap per party, an output
/// flip per (party, setting), and an optional party exchange, applied in
/// that order. Output flips are indexed by the setting after the input
/// swap: flip_output[0..1] are Alice's settings 0,1 and [2..3] Bob's.
/// These 128 maps form the relabeling group of the scenario.
struct Relabeling {
    bool swap_parties = false;
    bool swap_inputs_alice = false;
    bool swap_inputs_bob = false;
    std::array<bool, 4> flip_output{};

    CellRef apply_cell(int x, int y, int a, int b) const;
    bool operator==(const Relabeling&) const = default;
};

/// The 16 strategies in canonical order: lexicographic on the outcome
/// labels of (A0, A1, B0, B1), label 0 (value +1) first.
std::vector<DeterministicStrategy> deterministic_strategies();

/// Strategies with their behaviors and correlator points, same order.
std::vector<LocalVertex> deterministic_vertices();

/// The 16 deterministic correlator points as an 8-dimensional V-polytope,
/// coordinates ordered (m, c).
geom::VPolytope local_polytope_vertices();

/// The 4 correlation vertices c^s sharing extremal-marginal sign s, as a
/// polytope in the 4-dimensional c-space. s must be +1 or -1.
geom::VPolytope correlation_tetrahedron(int s);

/// The 8 tight correlation functionals f^s_ij (zero marginal part, bound 2).
/// Order: s = +1 then s = -1, (i, j) lexicographic within each sign.
std::vector<BellFunctional> chsh_facets();

/// The CHSH functional itself: c00 + c01 + c10 - c11 <= 2.
BellFunctional chsh_functional();

template <typename T>
T chsh_value(const BasicCorrelatorPoint<T>& p) {
    return p.c[0] + p.c[1] + p.c[2] - p.c[3];
}

/// The transformed behavior: probability mass moves cell-wise along the
/// relabeling map.
Behavior apply_relabeling(const Behavior& b, const Relabeling& g);

/// All 128 group elements in a fixed deterministic order.
const std::vector<Relabeling>& all_relabelings();

/// Group operations, realized through the (faithful) action on the 16
/// probability cells.
Relabeling compose(const Relabeling& g, const Relabeling& h);  // acts as g after h
Relabeling inverse(const Relabeling& g);

/// Induced signed-permutation action on correlator space, and the matching
/// contragredient action on functionals, so that
/// transform_functional(f, g).evaluate(transform_point(p, g)) = f.evaluate(p).
CorrelatorPoint transform_point(const CorrelatorPoint& p, const Relabeling& g);
BellFunctional transform_functional(const BellFunctional& f, const Relabeling& g);

/// Orbit minimum of the serialized functional; equal canonical forms mean
/// the functionals are the same inequality up to relabeling.
BellFunctional canonical_functional(const BellFunctional& f);

/// A group element carrying `from` onto `to`, if one exists.
std::optional<Relabeling> find_relabeling(const BellFunctional& from, const BellFunctional& to);

struct FacetVertexReport {
    long count = 0;
    std::vector<CorrelatorPoint> vertices;  // deterministic points saturating the bound
};

/// Deterministic vertices saturating f, with their count.
FacetVertexReport facet_vertex_count(const BellFunctional& f);

}  // namespace bellkit
