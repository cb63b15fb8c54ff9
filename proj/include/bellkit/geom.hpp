#pragma once

#include "bellkit/rational.hpp"

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace bellkit::geom {

/// Vertex-form polytope: the convex hull of exact rational points.
struct VPolytope {
    int ambient_dim = 0;
    std::vector<RatVec> vertices;
};

/// normal . x <= bound
struct Inequality {
    RatVec normal;
    Rational bound;
    bool operator==(const Inequality&) const = default;
};

/// normal . x = value
struct Equality {
    RatVec normal;
    Rational value;
    bool operator==(const Equality&) const = default;
};

/// Inequality-form polytope. The equalities carry the affine hull explicitly;
/// inequality normals are primitive integer vectors, sorted lexicographically.
struct HPolytope {
    int ambient_dim = 0;
    std::vector<Inequality> ineqs;
    std::vector<Equality> eqs;
};

/// Convex weights over the polytope's vertex list reproducing the point.
struct InsideWitness {
    RatVec weights;
};

/// normal . v <= bound for every vertex v, while normal . point > bound.
struct SeparatingHyperplane {
    RatVec normal;
    Rational bound;
};

using MembershipResult = std::variant<InsideWitness, SeparatingHyperplane>;

inline bool is_inside(const MembershipResult& r) {
    return std::holds_alternative<InsideWitness>(r);
}

/// Thrown by vertex_enumeration on an unbounded input; carries a primitive
/// recession direction as the certificate.
class UnboundedPolytopeError : public std::runtime_error {
  public:
    explicit UnboundedPolytopeError(RatVec ray)
        : std::runtime_error("vertex_enumeration: polytope is unbounded"), ray_(std::move(ray)) {}
    const RatVec& ray() const { return ray_; }

  private:
    RatVec ray_;
};

/// Decides point membership in conv(vertices) by exact LP. Inside points get
/// the most balanced convex-weight witness (max weight minimized); outside
/// points get a maximum-violation separating hyperplane in primitive form.
/// Both certificates are re-verified by substitution before returning.
MembershipResult membership(const RatVec& point, const VPolytope& polytope);

/// Converts vertex form to the irredundant inequality form by the double
/// description method run on the polar side. Output is canonical: primitive
/// normals, lexicographic order, affine hull carried as equalities.
HPolytope facet_enumeration(const VPolytope& polytope);

/// Converts inequality form to vertex form (double description on the
/// homogenization). Boundedness is established first by maximizing every
/// +/- coordinate; failures raise UnboundedPolytopeError with the LP ray.
VPolytope vertex_enumeration(const HPolytope& polytope);

/// Dimension of the affine hull of the vertex set (rank of differences).
/// The empty set has dimension -1 by convention.
long affine_dimension(const VPolytope& polytope);

/// Sorted, duplicate-free copy (the canonical vertex order).
VPolytope canonical(const VPolytope& polytope);

/// Set equality of vertex lists after canonical reduction.
bool same_vertex_set(const VPolytope& a, const VPolytope& b);

/// Exact row rank; shared by the geometry routines and the tests.
long rank(RatMat matrix);

}  // namespace bellkit::geom
