#pragma once

#include "bellkit/scenario.hpp"

#include <array>

namespace bellkit::fourier {

/// Two-point correlation matrix E[x][y], rows indexed by Alice's setting.
template <typename T>
struct BasicEMatrix {
    std::array<std::array<T, 2>, 2> e{};

    bool operator==(const BasicEMatrix&) const = default;
};

using EMatrix = BasicEMatrix<Rational>;
using EMatrixF = BasicEMatrix<double>;

/// Rank-1 sign functional q^{m1 m2}[x][y] = (-1)^{m1 x + m2 y}, the outer
/// product of the two deliberately unnormalized conjugate-basis vectors
/// (1, (-1)^{m1}) and (1, (-1)^{m2}).
struct SignFunctional {
    int m1 = 0;
    int m2 = 0;
    std::array<std::array<int, 2>, 2> q{};

    bool operator==(const SignFunctional&) const = default;
};

/// Convex weights over the 16 deterministic sign tuples (l1,l2,l3,l4),
/// flat index ((l1*2 + l2)*2 + l3)*2 + l4.
struct DeterministicWeights {
    std::array<Rational, 16> p{};

    /// Nonnegative entries summing to 1.
    void validate() const;
};

/// Fourier component of the outcome distribution at fixed settings:
/// phi(r1 r2|xy) = sum_ab phase^(a r1 + b r2) p(ab|xy) over outcome labels,
/// where phase is the primitive d-th root of unity. Only d = 2 is
/// supported, which makes the phase (-1) and the value real.
template <typename T>
T characteristic_function(const BasicBehavior<T>& b, int r1, int r2, int x, int y, int d = 2);

/// E[x][y] = p(00|xy) - p(01|xy) - p(10|xy) + p(11|xy) = phi(11|xy).
template <typename T>
BasicEMatrix<T> e_matrix(const BasicBehavior<T>& b);

/// Deterministic strategy E-matrix: the outer product of the per-party
/// sign vectors ((-1)^{l1}, (-1)^{l2}) and ((-1)^{l3}, (-1)^{l4}).
EMatrix deterministic_e(int l1, int l2, int l3, int l4);

/// Convex mixture of deterministic E-matrices.
EMatrix mix_e(const DeterministicWeights& w);

SignFunctional q_functional(int m1, int m2);

/// Real Hilbert-Schmidt pairing sum_xy E[x][y] q[x][y].
template <typename T>
T hs_inner(const BasicEMatrix<T>& E, const SignFunctional& q) {
    T acc = T(0);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) acc += E.e[x][y] * T(q.q[x][y]);
    return acc;
}

extern template Rational characteristic_function<Rational>(const Behavior&, int, int, int, int, int);
extern template double characteristic_function<double>(const BehaviorF&, int, int, int, int, int);
extern template EMatrix e_matrix<Rational>(const Behavior&);
extern template EMatrixF e_matrix<double>(const BehaviorF&);

}  // namespace bellkit::fourier
