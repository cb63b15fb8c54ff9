#pragma once

#include "bellkit/rational.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellkit {

// Outcome convention used throughout: internal outcome labels live in
// {0, 1, ..., d-1}; for dichotomic measurements label l carries the
// physical value (-1)^l, so label 0 <-> +1 and label 1 <-> -1.
inline int outcome_value(int label) { return label == 0 ? +1 : -1; }

/// A measurement scenario: settings and outcomes per party.
struct Scenario {
    int alice_settings = 2;
    int bob_settings = 2;
    int alice_outcomes = 2;
    int bob_outcomes = 2;

    void validate() const {
        if (alice_settings < 1 || bob_settings < 1 || alice_outcomes < 1 || bob_outcomes < 1)
            throw std::invalid_argument("scenario: all four counts must be >= 1");
    }

    bool is_two_two() const {
        return alice_settings == 2 && bob_settings == 2 && alice_outcomes == 2 && bob_outcomes == 2;
    }

    std::size_t cell_count() const {
        return static_cast<std::size_t>(alice_settings) * bob_settings * alice_outcomes * bob_outcomes;
    }

    // Flat layout ((x*mB + y)*dA + a)*dB + b; every serialization uses it.
    std::size_t index(int x, int y, int a, int b) const {
        return ((static_cast<std::size_t>(x) * bob_settings + y) * alice_outcomes + a) * bob_outcomes + b;
    }

    bool operator==(const Scenario&) const = default;
};

inline Scenario two_two_scenario() { return Scenario{2, 2, 2, 2}; }

/// Dimension of the no-signaling affine subspace for a scenario.
inline long ns_dimension(const Scenario& s) {
    s.validate();
    const long mA = s.alice_settings, mB = s.bob_settings;
    const long dA = s.alice_outcomes, dB = s.bob_outcomes;
    return (dA - 1) * mA + (dB - 1) * mB + (dA - 1) * (dB - 1) * mA * mB;
}

struct CellRef {
    int x, y, a, b;
};

/// Thrown when a probability table (given directly or reconstructed from
/// a correlator point) has an out-of-range entry; carries the first
/// offending cell.
class NotABehaviorError : public std::domain_error {
  public:
    NotABehaviorError(const CellRef& cell, const std::string& what)
        : std::domain_error(what), cell_(cell) {}
    const CellRef& cell() const { return cell_; }

  private:
    CellRef cell_;
};

namespace detail {
inline bool leq(const Rational& a, const Rational& b, const Rational&) { return a <= b; }
inline bool leq(double a, double b, double tol) { return a <= b + tol; }
inline bool close(const Rational& a, const Rational& b, const Rational& tol) {
    return boost::multiprecision::abs(a - b) <= tol;
}
inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }
}  // namespace detail

/// A conditional probability table p(ab|xy) over a scenario.
/// T is Rational (exact mode) or double (float mode).
template <typename T>
struct BasicBehavior {
    Scenario scenario;
    std::vector<T> probs;

    const T& at(int x, int y, int a, int b) const { return probs[scenario.index(x, y, a, b)]; }
    T& at(int x, int y, int a, int b) { return probs[scenario.index(x, y, a, b)]; }

    /// Entries in [0,1] (within tol) and unit sum per setting pair.
    void validate(T tol = T(0)) const {
        scenario.validate();
        if (probs.size() != scenario.cell_count())
            throw std::invalid_argument("behavior: probability table has wrong length");
        for (int x = 0; x < scenario.alice_settings; ++x)
            for (int y = 0; y < scenario.bob_settings; ++y)
                for (int a = 0; a < scenario.alice_outcomes; ++a)
                    for (int b = 0; b < scenario.bob_outcomes; ++b) {
                        const T& p = at(x, y, a, b);
                        if (!detail::leq(T(0), p, tol) || !detail::leq(p, T(1), tol))
                            throw NotABehaviorError({x, y, a, b},
                                                    "behavior: probability outside [0, 1]");
                    }
        for (int x = 0; x < scenario.alice_settings; ++x)
            for (int y = 0; y < scenario.bob_settings; ++y) {
                T sum = T(0);
                for (int a = 0; a < scenario.alice_outcomes; ++a)
                    for (int b = 0; b < scenario.bob_outcomes; ++b) sum += at(x, y, a, b);
                if (!detail::close(sum, T(1), tol))
                    throw std::domain_error("behavior: probabilities do not sum to 1 for a setting pair");
            }
    }

    bool operator==(const BasicBehavior&) const = default;
};

using Behavior = BasicBehavior<Rational>;
using BehaviorF = BasicBehavior<double>;

/// Marginal and joint correlators of a (2,2) behavior:
/// m = (<A0>, <A1>, <B0>, <B1>), c = (<A0B0>, <A0B1>, <A1B0>, <A1B1>).
template <typename T>
struct BasicCorrelatorPoint {
    std::array<T, 4> m{};
    std::array<T, 4> c{};

    bool operator==(const BasicCorrelatorPoint&) const = default;
};

using CorrelatorPoint = BasicCorrelatorPoint<Rational>;
using CorrelatorPointF = BasicCorrelatorPoint<double>;

/// Flattened (m, c) coordinates in R^8, m-part first.
inline RatVec as_vector(const CorrelatorPoint& p) {
    RatVec v(p.m.begin(), p.m.end());
    v.insert(v.end(), p.c.begin(), p.c.end());
    return v;
}

inline CorrelatorPoint correlators_from_vector(const RatVec& v) {
    if (v.size() != 8) throw std::invalid_argument("correlator vector must have 8 entries");
    CorrelatorPoint p;
    for (int i = 0; i < 4; ++i) {
        p.m[i] = v[i];
        p.c[i] = v[4 + i];
    }
    return p;
}

inline constexpr double kFloatTol = 1e-9;

/// True iff both marginal-consistency families hold within tol
/// (Alice's marginals independent of y, Bob's of x).
template <typename T>
bool is_no_signaling(const BasicBehavior<T>& b, T tol = T(0));

/// Correlator coordinates of a no-signaling (2,2) behavior.
/// Throws std::domain_error on signaling input (marginals ambiguous).
template <typename T>
BasicCorrelatorPoint<T> to_correlators(const BasicBehavior<T>& b, T tol = T(0));

/// Reconstructs the (2,2) behavior p(ab|xy) = (1 + a<Ax> + b<By> + ab<AxBy>)/4.
/// Throws NotABehaviorError if some entry comes out negative (within tol).
template <typename T>
BasicBehavior<T> from_correlators(const BasicCorrelatorPoint<T>& p, T tol = T(0));

/// Uniform behavior p == 1/(dA*dB) for every setting pair.
Behavior uniform_behavior(const Scenario& s = two_two_scenario());

/// Exact-to-float conversion. (The reverse direction is deliberately absent.)
BehaviorF to_float(const Behavior& b);
CorrelatorPointF to_float(const BasicCorrelatorPoint<Rational>& p);

extern template bool is_no_signaling<Rational>(const Behavior&, Rational);
extern template bool is_no_signaling<double>(const BehaviorF&, double);
extern template CorrelatorPoint to_correlators<Rational>(const Behavior&, Rational);
extern template CorrelatorPointF to_correlators<double>(const BehaviorF&, double);
extern template Behavior from_correlators<Rational>(const CorrelatorPoint&, Rational);
extern template BehaviorF from_correlators<double>(const CorrelatorPointF&, double);

}  // namespace bellkit
