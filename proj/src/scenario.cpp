#include "bellkit/scenario.hpp"

namespace bellkit {

template <typename T>
bool is_no_signaling(const BasicBehavior<T>& b, T tol) {
    b.validate(tol);
    const Scenario& s = b.scenario;
    // Alice's marginal p(a|x) must not depend on y.
    for (int x = 0; x < s.alice_settings; ++x)
        for (int a = 0; a < s.alice_outcomes; ++a) {
            T ref = T(0);
            for (int bb = 0; bb < s.bob_outcomes; ++bb) ref += b.at(x, 0, a, bb);
            for (int y = 1; y < s.bob_settings; ++y) {
                T sum = T(0);
                for (int bb = 0; bb < s.bob_outcomes; ++bb) sum += b.at(x, y, a, bb);
                if (!detail::close(sum, ref, tol)) return false;
            }
        }
    // Bob's marginal p(b|y) must not depend on x.
    for (int y = 0; y < s.bob_settings; ++y)
        for (int bb = 0; bb < s.bob_outcomes; ++bb) {
            T ref = T(0);
            for (int a = 0; a < s.alice_outcomes; ++a) ref += b.at(0, y, a, bb);
            for (int x = 1; x < s.alice_settings; ++x) {
                T sum = T(0);
                for (int a = 0; a < s.alice_outcomes; ++a) sum += b.at(x, y, a, bb);
                if (!detail::close(sum, ref, tol)) return false;
            }
        }
    return true;
}

template <typename T>
BasicCorrelatorPoint<T> to_correlators(const BasicBehavior<T>& b, T tol) {
    if (!b.scenario.is_two_two())
        throw std::invalid_argument("to_correlators: requires the (2,2) scenario");
    if (!is_no_signaling(b, tol))
        throw std::domain_error("to_correlators: signaling behavior, marginals are ambiguous");

    BasicCorrelatorPoint<T> p;
    for (int x = 0; x < 2; ++x) {
        T v = T(0);  // <Ax>, marginal taken at y = 0 (y-independent by no-signaling)
        for (int a = 0; a < 2; ++a)
            for (int bb = 0; bb < 2; ++bb) v += T(outcome_value(a)) * b.at(x, 0, a, bb);
        p.m[x] = v;
    }
    for (int y = 0; y < 2; ++y) {
        T v = T(0);
        for (int a = 0; a < 2; ++a)
            for (int bb = 0; bb < 2; ++bb) v += T(outcome_value(bb)) * b.at(0, y, a, bb);
        p.m[2 + y] = v;
    }
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            T v = T(0);
            for (int a = 0; a < 2; ++a)
                for (int bb = 0; bb < 2; ++bb)
                    v += T(outcome_value(a) * outcome_value(bb)) * b.at(x, y, a, bb);
            p.c[2 * x + y] = v;
        }
    return p;
}

template <typename T>
BasicBehavior<T> from_correlators(const BasicCorrelatorPoint<T>& p, T tol) {
    BasicBehavior<T> b{two_two_scenario(), std::vector<T>(16, T(0))};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int bb = 0; bb < 2; ++bb) {
                    const T av = T(outcome_value(a));
                    const T bv = T(outcome_value(bb));
                    const T val =
                        (T(1) + av * p.m[x] + bv * p.m[2 + y] + av * bv * p.c[2 * x + y]) / T(4);
                    if (!detail::leq(T(0), val, tol))
                        throw NotABehaviorError(
                            CellRef{x, y, a, bb},
                            "from_correlators: negative probability at cell (a=" +
                                std::to_string(outcome_value(a)) + ", b=" +
                                std::to_string(outcome_value(bb)) + ", x=" + std::to_string(x) +
                                ", y=" + std::to_string(y) + ")");
                    b.at(x, y, a, bb) = val;
                }
    return b;
}

Behavior uniform_behavior(const Scenario& s) {
    s.validate();
    const Rational v = Rational(1) / Rational(s.alice_outcomes * s.bob_outcomes);
    return Behavior{s, RatVec(s.cell_count(), v)};
}

BehaviorF to_float(const Behavior& b) {
    BehaviorF out{b.scenario, {}};
    out.probs.reserve(b.probs.size());
    for (const auto& p : b.probs) out.probs.push_back(p.convert_to<double>());
    return out;
}

CorrelatorPointF to_float(const BasicCorrelatorPoint<Rational>& p) {
    CorrelatorPointF out;
    for (int i = 0; i < 4; ++i) {
        out.m[i] = p.m[i].convert_to<double>();
        out.c[i] = p.c[i].convert_to<double>();
    }
    return out;
}

template bool is_no_signaling<Rational>(const Behavior&, Rational);
template bool is_no_signaling<double>(const BehaviorF&, double);
template CorrelatorPoint to_correlators<Rational>(const Behavior&, Rational);
template CorrelatorPointF to_correlators<double>(const BehaviorF&, double);
template Behavior from_correlators<Rational>(const CorrelatorPoint&, Rational);
template BehaviorF from_correlators<double>(const CorrelatorPointF&, double);

}  // namespace bellkit
