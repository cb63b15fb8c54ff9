#include "bellkit/fourier.hpp"

#include <stdexcept>

namespace bellkit::fourier {

namespace {

int check_bit(int v, const char* name) {
    if (v != 0 && v != 1) throw std::invalid_argument(std::string(name) + " must be 0 or 1");
    return v;
}

int sign_of(int bit) { return bit ? -1 : 1; }

}  // namespace

void DeterministicWeights::validate() const {
    Rational sum = 0;
    for (const auto& w : p) {
        if (w < 0) throw std::domain_error("deterministic weights must be nonnegative");
        sum += w;
    }
    if (sum != 1) throw std::domain_error("deterministic weights must sum to 1");
}

template <typename T>
T characteristic_function(const BasicBehavior<T>& b, int r1, int r2, int x, int y, int d) {
    if (d != 2) throw std::invalid_argument("characteristic_function: only d = 2 is supported");
    if (!b.scenario.is_two_two())
        throw std::invalid_argument("characteristic_function: (2,2) scenario required");
    check_bit(r1, "r1");
    check_bit(r2, "r2");
    T acc = T(0);
    for (int a = 0; a < 2; ++a)
        for (int bb = 0; bb < 2; ++bb) {
            const int phase = ((a * r1 + bb * r2) % 2) ? -1 : 1;
            acc += T(phase) * b.at(x, y, a, bb);
        }
    return acc;
}

template <typename T>
BasicEMatrix<T> e_matrix(const BasicBehavior<T>& b) {
    BasicEMatrix<T> out;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) out.e[x][y] = characteristic_function(b, 1, 1, x, y);
    return out;
}

EMatrix deterministic_e(int l1, int l2, int l3, int l4) {
    const int alice[2] = {sign_of(check_bit(l1, "l1")), sign_of(check_bit(l2, "l2"))};
    const int bob[2] = {sign_of(check_bit(l3, "l3")), sign_of(check_bit(l4, "l4"))};
    EMatrix out;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) out.e[x][y] = alice[x] * bob[y];
    return out;
}

EMatrix mix_e(const DeterministicWeights& w) {
    w.validate();
    EMatrix out;
    for (int l = 0; l < 16; ++l) {
        const EMatrix d = deterministic_e((l >> 3) & 1, (l >> 2) & 1, (l >> 1) & 1, l & 1);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) out.e[x][y] += w.p[l] * d.e[x][y];
    }
    return out;
}

SignFunctional q_functional(int m1, int m2) {
    SignFunctional out;
    out.m1 = check_bit(m1, "m1");
    out.m2 = check_bit(m2, "m2");
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) out.q[x][y] = ((m1 * x + m2 * y) % 2) ? -1 : 1;
    return out;
}

template Rational characteristic_function<Rational>(const Behavior&, int, int, int, int, int);
template double characteristic_function<double>(const BehaviorF&, int, int, int, int, int);
template EMatrix e_matrix<Rational>(const Behavior&);
template EMatrixF e_matrix<double>(const BehaviorF&);

}  // namespace bellkit::fourier
