#include "bellkit/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bellkit::quantum {

namespace {

using namespace std::complex_literals;

const Matrix2cd kSigmaX = (Matrix2cd() << 0, 1, 1, 0).finished();
const Matrix2cd kSigmaY = (Matrix2cd() << 0, -1i, 1i, 0).finished();
const Matrix2cd kSigmaZ = (Matrix2cd() << 1, 0, 0, -1).finished();

Matrix2cd pauli_dot(const Vector3d& n) {
    return n.x() * kSigmaX + n.y() * kSigmaY + n.z() * kSigmaZ;
}

double off_diagonal_mass(const MatrixXcd& a) {
    double acc = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) acc += std::norm(a(i, j));
    return std::sqrt(acc);
}

double hermiticity_defect(const MatrixXcd& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

Matrix2cd QubitObservable::observable() const { return pauli_dot(bloch); }

Matrix2cd QubitObservable::projector(int label) const {
    if (label != 0 && label != 1)
        throw std::invalid_argument("projector: outcome label must be 0 or 1");
    const double value = label == 0 ? 1.0 : -1.0;
    return (Matrix2cd::Identity() + value * observable()) / 2.0;
}

void QubitObservable::validate() const {
    if (std::abs(bloch.norm() - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "observable: Bloch vector norm " << bloch.norm() << " is not 1";
        throw std::domain_error(msg.str());
    }
}

QubitObservable xz_observable(double theta) {
    QubitObservable o;
    o.bloch = Vector3d(std::sin(theta), 0.0, std::cos(theta));
    return o;
}

Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b) {
    Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

void validate_state(const Matrix4cd& rho) {
    const double defect = hermiticity_defect(rho);
    if (defect > 1e-12) {
        std::ostringstream msg;
        msg << "state: not Hermitian (max entry deviation " << defect << ")";
        throw std::domain_error(msg.str());
    }
    const double trace = rho.trace().real();
    if (std::abs(trace - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "state: trace is " << trace << ", not 1";
        throw std::domain_error(msg.str());
    }
    const EigenSystem eig = jacobi_eigensystem(rho);
    if (eig.values.front() < -1e-9) {
        std::ostringstream msg;
        msg << "state: not positive semidefinite (eigenvalue " << eig.values.front() << ")";
        throw std::domain_error(msg.str());
    }
}

Matrix4cd singlet_state() {
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    psi(1) = 1.0 / std::sqrt(2.0);
    psi(2) = -1.0 / std::sqrt(2.0);
    return psi * psi.adjoint();
}

Matrix4cd maximally_mixed_state() { return Matrix4cd::Identity() / 4.0; }

QuantumModel tsirelson_model() {
    QuantumModel qm;
    Eigen::Vector4cd phi = Eigen::Vector4cd::Zero();
    phi(0) = 1.0 / std::sqrt(2.0);
    phi(3) = 1.0 / std::sqrt(2.0);
    qm.state = phi * phi.adjoint();
    qm.alice = {xz_observable(0.0), xz_observable(M_PI / 2)};
    qm.bob = {xz_observable(M_PI / 4), xz_observable(-M_PI / 4)};
    return qm;
}

BehaviorF behavior_from_quantum(const QuantumModel& qm) {
    validate_state(qm.state);
    for (const auto& o : qm.alice) o.validate();
    for (const auto& o : qm.bob) o.validate();

    BehaviorF out;
    out.scenario = two_two_scenario();
    out.probs.assign(16, 0.0);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const Matrix4cd effect = kron(qm.alice[x].projector(a), qm.bob[y].projector(b));
                    out.probs[out.scenario.index(x, y, a, b)] = (qm.state * effect).trace().real();
                }
    return out;
}

Matrix4cd chsh_operator(const Settings& alice, const Settings& bob) {
    for (const auto& o : alice) o.validate();
    for (const auto& o : bob) o.validate();
    const Matrix2cd b0 = bob[0].observable(), b1 = bob[1].observable();
    return kron(alice[0].observable(), b0 + b1) + kron(alice[1].observable(), b0 - b1);
}

Matrix4cd bell_operator(const Settings& alice, const Settings& bob, int x, int y) {
    if (x < 0 || x > 1 || y < 0 || y > 1)
        throw std::invalid_argument("bell_operator: settings x, y must be 0 or 1");
    // phase (-1)^{a+b} on outcome labels; since the label-l projector
    // carries value (-1)^l, the sum telescopes to A_x tensor B_y
    Matrix4cd out = Matrix4cd::Zero();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const double phase = ((a + b) % 2) ? -1.0 : 1.0;
            out += phase * kron(alice[x].projector(a), bob[y].projector(b));
        }
    return out;
}

Matrix4cd witness(const Settings& alice, const Settings& bob,
                  const fourier::SignFunctional& q) {
    Matrix4cd out = 4.0 * Matrix4cd::Identity();
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            out -= double(q.q[x][y]) * bell_operator(alice, bob, x, y);
    return out;
}

double witness_value(const Matrix4cd& w, const Matrix4cd& rho) {
    return (w * rho).trace().real();
}

Matrix2cd partial_trace(const Matrix4cd& rho, int party) {
    if (party != 0 && party != 1)
        throw std::invalid_argument("partial_trace: party must be 0 (Alice) or 1 (Bob)");
    Matrix2cd out = Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int t = 0; t < 2; ++t)
                if (party == 0)
                    out(i, k) += rho(2 * i + t, 2 * k + t);
                else
                    out(i, k) += rho(2 * t + i, 2 * t + k);
    return out;
}

EigenSystem jacobi_eigensystem(const MatrixXcd& m) {
    const auto n = m.rows();
    if (n == 0 || n != m.cols())
        throw std::invalid_argument("jacobi_eigensystem: matrix must be square and nonempty");
    if (hermiticity_defect(m) > 1e-12)
        throw std::invalid_argument("jacobi_eigensystem: matrix is not Hermitian");

    MatrixXcd a = (m + m.adjoint()) / 2.0;
    MatrixXcd v = MatrixXcd::Identity(n, n);

    for (int sweep = 0; sweep < 100 && off_diagonal_mass(a) > 1e-12; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const std::complex<double> beta = a(p, q);
                const double babs = std::abs(beta);
                if (babs < 1e-300) continue;
                const double alpha = a(p, p).real();
                const double gamma = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * babs, alpha - gamma);
                const double c = std::cos(theta), s = std::sin(theta);
                const std::complex<double> phase = beta / babs;

                MatrixXcd u = MatrixXcd::Identity(n, n);
                u(p, p) = c;
                u(p, q) = -s * phase;
                u(q, p) = s * std::conj(phase);
                u(q, q) = c;
                a = u.adjoint() * a * u;
                v = v * u;
            }
    }

    EigenSystem out;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
    for (int i : order) {
        out.values.push_back(a(i, i).real());
        out.vectors.push_back(v.col(i));
    }
    return out;
}

namespace {

/// Best Bloch direction for one observable given the fixed 2x2 "partner"
/// operator it multiplies inside Tr[rho (A x D)] or Tr[rho (E x B)].
/// Degenerate objectives keep the previous direction.
Vector3d best_direction(const Matrix4cd& rho, const Matrix2cd& partner, bool alice_side,
                        bool full_bloch, const Vector3d& previous) {
    const std::array<const Matrix2cd*, 3> paulis = {&kSigmaX, &kSigmaY, &kSigmaZ};
    Vector3d t;
    for (int k = 0; k < 3; ++k) {
        const Matrix4cd op =
            alice_side ? kron(*paulis[k], partner) : kron(partner, *paulis[k]);
        t(k) = (rho * op).trace().real();
    }
    if (!full_bloch) t(1) = 0.0;
    if (t.norm() < 1e-14) return previous;
    return t / t.norm();
}

/// One round of the pure-product inner alternation: top eigenvector of the
/// conditional 2x2 operators K_u = (I x <v|) C (I x |v>) and its mirror.
double product_state_ascent(const Matrix4cd& c, Eigen::Vector2cd& u, Eigen::Vector2cd& v) {
    double value = 0;
    for (int round = 0; round < 50; ++round) {
        Matrix2cd ku = Matrix2cd::Zero();
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                for (int j = 0; j < 2; ++j)
                    for (int l = 0; l < 2; ++l)
                        ku(i, k) += std::conj(v(j)) * c(2 * i + j, 2 * k + l) * v(l);
        const EigenSystem eu = jacobi_eigensystem(ku);
        u = eu.vectors.back().head<2>();

        Matrix2cd kv = Matrix2cd::Zero();
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l)
                for (int i = 0; i < 2; ++i)
                    for (int k = 0; k < 2; ++k)
                        kv(j, l) += std::conj(u(i)) * c(2 * i + j, 2 * k + l) * u(k);
        const EigenSystem ev = jacobi_eigensystem(kv);
        v = ev.vectors.back().head<2>();

        const double next = ev.values.back();
        if (next - value < 1e-12 && round > 0) return next;
        value = next;
    }
    return value;
}

constexpr std::array<std::array<double, 4>, 8> kSeesawStarts = {{
    {0.0, M_PI / 2, M_PI / 4, -M_PI / 4},  // the known optimal geometry
    {0.0, M_PI / 2, 0.0, M_PI / 2},
    {0.0, M_PI, M_PI / 2, 3 * M_PI / 2},
    {0.3, 1.9, 0.7, 2.6},
    {1.1, 2.3, 0.4, 5.1},
    {M_PI / 3, 2 * M_PI / 3, M_PI / 6, 5 * M_PI / 6},
    {0.0, 0.0, 0.0, 0.0},  // fully degenerate settings
    {2.0, 4.0, 1.0, 3.0},
}};

}  // namespace

SeesawResult maximize_chsh(const SeesawOptions& opts) {
    SeesawResult best;
    best.value = -1e300;

    for (const auto& start : kSeesawStarts) {
        QuantumModel qm;
        qm.alice = {xz_observable(start[0]), xz_observable(start[1])};
        qm.bob = {xz_observable(start[2]), xz_observable(start[3])};
        qm.state = maximally_mixed_state();
        Eigen::Vector2cd u = Eigen::Vector2cd::Unit(0), v = Eigen::Vector2cd::Unit(0);

        double value = -1e300;
        int iterations = 0;
        std::vector<double> history;
        for (int iter = 1; iter <= opts.max_iterations; ++iter) {
            const Matrix4cd c = chsh_operator(qm.alice, qm.bob);
            double next;
            if (opts.product_state) {
                next = product_state_ascent(c, u, v);
                Eigen::Vector4cd psi;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) psi(2 * i + j) = u(i) * v(j);
                qm.state = psi * psi.adjoint();
            } else {
                const EigenSystem eig = jacobi_eigensystem(c);
                const VectorXcd& psi = eig.vectors.back();
                qm.state = psi * psi.adjoint();
                next = eig.values.back();
            }
            iterations = iter;
            history.push_back(next);
            if (next - value < opts.tolerance) {
                value = next;
                break;
            }
            value = next;

            // move every observable to its locally best direction
            const Matrix2cd b0 = qm.bob[0].observable(), b1 = qm.bob[1].observable();
            qm.alice[0].bloch = best_direction(qm.state, b0 + b1, true, opts.full_bloch,
                                               qm.alice[0].bloch);
            qm.alice[1].bloch = best_direction(qm.state, b0 - b1, true, opts.full_bloch,
                                               qm.alice[1].bloch);
            const Matrix2cd a0 = qm.alice[0].observable(), a1 = qm.alice[1].observable();
            qm.bob[0].bloch = best_direction(qm.state, a0 + a1, false, opts.full_bloch,
                                             qm.bob[0].bloch);
            qm.bob[1].bloch = best_direction(qm.state, a0 - a1, false, opts.full_bloch,
                                             qm.bob[1].bloch);
        }

        if (value > best.value) {
            best.value = value;
            best.model = qm;
            best.iterations = iterations;
            best.history = std::move(history);
        }
    }
    return best;
}

}  // namespace bellkit::quantum
