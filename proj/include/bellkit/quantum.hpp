#pragma once

#include "bellkit/fourier.hpp"
#include "bellkit/scenario.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace bellkit::quantum {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::MatrixXcd;
using Eigen::Vector3d;
using Eigen::VectorXcd;

/// Dichotomic projective qubit measurement along a unit Bloch vector n.
/// The observable is n.sigma with eigenvalues +/-1; outcome label l in
/// {0,1} carries the value (-1)^l, so the projector onto label l is
/// (I + (-1)^l n.sigma)/2.
struct QubitObservable {
    Vector3d bloch{0, 0, 1};

    Matrix2cd observable() const;
    Matrix2cd projector(int label) const;

    /// Unit Bloch norm within 1e-12.
    void validate() const;
};

/// Observable along the angle-theta direction of the x-z plane.
QubitObservable xz_observable(double theta);

using Settings = std::array<QubitObservable, 2>;

/// Two-qubit state with two dichotomic settings per party.
struct QuantumModel {
    Matrix4cd state = Matrix4cd::Identity() / 4.0;
    Settings alice{};
    Settings bob{};
};

/// Kronecker product of one-qubit operators, Alice's factor first.
Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b);

/// Throws std::domain_error naming the violated property (hermiticity
/// within 1e-12, positive semidefiniteness and unit trace within 1e-9).
void validate_state(const Matrix4cd& rho);

Matrix4cd singlet_state();
Matrix4cd maximally_mixed_state();

/// The model attaining the quantum CHSH maximum: state (|00>+|11>)/sqrt(2),
/// Alice measuring sz, sx, Bob (sz+sx)/sqrt(2) and (sz-sx)/sqrt(2).
QuantumModel tsirelson_model();

/// p(ab|xy) = Tr[rho (M_x^a x M_y^b)], float mode.
BehaviorF behavior_from_quantum(const QuantumModel& qm);

/// A0 x (B0 + B1) + A1 x (B0 - B1); Hermitian, spectrum in [-2sqrt2, 2sqrt2].
Matrix4cd chsh_operator(const Settings& alice, const Settings& bob);

/// B^{xy} = sum_ab (-1)^{a+b} M_x^a x M_y^b over outcome labels a, b;
/// its expectation on a state is the correlator E^{xy}.
Matrix4cd bell_operator(const Settings& alice, const Settings& bob, int x, int y);

/// W = 4 I - sum_xy q^{xy} B^{xy}, so that Tr(W rho) = 4 - <E|q>.
Matrix4cd witness(const Settings& alice, const Settings& bob,
                  const fourier::SignFunctional& q);

double witness_value(const Matrix4cd& w, const Matrix4cd& rho);

/// Reduced one-qubit state of a party (0 = Alice, 1 = Bob).
Matrix2cd partial_trace(const Matrix4cd& rho, int party);

struct EigenSystem {
    std::vector<double> values;      // ascending
    std::vector<VectorXcd> vectors;  // orthonormal, matching order
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix: rotate away one
/// off-diagonal entry at a time until the total off-diagonal mass falls
/// below 1e-12. Self-contained and ample for the 4x4 operators here.
EigenSystem jacobi_eigensystem(const MatrixXcd& m);

struct SeesawOptions {
    bool product_state = false;  // restrict the state to pure products
    bool full_bloch = false;     // allow observables out of the x-z plane
    int max_iterations = 500;
    double tolerance = 1e-10;
};

struct SeesawResult {
    double value = 0;
    QuantumModel model;
    int iterations = 0;            // accepted iterations of the winning restart
    std::vector<double> history;   // objective after each iteration, nondecreasing
};

/// Seesaw ascent of the CHSH value: alternately move the state to the top
/// eigenvector of the current CHSH operator and each observable to its
/// locally optimal Bloch direction. Monotone; restarted from a fixed grid
/// of 8 angle tuples, best result returned.
SeesawResult maximize_chsh(const SeesawOptions& opts = {});

}  // namespace bellkit::quantum
