// measurement.hpp — Qubit pure states, two-outcome non-selective measurement
// schemes (Omega operators, effects, Gram operator) and the scheme
// coefficients entering the correlation dynamics.

#pragma once

#include "qdeph/bath.hpp"

#include <array>
#include <complex>

namespace qdeph::measurement {

using cplx = std::complex<double>;

struct EulerAngles {
    double theta = 0.0; // polar angle in [0, pi]
    double phi = 0.0;   // azimuth, stored normalized into [0, 2pi)
};

// Validates theta and returns a copy with phi reduced into [0, 2pi).
EulerAngles normalized(EulerAngles a);

// Column vector (amp_up, amp_down) in the basis |1> = (1,0)^T, |0> = (0,1)^T.
struct PureState {
    cplx amp_up;   // coefficient of |1>
    cplx amp_down; // coefficient of |0>
};

// 2x2 complex matrix in the same basis; row/col 0 <-> |1>, row/col 1 <-> |0>.
struct Operator2x2 {
    std::array<cplx, 4> m{}; // row-major

    cplx& operator()(int r, int c) { return m[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return m[2 * r + c]; }

    Operator2x2 adjoint() const;
    Operator2x2 operator*(const Operator2x2& o) const;
    Operator2x2 operator+(const Operator2x2& o) const;
    Operator2x2 operator-(const Operator2x2& o) const;
    cplx trace() const { return m[0] + m[3]; }
    double max_abs() const;

    static Operator2x2 identity();
    static Operator2x2 outer(const PureState& ket, const PureState& bra); // |ket><bra|
};

// Scheme built on three Bloch directions: Omega_1 = |b1><a|, Omega_2 = |b2><-a|.
struct MeasurementScheme {
    EulerAngles a;
    EulerAngles b1;
    EulerAngles b2;

    // case i): b1 = a, b2 = -a (projective, non-disturbing)
    static MeasurementScheme projective(EulerAngles a);
    // case ii): b1 = b, b2 = -b for an arbitrary direction b
    static MeasurementScheme rotated(EulerAngles a, EulerAngles b);
};

struct CorrelationCoefficients {
    double n1 = 0.0;
    double n2 = 0.0;
    double d = 0.0;
    double a_ratio = 0.0; // N1/D = Re A of the correlation factor; coth(w0/2T) for diagonal Gram
};

struct SchemeObservables {
    cplx sigma_plus_0;             // <sigma_+> at t = 0
    double sigma3_0 = 0.0;         // <sigma_3> at t = 0
    std::array<double, 2> probabilities{}; // outcome probabilities, sum to 1
};

// |a> = (e^{i phi/2} sin(theta/2), e^{-i phi/2} cos(theta/2))^T
PureState state_from_angles(EulerAngles angles);

// |-a>, orthogonal to |a>, with the fixed phase convention
// (i e^{i phi/2} cos(theta/2), -i e^{-i phi/2} sin(theta/2))^T.
PureState orthogonal_state(EulerAngles angles);

std::array<Operator2x2, 2> omega_operators(const MeasurementScheme& scheme);

// G = |b1><b1| + |b2><b2|; Hermitian, PSD, trace 2.
Operator2x2 gram_operator(const MeasurementScheme& scheme);

bool is_gram_diagonal(const MeasurementScheme& scheme, double tol = 1e-10);

// N1, N2, D of the correlation factor for <sigma_+>; requires T > 0.
// Throws qdeph::degenerate_scheme_error when D <= 1e-12 (the initial
// coherence vanishes and the correlation factor is undefined).
CorrelationCoefficients nnd_coefficients(const MeasurementScheme& scheme,
                                         const bath::QubitParams& qubit, double temperature);

SchemeObservables initial_observables(const MeasurementScheme& scheme,
                                      const bath::QubitParams& qubit, double temperature);

// Checks || U1 |psi1><psi1| U1^+  -  U2 |psi1><psi1| U2^+  -  (G - I) ||_max <= tol.
// Throws qdeph::domain_error if u1 or u2 is not unitary within tol.
bool verify_udiag_relation(const Operator2x2& u1, const Operator2x2& u2,
                           const PureState& psi1, const Operator2x2& g, double tol = 1e-10);

} // namespace qdeph::measurement
