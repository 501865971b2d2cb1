#include "qdeph/measurement.hpp"
#include "qdeph/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qdeph::measurement {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_temperature(double T) {
    if (!(T > 0.0))
        throw domain_error("measurement: temperature must be > 0 here, got " +
                           std::to_string(T));
}
} // namespace

EulerAngles normalized(EulerAngles a) {
    if (!(a.theta >= 0.0 && a.theta <= kPi))
        throw domain_error("EulerAngles: theta must lie in [0, pi], got " +
                           std::to_string(a.theta));
    double p = std::fmod(a.phi, kTwoPi);
    if (p < 0.0)
        p += kTwoPi;
    if (p >= kTwoPi) // fmod rounding at the boundary
        p = 0.0;
    return {a.theta, p};
}

Operator2x2 Operator2x2::adjoint() const {
    Operator2x2 r;
    r.m[0] = std::conj(m[0]);
    r.m[1] = std::conj(m[2]);
    r.m[2] = std::conj(m[1]);
    r.m[3] = std::conj(m[3]);
    return r;
}

Operator2x2 Operator2x2::operator*(const Operator2x2& o) const {
    Operator2x2 r;
    r.m[0] = m[0] * o.m[0] + m[1] * o.m[2];
    r.m[1] = m[0] * o.m[1] + m[1] * o.m[3];
    r.m[2] = m[2] * o.m[0] + m[3] * o.m[2];
    r.m[3] = m[2] * o.m[1] + m[3] * o.m[3];
    return r;
}

Operator2x2 Operator2x2::operator+(const Operator2x2& o) const {
    Operator2x2 r;
    for (int i = 0; i < 4; ++i)
        r.m[i] = m[i] + o.m[i];
    return r;
}

Operator2x2 Operator2x2::operator-(const Operator2x2& o) const {
    Operator2x2 r;
    for (int i = 0; i < 4; ++i)
        r.m[i] = m[i] - o.m[i];
    return r;
}

double Operator2x2::max_abs() const {
    double v = 0.0;
    for (const auto& e : m)
        v = std::max(v, std::abs(e));
    return v;
}

Operator2x2 Operator2x2::identity() {
    Operator2x2 r;
    r.m[0] = r.m[3] = 1.0;
    return r;
}

Operator2x2 Operator2x2::outer(const PureState& ket, const PureState& bra) {
    Operator2x2 r;
    r.m[0] = ket.amp_up * std::conj(bra.amp_up);
    r.m[1] = ket.amp_up * std::conj(bra.amp_down);
    r.m[2] = ket.amp_down * std::conj(bra.amp_up);
    r.m[3] = ket.amp_down * std::conj(bra.amp_down);
    return r;
}

MeasurementScheme MeasurementScheme::projective(EulerAngles a) {
    a = normalized(a);
    EulerAngles minus{kPi - a.theta, a.phi + kPi};
    return {a, a, normalized(minus)};
}

MeasurementScheme MeasurementScheme::rotated(EulerAngles a, EulerAngles b) {
    a = normalized(a);
    b = normalized(b);
    EulerAngles minus{kPi - b.theta, b.phi + kPi};
    return {a, b, normalized(minus)};
}

PureState state_from_angles(EulerAngles angles) {
    angles = normalized(angles);
    const double half = 0.5 * angles.theta;
    const cplx ph = std::polar(1.0, 0.5 * angles.phi);
    return {ph * std::sin(half), std::conj(ph) * std::cos(half)};
}

PureState orthogonal_state(EulerAngles angles) {
    angles = normalized(angles);
    const double half = 0.5 * angles.theta;
    const cplx ph = std::polar(1.0, 0.5 * angles.phi);
    const cplx i{0.0, 1.0};
    return {i * ph * std::cos(half), -i * std::conj(ph) * std::sin(half)};
}

std::array<Operator2x2, 2> omega_operators(const MeasurementScheme& scheme) {
    const PureState a = state_from_angles(scheme.a);
    const PureState ma = orthogonal_state(scheme.a);
    const PureState b1 = state_from_angles(scheme.b1);
    const PureState b2 = state_from_angles(scheme.b2);
    return {Operator2x2::outer(b1, a), Operator2x2::outer(b2, ma)};
}

Operator2x2 gram_operator(const MeasurementScheme& scheme) {
    const PureState b1 = state_from_angles(scheme.b1);
    const PureState b2 = state_from_angles(scheme.b2);
    return Operator2x2::outer(b1, b1) + Operator2x2::outer(b2, b2);
}

bool is_gram_diagonal(const MeasurementScheme& scheme, double tol) {
    if (!(tol > 0.0))
        throw domain_error("is_gram_diagonal: tol must be > 0");
    return std::abs(gram_operator(scheme)(0, 1)) <= tol;
}

CorrelationCoefficients nnd_coefficients(const MeasurementScheme& scheme,
                                         const bath::QubitParams& qubit,
                                         double temperature) {
    qubit.validate();
    check_temperature(temperature);
    const EulerAngles a = normalized(scheme.a);
    const EulerAngles e1 = normalized(scheme.b1);
    const EulerAngles e2 = normalized(scheme.b2);

    const double bw = qubit.omega0 / temperature; // beta omega0
    const double ep = std::exp(bw), em = std::exp(-bw);
    const double c2 = std::cos(0.5 * a.theta) * std::cos(0.5 * a.theta);
    const double s2 = std::sin(0.5 * a.theta) * std::sin(0.5 * a.theta);
    const double sa2 = std::sin(a.theta) * std::sin(a.theta);
    const double S1 = std::sin(e1.theta), S2 = std::sin(e2.theta);
    const double dphi = e1.phi - e2.phi;
    const double cD = std::cos(dphi), sD = std::sin(dphi);

    CorrelationCoefficients out;
    out.n1 = (c2 * c2 * ep - s2 * s2 * em) * S1 * S1 +
             (s2 * s2 * ep - c2 * c2 * em) * S2 * S2 +
             std::sinh(bw) * sa2 * cD * S1 * S2;
    out.n2 = 2.0 * std::cos(a.theta) * sD * S1 * S2;
    out.d = (0.5 * sa2 + c2 * c2 * ep + s2 * s2 * em) * S1 * S1 +
            (0.5 * sa2 + s2 * s2 * ep + c2 * c2 * em) * S2 * S2 +
            (std::cosh(bw) * sa2 + 2.0 * (s2 * s2 + c2 * c2)) * cD * S1 * S2;
    if (out.d <= 1e-12)
        throw degenerate_scheme_error(
            "nnd_coefficients: D <= 1e-12; the scheme carries no initial coherence");
    out.a_ratio = out.n1 / out.d;
    return out;
}

SchemeObservables initial_observables(const MeasurementScheme& scheme,
                                      const bath::QubitParams& qubit,
                                      double temperature) {
    qubit.validate();
    check_temperature(temperature);
    const EulerAngles a = normalized(scheme.a);
    const EulerAngles e1 = normalized(scheme.b1);
    const EulerAngles e2 = normalized(scheme.b2);

    const double b0 = 0.5 * qubit.omega0 / temperature;
    const double ch = std::cosh(b0);
    const double c2 = std::cos(0.5 * a.theta) * std::cos(0.5 * a.theta);
    const double s2 = std::sin(0.5 * a.theta) * std::sin(0.5 * a.theta);

    // The effects are the projectors |a><a| and |-a><-a|, so the outcome
    // probabilities are the thermal weights of |+-a> and the post-measurement
    // state is w1 |b1><b1| + w2 |b2><b2|.
    SchemeObservables out;
    const double w1 = (c2 * std::exp(b0) + s2 * std::exp(-b0)) / (2.0 * ch);
    out.probabilities = {w1, 1.0 - w1};

    // <b|sigma_+|b> = e^{-i phi} sin(theta)/2,  <b|sigma_3|b> = -cos(theta)
    const cplx sp1 = std::polar(0.5 * std::sin(e1.theta), -e1.phi);
    const cplx sp2 = std::polar(0.5 * std::sin(e2.theta), -e2.phi);
    out.sigma_plus_0 = w1 * sp1 + (1.0 - w1) * sp2;
    out.sigma3_0 = -(w1 * std::cos(e1.theta) + (1.0 - w1) * std::cos(e2.theta));
    return out;
}

bool verify_udiag_relation(const Operator2x2& u1, const Operator2x2& u2,
                           const PureState& psi1, const Operator2x2& g, double tol) {
    if (!(tol > 0.0))
        throw domain_error("verify_udiag_relation: tol must be > 0");
    const Operator2x2 id = Operator2x2::identity();
    if ((u1.adjoint() * u1 - id).max_abs() > tol ||
        (u2.adjoint() * u2 - id).max_abs() > tol)
        throw domain_error("verify_udiag_relation: inputs must be unitary within tol");
    const Operator2x2 p = Operator2x2::outer(psi1, psi1);
    const Operator2x2 lhs = u1 * p * u1.adjoint() - u2 * p * u2.adjoint();
    const Operator2x2 rhs = g - id;
    return (lhs - rhs).max_abs() <= tol;
}

} // namespace qdeph::measurement
