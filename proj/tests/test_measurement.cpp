#include "qdeph/measurement.hpp"
#include "qdeph/errors.hpp"
#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

using namespace qdeph;
using namespace qdeph::measurement;

namespace {
constexpr double kPi = std::numbers::pi;

cplx inner(const PureState& a, const PureState& b) {
    return std::conj(a.amp_up) * b.amp_up + std::conj(a.amp_down) * b.amp_down;
}

MeasurementScheme random_scheme(std::mt19937& rng) {
    std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2.0 * kPi);
    return {{th(rng), ph(rng)}, {th(rng), ph(rng)}, {th(rng), ph(rng)}};
}
} // namespace

TEST_CASE("state_from_angles: canonical points") {
    auto s = state_from_angles({0.0, 0.0});
    CHECK(std::abs(s.amp_up) < 1e-15);
    CHECK(std::abs(s.amp_down - 1.0) < 1e-15);
    s = state_from_angles({kPi, 0.0});
    CHECK(std::abs(s.amp_up - 1.0) < 1e-15);
    CHECK(std::abs(s.amp_down) < 1e-15);
    s = state_from_angles({kPi / 2, 0.0});
    CHECK(std::abs(s.amp_up - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(s.amp_down - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK_THROWS_AS(state_from_angles({-0.1, 0.0}), domain_error);
    CHECK_THROWS_AS(state_from_angles({3.2, 0.0}), domain_error);
}

TEST_CASE("orthogonal_state: fixed phases and orthogonality") {
    auto m = orthogonal_state({0.0, 0.0});
    CHECK(std::abs(m.amp_up - cplx(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(m.amp_down) < 1e-15);
    m = orthogonal_state({kPi / 2, 0.0});
    CHECK(std::abs(m.amp_up - cplx(0.0, 1.0 / std::sqrt(2.0))) < 1e-15);
    CHECK(std::abs(m.amp_down - cplx(0.0, -1.0 / std::sqrt(2.0))) < 1e-15);

    std::mt19937 rng(42);
    std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2.0 * kPi);
    for (int i = 0; i < 200; ++i) {
        EulerAngles a{th(rng), ph(rng)};
        CHECK(std::abs(inner(state_from_angles(a), orthogonal_state(a))) <= 1e-12);
        auto n = state_from_angles(a);
        CHECK(std::abs(std::norm(n.amp_up) + std::norm(n.amp_down) - 1.0) <= 1e-12);
    }
}

TEST_CASE("omega operators: effects resolve the identity") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        const auto sch = random_scheme(rng);
        const auto om = omega_operators(sch);
        const auto f1 = om[0].adjoint() * om[0];
        const auto f2 = om[1].adjoint() * om[1];
        CHECK((f1 + f2 - Operator2x2::identity()).max_abs() < 1e-12);
        CHECK(std::abs((f1 + f2).trace() - 2.0) < 1e-12);
        // effects are PSD: hermitian, non-negative diagonal, det >= 0
        for (const auto& f : {f1, f2}) {
            CHECK((f - f.adjoint()).max_abs() < 1e-13);
            CHECK(f(0, 0).real() >= -1e-14);
            CHECK(f(1, 1).real() >= -1e-14);
            const double det = (f(0, 0) * f(1, 1) - f(0, 1) * f(1, 0)).real();
            CHECK(det >= -1e-13);
        }
    }
}

TEST_CASE("scheme i: omega operators are projectors") {
    const auto sch = MeasurementScheme::projective({0.77, 1.3});
    const auto om = omega_operators(sch);
    CHECK((om[0] * om[0] - om[0]).max_abs() < 1e-13);
    const auto f1 = om[0].adjoint() * om[0];
    CHECK((f1 - om[0]).max_abs() < 1e-13);
}

TEST_CASE("gram operator: orthogonal pair gives identity") {
    // scheme ii: theta1 + theta2 = pi, delta_phi = pi
    const auto sch = MeasurementScheme::rotated({0.4, 0.9}, {1.1, 2.2});
    const auto g = gram_operator(sch);
    CHECK((g - Operator2x2::identity()).max_abs() < 1e-13);
    CHECK(is_gram_diagonal(sch));
}

TEST_CASE("gram operator: paired-amplitude family is diag(2|c1|^2, 2|c0|^2)") {
    // |b1> = c0|0> + c1|1>, |b2> = i(c0|0> - c1|1>): theta1 = theta2, dphi = pi
    for (double th : {0.3, 1.0, 2.0}) {
        MeasurementScheme sch{{0.6, 0.0}, {th, 0.7}, {th, 0.7 - kPi}};
        const auto g = gram_operator(sch);
        const auto b1 = state_from_angles(sch.b1);
        CHECK(std::abs(g(0, 1)) < 1e-14);
        CHECK(std::abs(g(0, 0).real() - 2.0 * std::norm(b1.amp_up)) < 1e-13);
        CHECK(std::abs(g(1, 1).real() - 2.0 * std::norm(b1.amp_down)) < 1e-13);
        CHECK(std::abs(g.trace() - 2.0) < 1e-13);
        CHECK(is_gram_diagonal(sch));
    }
}

TEST_CASE("gram operator: non-diagonal case has |G01| = 1/sqrt(2)") {
    MeasurementScheme sch{{kPi / 4, 0.0}, {kPi / 2, 0.0}, {kPi / 2, kPi / 2}};
    const auto g = gram_operator(sch);
    CHECK(std::abs(std::abs(g(0, 1)) - 1.0 / std::sqrt(2.0)) < 1e-13);
    CHECK_FALSE(is_gram_diagonal(sch));
    CHECK(std::abs(g.trace() - 2.0) < 1e-13);
}

TEST_CASE("nnd coefficients: structural zeros of N2") {
    const bath::QubitParams q{0.1};
    // theta_a = pi/2 (cos theta_a = 0), non-degenerate because dphi = pi/2
    MeasurementScheme sch{{kPi / 2, 0.0}, {kPi / 2, 0.0}, {kPi / 2, kPi / 2}};
    CHECK(std::abs(nnd_coefficients(sch, q, 1.0).n2) < 1e-14);
    // dphi in {0, pi}
    MeasurementScheme sch2{{0.9, 0.0}, {1.2, 0.4}, {1.0, 0.4}};
    CHECK(std::abs(nnd_coefficients(sch2, q, 1.0).n2) < 1e-14);
    MeasurementScheme sch3{{0.9, 0.0}, {1.2, 0.4}, {1.0, 0.4 + kPi}};
    CHECK(std::abs(nnd_coefficients(sch3, q, 1.0).n2) < 1e-14);
}

TEST_CASE("nnd coefficients: diagonal Gram gives a_ratio = coth(w0/2T)") {
    const bath::QubitParams q{0.1};
    const auto c = nnd_coefficients(MeasurementScheme::projective({kPi / 4, 0.3}), q, 1.0);
    CHECK(std::abs(c.a_ratio - 20.0166638896) < 1e-9); // coth(0.05), frozen
    CHECK(std::abs(c.n2) < 1e-14);
}

TEST_CASE("nnd coefficients: match the brute-force matrix-element oracle") {
    const bath::QubitParams q{0.1};
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> tdist(0.1, 10.0);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        const auto sch = random_scheme(rng);
        const double T = tdist(rng);
        const auto [x0, x1] = oracles::sigma_plus_elements(sch);
        const double b0 = 0.5 * q.omega0 / T;
        const cplx Q = x0 * std::exp(b0) + x1 * std::exp(-b0);
        const cplx P = x0 * std::exp(b0) - x1 * std::exp(-b0);
        const double d_ref = 4.0 * std::norm(Q);
        if (d_ref <= 1e-10)
            continue;
        const auto c = nnd_coefficients(sch, q, T);
        const double n1_ref = 4.0 * (Q * std::conj(P)).real();
        const double n2_ref = 4.0 * (Q * std::conj(P)).imag();
        CHECK(std::abs(c.n1 - n1_ref) <= 1e-11 * std::max(1.0, std::abs(n1_ref)));
        CHECK(std::abs(c.n2 - n2_ref) <= 1e-11 * std::max(1.0, std::abs(n2_ref)));
        CHECK(std::abs(c.d - d_ref) <= 1e-11 * d_ref);
        ++checked;
    }
    CHECK(checked > 400);
}

TEST_CASE("nnd coefficients: degenerate schemes rejected") {
    const bath::QubitParams q{0.1};
    // scheme i at theta_a = 0: b1 = |0>, b2 = |1>, no coherence
    CHECK_THROWS_AS(nnd_coefficients(MeasurementScheme::projective({0.0, 0.0}), q, 1.0),
                    degenerate_scheme_error);
    // scheme i at theta_a = pi/2: Q = 0
    CHECK_THROWS_AS(
        nnd_coefficients(MeasurementScheme::projective({kPi / 2, 0.0}), q, 1.0),
        degenerate_scheme_error);
    CHECK_THROWS_AS(nnd_coefficients(MeasurementScheme::projective({0.5, 0.0}), q, 0.0),
                    domain_error);
}

TEST_CASE("initial observables: closed-form reductions") {
    const bath::QubitParams q{0.1};
    // scheme i with a = |0>: thermal <sigma_3>
    auto obs = initial_observables(MeasurementScheme::projective({0.0, 0.0}), q, 1.0);
    CHECK(std::abs(obs.sigma3_0 + 0.0499583749579) < 1e-10); // -tanh(0.05), frozen
    CHECK(std::abs(obs.probabilities[0] + obs.probabilities[1] - 1.0) < 1e-14);

    // theta1 = theta2 = pi/2, dphi = pi, theta_a = 0
    MeasurementScheme sch{{0.0, 0.0}, {kPi / 2, 0.0}, {kPi / 2, kPi}};
    obs = initial_observables(sch, q, 1.0);
    CHECK(std::abs(std::abs(obs.sigma_plus_0) - 0.5 * 0.0499583749579) < 1e-10);
}

TEST_CASE("initial observables: match matrix-element oracle; invariants hold") {
    const bath::QubitParams q{0.1};
    std::mt19937 rng(2024);
    for (double T : {0.1, 1.0, 10.0}) {
        for (int i = 0; i < 200; ++i) {
            const auto sch = random_scheme(rng);
            const auto obs = initial_observables(sch, q, T);
            const auto [x0, x1] = oracles::sigma_plus_elements(sch);
            const double b0 = 0.5 * q.omega0 / T;
            const cplx sig_ref =
                (x0 * std::exp(b0) + x1 * std::exp(-b0)) / (2.0 * std::cosh(b0));
            CHECK(std::abs(obs.sigma_plus_0 - sig_ref) < 1e-13);
            CHECK(std::abs(obs.sigma3_0 - oracles::sigma3_direct(sch, q.omega0, T)) <
                  1e-13);
            CHECK(std::abs(obs.sigma_plus_0) <= 0.5 + 1e-13);
            CHECK(std::abs(obs.sigma3_0) <= 1.0 + 1e-13);
            CHECK(obs.probabilities[0] >= -1e-15);
            CHECK(obs.probabilities[1] >= -1e-15);
            CHECK(std::abs(obs.probabilities[0] + obs.probabilities[1] - 1.0) < 1e-14);
        }
    }
}

TEST_CASE("diagonal-Gram families: N2 = 0 and a_ratio = coth(w0/2T)") {
    const bath::QubitParams q{0.1};
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> th(0.2, kPi / 2 - 0.2), ph(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> tdist(0.2, 5.0);
    for (int i = 0; i < 150; ++i) {
        const double T = tdist(rng);
        const double coth = 1.0 / std::tanh(0.5 * q.omega0 / T);
        // scheme i
        auto sch = MeasurementScheme::projective({th(rng), ph(rng)});
        // scheme ii
        auto sch2 = MeasurementScheme::rotated({th(rng), ph(rng)}, {th(rng), ph(rng)});
        // paired-amplitude family: theta1 = theta2, dphi = pi
        const double tb = th(rng), pb = ph(rng);
        MeasurementScheme sch3{{th(rng), ph(rng)}, {tb, pb}, {tb, pb - kPi}};
        for (const auto& s : {sch, sch2, sch3}) {
            CHECK(is_gram_diagonal(s));
            const auto c = nnd_coefficients(s, q, T);
            CHECK(std::abs(c.n2) < 1e-12);
            CHECK(std::abs(c.a_ratio - coth) <= 1e-10);
        }
    }
}

TEST_CASE("verify_udiag_relation: unitary constructions for diagonal Gram") {
    const double ta = 0.8, pa = 1.1;
    const PureState a = state_from_angles({ta, pa});
    const PureState ma = orthogonal_state({ta, pa});
    const cplx i{0.0, 1.0};

    SUBCASE("U1 = I, U2 = offdiag(e^{i phi_a}, e^{-i phi_a})") {
        Operator2x2 u1 = Operator2x2::identity();
        Operator2x2 u2;
        u2(0, 1) = std::polar(1.0, pa);
        u2(1, 0) = std::polar(1.0, -pa);
        // b1 = U1|a>, b2 = U2|-a>
        PureState b2{u2(0, 0) * ma.amp_up + u2(0, 1) * ma.amp_down,
                     u2(1, 0) * ma.amp_up + u2(1, 1) * ma.amp_down};
        Operator2x2 g = Operator2x2::outer(a, a) + Operator2x2::outer(b2, b2);
        CHECK(std::abs(g(0, 1)) < 1e-14); // this pair makes G diagonal
        CHECK(verify_udiag_relation(u1, u2, a, g, 1e-10));
    }
    SUBCASE("U1 = sigma_3, U2 = offdiag(i e^{i phi_a}, -i e^{-i phi_a})") {
        Operator2x2 u1;
        u1(0, 0) = 1.0;
        u1(1, 1) = -1.0;
        Operator2x2 u2;
        u2(0, 1) = i * std::polar(1.0, pa);
        u2(1, 0) = -i * std::polar(1.0, -pa);
        PureState b1{a.amp_up, -a.amp_down}; // sigma_3 |a>
        PureState b2{u2(0, 0) * ma.amp_up + u2(0, 1) * ma.amp_down,
                     u2(1, 0) * ma.amp_up + u2(1, 1) * ma.amp_down};
        CHECK(std::abs(b2.amp_up - a.amp_up) < 1e-14); // U2|-a> reduces to |a>
        Operator2x2 g = Operator2x2::outer(b1, b1) + Operator2x2::outer(b2, b2);
        CHECK(std::abs(g(0, 1)) < 1e-14);
        CHECK(verify_udiag_relation(u1, u2, a, g, 1e-10));
    }
    SUBCASE("trivial case and error path") {
        CHECK(verify_udiag_relation(Operator2x2::identity(), Operator2x2::identity(), a,
                                    Operator2x2::identity(), 1e-12));
        Operator2x2 bad;
        bad(0, 0) = 2.0;
        CHECK_THROWS_AS(verify_udiag_relation(bad, Operator2x2::identity(), a,
                                              Operator2x2::identity(), 1e-10),
                        domain_error);
    }
}

TEST_CASE("angle normalization") {
    const auto n = normalized({1.0, -1.5});
    CHECK(n.phi >= 0.0);
    CHECK(n.phi < 2.0 * kPi);
    CHECK(std::abs(n.phi - (2.0 * kPi - 1.5)) < 1e-14);
}
