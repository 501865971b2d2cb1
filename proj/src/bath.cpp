#include "qdeph/bath.hpp"
#include "qdeph/errors.hpp"
#include "qdeph/quadrature.hpp"
#include "qdeph/specfun.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace qdeph::bath {

namespace {

using cplx = std::complex<double>;

constexpr double kBernoulliOverFact[6] = {
    1.0 / 6.0 / 2.0,          -1.0 / 30.0 / 24.0,        1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,    5.0 / 66.0 / 3628800.0,    -691.0 / 2730.0 / 479001600.0,
};

// e^z - 1 with full relative accuracy for small z.
cplx expm1c(cplx z) {
    double x = z.real(), y = z.imag();
    double sy2 = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * sy2 * sy2, std::exp(x) * std::sin(y)};
}

// Gamma(s+1)/s = (s-1) Gamma(s-1); regular for all s > 0.
double gamma_sp1_over_s(double s) { return std::tgamma(s + 1.0) / s; }

void check_time(double t) {
    if (!(t >= 0.0))
        throw domain_error("bath: time must be non-negative, got " + std::to_string(t));
}

// Both closed-form bath integrals share the kernel
//   (1 - e^{-eps w}) / eps,   w = v + i u,  u = atan(wc t),  v = ln(1+wc^2 t^2)/2,
// with eps = s-1:
//   gamma_vac = lambda (Gamma(s+1)/s) Re[.]
//   Phi       = lambda (Gamma(s+1)/s) Im[.]
cplx vacuum_kernel(double t, const BathParams& b) {
    double wt = b.omega_c * t;
    cplx w(0.5 * std::log1p(wt * wt), std::atan(wt));
    double eps = b.s - 1.0;
    if (eps == 0.0)
        return w;
    return -expm1c(-eps * w) / eps;
}

} // namespace

void BathParams::validate() const {
    if (!(lambda >= 0.0))
        throw domain_error("BathParams: lambda must be >= 0");
    if (!(s > 0.0))
        throw domain_error("BathParams: ohmicity s must be > 0");
    if (!(temperature >= 0.0))
        throw domain_error("BathParams: temperature must be >= 0");
    if (!(omega_c > 0.0))
        throw domain_error("BathParams: omega_c must be > 0");
}

void QubitParams::validate() const {
    if (!(omega0 > 0.0))
        throw domain_error("QubitParams: omega0 must be > 0");
}

double spectral_density(double omega, const BathParams& bath) {
    bath.validate();
    if (!(omega >= 0.0))
        throw domain_error("spectral_density: omega must be >= 0");
    if (omega == 0.0)
        return 0.0;
    return bath.lambda * std::pow(bath.omega_c, 1.0 - bath.s) * std::pow(omega, bath.s) *
           std::exp(-omega / bath.omega_c);
}

double phi(double t, const BathParams& bath) {
    bath.validate();
    check_time(t);
    return bath.lambda * gamma_sp1_over_s(bath.s) * vacuum_kernel(t, bath).imag();
}

double phi_envelope(double t, const BathParams& bath) {
    bath.validate();
    check_time(t);
    if (bath.s <= 1.0)
        throw domain_error("phi_envelope: requires s > 1 (Phi does not decay otherwise)");
    double eps = bath.s - 1.0;
    double wt = bath.omega_c * t;
    return bath.lambda * gamma_sp1_over_s(bath.s) / eps * std::pow(1.0 + wt * wt, -0.5 * eps);
}

double decoherence_vacuum(double t, const BathParams& bath) {
    bath.validate();
    check_time(t);
    return bath.lambda * gamma_sp1_over_s(bath.s) * vacuum_kernel(t, bath).real();
}

double decoherence_thermal(double t, const BathParams& bath) {
    bath.validate();
    check_time(t);
    const double T = bath.temperature;
    if (T == 0.0 || bath.lambda == 0.0 || t == 0.0)
        return 0.0;

    // gamma_th = 2 lambda (T/wc)^eps Gamma(eps) S,
    //   S = sum_{n>=1} Re[(n+a)^{-eps} - (n+a+i tau)^{-eps}],  a = T/wc, tau = T t.
    // Direct terms for n < N, Euler-Maclaurin tail from N.  The Gamma(eps)
    // pole at s=1 cancels against S ~ eps; everything is assembled as
    // (Gamma(s+1)/s) * (S/eps) with expm1-based kernels that stay accurate
    // as eps -> 0.
    const double eps = bath.s - 1.0;
    const double a = T / bath.omega_c;
    const double tau = T * t;
    const int N = 24;

    const auto log_of = [&](double base) -> cplx {
        double y = tau / base;
        return {0.5 * std::log1p(y * y), std::atan(y)};
    };

    double Q = 0.0; // accumulates S/eps (or the eps->0 limit)
    if (eps == 0.0) {
        for (int n = 1; n < N; ++n)
            Q += log_of(n + a).real();
        const double base = N + a;
        const cplx L = log_of(base);
        const double y = tau / base;
        Q += -base * (cplx(1.0, y) * L).real(); // integral piece, eps->0 limit
        Q += 0.5 * L.real();
        for (int k = 1; k <= 6; ++k) {
            double poch = 1.0;
            for (int j = 1; j <= 2 * k - 2; ++j)
                poch *= j; // (eps+j) at eps=0
            double p = 2.0 * k - 1.0;
            Q += kBernoulliOverFact[k - 1] * poch * std::pow(base, -p) *
                 (-expm1c(-p * L).real());
        }
        return 2.0 * bath.lambda * Q; // (T/wc)^0 Gamma(s+1)/s = 1 at s=1
    }

    for (int n = 1; n < N; ++n) {
        const double base = n + a;
        Q += std::pow(base, -eps) * (-expm1c(-eps * log_of(base)).real()) / eps;
    }
    const double base = N + a;
    const cplx L = log_of(base);
    const double y = tau / base;
    // Integral piece: Re[(N+b)^{1-eps} - (N+a)^{1-eps}] / ((1-eps) eps)
    if (std::abs(eps) < 0.5) {
        // (1+iy)^{1-eps} - 1 = (1+iy)(e^{-eps L} - 1) + iy;  Re[iy] = 0
        Q += std::pow(base, 1.0 - eps) / (1.0 - eps) *
             (cplx(1.0, y) * expm1c(-eps * L)).real() / eps;
    } else {
        const double u = 1.0 - eps;
        const double piece = (u == 0.0) ? L.real() : expm1c(u * L).real() / u;
        Q += std::pow(base, 1.0 - eps) * piece / eps;
    }
    Q += 0.5 * std::pow(base, -eps) * (-expm1c(-eps * L).real()) / eps;
    for (int k = 1; k <= 6; ++k) {
        double poch = 1.0; // (eps)_{2k-1} / eps
        for (int j = 1; j <= 2 * k - 2; ++j)
            poch *= eps + j;
        const double p = eps + 2.0 * k - 1.0;
        Q += kBernoulliOverFact[k - 1] * poch * std::pow(base, -p) * (-expm1c(-p * L).real());
    }
    return 2.0 * bath.lambda * std::pow(a, eps) * gamma_sp1_over_s(bath.s) * Q;
}

double decoherence_fn(double t, const BathParams& bath) {
    return decoherence_vacuum(t, bath) + decoherence_thermal(t, bath);
}

double decoherence_thermal_quadrature(double t, const BathParams& bath) {
    bath.validate();
    check_time(t);
    const double T = bath.temperature;
    if (T == 0.0 || bath.lambda == 0.0 || t == 0.0)
        return 0.0;
    const double beta = 1.0 / T;
    const double wc = bath.omega_c;
    const double pref = 2.0 * bath.lambda * std::pow(wc, 1.0 - bath.s);
    const double s = bath.s;

    // Regular part of the integrand past the w^{s-2} power:
    //   g(w) = e^{-w/wc} (1 - cos wt) * 2/(e^{beta w} - 1) * w^{... }
    // We integrate w^{s-2} g(w); near w = 0 the combination behaves like
    // w^{s-1} (t^2 T + O(w)).
    const auto integrand = [&](double w) {
        double c = std::sin(0.5 * w * t);
        double bose = 1.0 / std::expm1(beta * w);
        return std::pow(w, s - 2.0) * std::exp(-w / wc) * 2.0 * c * c * bose;
    };

    // Small-w segment [0, delta]: termwise integration of the power series
    //   e^{-w/wc} (1 - cos wt) / (e^{beta w} - 1) = sum_j c_j w^{j+1},
    // so  int_0^delta w^{s-2} (...) dw = sum_j c_j delta^{s+j} / (s+j).
    const double delta = 1e-3 * wc;
    double seg = 0.0;
    {
        constexpr int M = 12;
        double ser_exp[M], ser_cos[M], ser_bose[M], prod[M], full[M];
        // e^{-w/wc}
        double cu = 1.0;
        for (int j = 0; j < M; ++j) {
            ser_exp[j] = cu;
            cu *= -1.0 / (wc * (j + 1.0));
        }
        // (1 - cos wt) = sum_{m>=1} (-1)^{m+1} t^{2m} w^{2m} / (2m)!
        for (int j = 0; j < M; ++j)
            ser_cos[j] = 0.0;
        double cc = 0.5 * t * t; // m=1 term
        for (int m = 1; 2 * m < M; ++m) {
            ser_cos[2 * m] = cc;
            cc *= -t * t / ((2.0 * m + 1.0) * (2.0 * m + 2.0));
        }
        // w/(e^{beta w} - 1) = 1 - bw/2 + (bw)^2/12 - (bw)^4/720 + (bw)^6/30240 ...
        for (int j = 0; j < M; ++j)
            ser_bose[j] = 0.0;
        ser_bose[0] = 1.0;
        ser_bose[1] = -beta / 2.0;
        ser_bose[2] = beta * beta / 12.0;
        if (M > 4)
            ser_bose[4] = -std::pow(beta, 4) / 720.0;
        if (M > 6)
            ser_bose[6] = std::pow(beta, 6) / 30240.0;
        if (M > 8)
            ser_bose[8] = -std::pow(beta, 8) / 1209600.0;
        // prod = exp * cos series; full = prod * bose series
        for (int j = 0; j < M; ++j) {
            prod[j] = 0.0;
            for (int i = 0; i <= j; ++i)
                prod[j] += ser_exp[i] * ser_cos[j - i];
        }
        for (int j = 0; j < M; ++j) {
            full[j] = 0.0;
            for (int i = 0; i <= j; ++i)
                full[j] += prod[i] * ser_bose[j - i];
        }
        // integrand = w^{s-2} * full_series(w) * w^{-1} ... :
        // (1-cos)(bose)(exp) = sum_j full[j] w^{j-1}; times w^{s-2} integrates to
        // sum_j full[j] delta^{s+j-2} / (s+j-2), starting at j=2 (full[0]=full[1]=0
        // times the 1/w from the Bose factor).  full[j] here multiplies w^{j-1}.
        double dp = std::pow(delta, s); // delta^{s+j-2} for j=2
        for (int j = 2; j < M; ++j) {
            seg += full[j] * dp / (s + j - 2.0);
            dp *= delta;
        }
    }

    const double wmax = wc * (40.0 + 10.0 * s);
    quad::QuadOptions opts;
    opts.rel_tol = 1e-11;
    opts.abs_tol = 1e-16;
    quad::QuadResult qr = quad::integrate(integrand, delta, wmax, opts);
    if (!qr.converged)
        throw convergence_error("decoherence_thermal_quadrature: tolerance not met");
    return pref * (seg + qr.value);
}

Moments small_t_moments(const BathParams& bath) {
    bath.validate();
    Moments m;
    const double wc = bath.omega_c;
    m.m1 = bath.lambda * wc * std::tgamma(bath.s);
    double bracket = 1.0;
    if (bath.temperature > 0.0) {
        double a = bath.temperature / wc;
        bracket += 2.0 * std::pow(a, bath.s + 1.0) * specfun::hurwitz_zeta(bath.s + 1.0, 1.0 + a);
    }
    m.m_coth = bath.lambda * wc * wc * std::tgamma(bath.s + 1.0) * bracket;
    return m;
}

} // namespace qdeph::bath
