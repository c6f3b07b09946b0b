#ifndef HMCT_WAVEFORM_HPP
#define HMCT_WAVEFORM_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace hmct {

using cplx = std::complex<double>;

/**
 * Hexagonal time-frequency lattice geometry.
 *
 * The lattice is a rectangular sublattice (coset 1, spacing T x F) plus its
 * half-shifted coset (coset 2, offset T/2 in time and F/2 in frequency).
 * TF > 1 is required: the hexagonal packing only pays off in the dispersive
 * regime (the reference configuration uses TF = 2.5).
 */
struct LatticeParams {
    double T = 1e-4;  // symbol period, s
    double F = 2.5e4; // subcarrier separation, Hz
    int N = 40;       // subcarriers per coset
    int M = 20;       // multicarrier symbols per coset

    void validate() const;
};

/**
 * Gaussian prototype pulse g(t) = (2/sigma)^(1/4) exp(-pi t^2 / sigma),
 * sampled symmetrically about its center at interval Ts and renormalized so
 * the discrete energy sum(|g[k]|^2) Ts is exactly 1.
 *
 * sigma (s^2) controls the time/frequency energy split.
 */
struct PrototypePulse {
    double sigma = 0.0;
    double Ts = 0.0;
    int Ng = 0;
    double amplitude = 0.0;       // normalized peak amplitude
    std::vector<double> samples;  // g[k] at t = (k - (Ng-1)/2) Ts

    double center() const { return 0.5 * (Ng - 1); }

    // g((k - center) Ts - offset); used for receive windows with a timing offset
    double sample_at(int k, double offset) const;

    // full receive window for a given timing offset
    std::vector<double> window(double offset) const;
};

PrototypePulse make_gaussian_pulse(double sigma, int Ng, double Ts);

/** Per-coset symbol grids c^1_{m,n}, c^2_{m,n}, each M x N, row-major in m. */
struct SymbolGrid {
    int M = 0, N = 0;
    double sigma_c2 = 1.0; // average symbol power
    std::vector<cplx> coset1;
    std::vector<cplx> coset2;

    SymbolGrid() = default;
    SymbolGrid(int m, int n, double power = 1.0)
        : M(m), N(n), sigma_c2(power), coset1(std::size_t(m) * n), coset2(std::size_t(m) * n) {}

    cplx& at(int coset, int m, int n) {
        return (coset == 1 ? coset1 : coset2)[std::size_t(m) * N + n];
    }
    const cplx& at(int coset, int m, int n) const {
        return (coset == 1 ? coset1 : coset2)[std::size_t(m) * N + n];
    }
};

/** i.i.d. unit-power QPSK symbols (constellation {±1±j}/sqrt(2) scaled to sigma_c2). */
SymbolGrid make_qpsk_grid(int M, int N, double sigma_c2, std::uint64_t seed);

/** Complex baseband sample sequence; sample s sits at time t0 + s Ts. */
struct BasebandSignal {
    std::vector<cplx> samples;
    double Ts = 0.0;
    double t0 = 0.0;
};

/**
 * Cross-ambiguity of the Gaussian pulse with its delayed copy,
 *
 *   A(tau, nu) = integral psi(t) g*(t - tau) e^{-j 2 pi nu t} dt,
 *   psi(t) = g(t - delta_t),
 *
 * in closed form:
 *
 *   A(tau, nu) = exp(-pi (tau - delta_t)^2 / (2 sigma))
 *              * exp(-pi sigma nu^2 / 2)
 *              * exp(-j pi nu (tau + delta_t)).
 *
 * With delta_t = 0 this is the usual auto-ambiguity A_g(tau, nu). The squared
 * magnitude exp(-pi ((tau-delta_t)^2/sigma + sigma nu^2)) is what the SINR
 * integrals consume; the phase convention is pinned by the defining integral
 * above (checked against numerical quadrature in the tests).
 */
cplx gaussian_cross_ambiguity(double sigma, double delta_t, double tau, double nu);

/**
 * Hexagonal-lattice modulation:
 *
 *   x(t) = sum_{m,n} c^1_{m,n} g(t - mT) e^{j2pi nF t}
 *        + sum_{m,n} c^2_{m,n} g(t - mT - T/2) e^{j2pi (nF + F/2) t}
 *
 * discretized on the Ts grid; lattice point (m, n, coset) maps to sample
 * offset round((mT + coset_shift)/Ts). t0 is chosen so the (0,0) coset-1
 * pulse is centered at t = 0.
 */
BasebandSignal modulate(const SymbolGrid& grid, const LatticeParams& lat,
                        const PrototypePulse& pulse);

/**
 * Projection receiver: inner products of the received signal against the
 * time-frequency shifted receive pulses psi(t) = g(t - delta_t) for both
 * cosets. delta_t = 0 is the traditional projection receiver (TPR).
 */
SymbolGrid project(const BasebandSignal& received, const LatticeParams& lat,
                   const PrototypePulse& pulse, double delta_t);

} // namespace hmct

#endif
