#include "hmct/waveform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hmct/rng.hpp"

namespace hmct {

void LatticeParams::validate() const {
    if (T <= 0.0 || F <= 0.0) throw std::invalid_argument("LatticeParams: T and F must be positive");
    if (N < 1 || M < 1) throw std::invalid_argument("LatticeParams: N and M must be >= 1");
    if (T * F <= 1.0)
        throw std::invalid_argument("LatticeParams: TF must exceed 1 (got TF = " +
                                    std::to_string(T * F) + ")");
}

double PrototypePulse::sample_at(int k, double offset) const {
    const double t = (k - center()) * Ts - offset;
    return amplitude * std::exp(-M_PI * t * t / sigma);
}

std::vector<double> PrototypePulse::window(double offset) const {
    std::vector<double> w(static_cast<std::size_t>(Ng));
    for (int k = 0; k < Ng; ++k) w[static_cast<std::size_t>(k)] = sample_at(k, offset);
    return w;
}

PrototypePulse make_gaussian_pulse(double sigma, int Ng, double Ts) {
    if (sigma <= 0.0) throw std::invalid_argument("make_gaussian_pulse: sigma must be positive");
    if (Ng < 1) throw std::invalid_argument("make_gaussian_pulse: Ng must be >= 1");
    if (Ts <= 0.0) throw std::invalid_argument("make_gaussian_pulse: Ts must be positive");
    if (Ng * Ts < 8.0 * std::sqrt(sigma / (2.0 * M_PI)))
        throw std::invalid_argument("make_gaussian_pulse: support shorter than 8 sqrt(sigma/2pi)");

    PrototypePulse p;
    p.sigma = sigma;
    p.Ts = Ts;
    p.Ng = Ng;
    p.amplitude = std::pow(2.0 / sigma, 0.25);

    double energy = 0.0;
    p.samples.resize(static_cast<std::size_t>(Ng));
    for (int k = 0; k < Ng; ++k) {
        const double g = p.sample_at(k, 0.0);
        p.samples[static_cast<std::size_t>(k)] = g;
        energy += g * g;
    }
    energy *= Ts;
    if (std::fabs(energy - 1.0) > 1e-9)
        throw std::invalid_argument("make_gaussian_pulse: truncated support, discrete energy " +
                                    std::to_string(energy) + " not within 1e-9 of 1");

    const double scale = 1.0 / std::sqrt(energy);
    p.amplitude *= scale;
    for (double& g : p.samples) g *= scale;
    return p;
}

SymbolGrid make_qpsk_grid(int M, int N, double sigma_c2, std::uint64_t seed) {
    if (M < 1 || N < 1) throw std::invalid_argument("make_qpsk_grid: M, N must be >= 1");
    if (sigma_c2 <= 0.0) throw std::invalid_argument("make_qpsk_grid: sigma_c2 must be positive");
    SymbolGrid g(M, N, sigma_c2);
    Rng rng(seed);
    const double a = std::sqrt(sigma_c2 / 2.0);
    auto draw = [&]() {
        const std::uint64_t bits = rng.raw();
        return cplx((bits & 1) ? a : -a, (bits & 2) ? a : -a);
    };
    for (auto& c : g.coset1) c = draw();
    for (auto& c : g.coset2) c = draw();
    return g;
}

cplx gaussian_cross_ambiguity(double sigma, double delta_t, double tau, double nu) {
    if (sigma <= 0.0)
        throw std::invalid_argument("gaussian_cross_ambiguity: sigma must be positive");
    const double d = tau - delta_t;
    const double mag = std::exp(-M_PI * d * d / (2.0 * sigma)) *
                       std::exp(-M_PI * sigma * nu * nu / 2.0);
    const double phase = -M_PI * nu * (tau + delta_t);
    return cplx(mag * std::cos(phase), mag * std::sin(phase));
}

namespace {

struct LatticePoint {
    long base;     // sample offset of the pulse window start
    double freq;   // modulation frequency nF + coset F/2
};

inline LatticePoint lattice_point(const LatticeParams& lat, double Ts, int coset, int m, int n) {
    const double tshift = m * lat.T + (coset == 2 ? 0.5 * lat.T : 0.0);
    LatticePoint p;
    p.base = std::lround(tshift / Ts);
    p.freq = n * lat.F + (coset == 2 ? 0.5 * lat.F : 0.0);
    return p;
}

} // namespace

BasebandSignal modulate(const SymbolGrid& grid, const LatticeParams& lat,
                        const PrototypePulse& pulse) {
    lat.validate();
    if (grid.M != lat.M || grid.N != lat.N)
        throw std::invalid_argument("modulate: grid dimensions do not match lattice");

    const double Ts = pulse.Ts;
    const long last_base = std::lround(((lat.M - 1) * lat.T + 0.5 * lat.T) / Ts);

    BasebandSignal out;
    out.Ts = Ts;
    out.t0 = -pulse.center() * Ts; // (0,0) coset-1 pulse centered at t = 0
    out.samples.assign(static_cast<std::size_t>(last_base + pulse.Ng), cplx(0.0, 0.0));

    for (int coset = 1; coset <= 2; ++coset) {
        for (int m = 0; m < grid.M; ++m) {
            const LatticePoint lp = lattice_point(lat, Ts, coset, m, 0);
            for (int n = 0; n < grid.N; ++n) {
                const cplx c = grid.at(coset, m, n);
                if (c == cplx(0.0, 0.0)) continue;
                const double f = n * lat.F + (coset == 2 ? 0.5 * lat.F : 0.0);
                const double w = 2.0 * M_PI * f;
                // phase advances at the absolute sample times t0 + s Ts
                for (int k = 0; k < pulse.Ng; ++k) {
                    const long s = lp.base + k;
                    const double t = out.t0 + s * Ts;
                    const double ph = w * t;
                    out.samples[static_cast<std::size_t>(s)] +=
                        c * pulse.samples[static_cast<std::size_t>(k)] *
                        cplx(std::cos(ph), std::sin(ph));
                }
            }
        }
    }
    return out;
}

SymbolGrid project(const BasebandSignal& received, const LatticeParams& lat,
                   const PrototypePulse& pulse, double delta_t) {
    lat.validate();
    const double Ts = pulse.Ts;
    const std::vector<double> w = pulse.window(delta_t);

    SymbolGrid est(lat.M, lat.N, 1.0);
    for (int coset = 1; coset <= 2; ++coset) {
        for (int m = 0; m < lat.M; ++m) {
            // window start relative to the signal's own time origin
            const double tshift = m * lat.T + (coset == 2 ? 0.5 * lat.T : 0.0);
            const long base = std::lround((tshift - pulse.center() * Ts - received.t0) / Ts);
            if (base < 0 || base + pulse.Ng > static_cast<long>(received.samples.size()))
                throw std::invalid_argument("project: received signal does not span lattice point");
            for (int n = 0; n < lat.N; ++n) {
                const double f = n * lat.F + (coset == 2 ? 0.5 * lat.F : 0.0);
                const double wf = 2.0 * M_PI * f;
                cplx acc(0.0, 0.0);
                for (int k = 0; k < pulse.Ng; ++k) {
                    const long s = base + k;
                    const double t = received.t0 + s * Ts;
                    const double ph = -wf * t;
                    acc += received.samples[static_cast<std::size_t>(s)] *
                           w[static_cast<std::size_t>(k)] * cplx(std::cos(ph), std::sin(ph));
                }
                est.at(coset, m, n) = acc * Ts;
            }
        }
    }
    return est;
}

} // namespace hmct
