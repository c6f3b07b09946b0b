#ifndef HMCT_QUADRATURE_HPP
#define HMCT_QUADRATURE_HPP

#include <vector>

namespace hmct {

/**
 * Gauss-Legendre quadrature rule on [-1, 1].
 *
 * Nodes are the roots of the Legendre polynomial P_n, found by Newton
 * iteration on the recurrence; weights w_i = 2 / ((1 - x_i^2) P_n'(x_i)^2).
 */
class GaussLegendre {
public:
    explicit GaussLegendre(int order);

    int order() const { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    // integrate f over [a, b]
    template <typename F>
    double integrate(F&& f, double a, double b) const {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            acc += weights_[i] * f(mid + half * nodes_[i]);
        return acc * half;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

} // namespace hmct

#endif
