#include "hmct/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hmct {

GaussLegendre::GaussLegendre(int order) {
    if (order < 1) throw std::invalid_argument("GaussLegendre: order must be >= 1");
    nodes_.assign(order, 0.0);
    weights_.assign(order, 0.0);

    const int m = (order + 1) / 2;
    const double fac = M_PI / (0.5 + order);
    for (int i = 0; i < m; ++i) {
        double z = std::cos((i + 0.75) * fac);
        double pp = 0.0, dz;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / static_cast<double>(j);
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            dz = -p1 / pp;
            z += dz;
        } while (std::fabs(dz) >= 4.0 * std::numeric_limits<double>::epsilon());

        nodes_[i] = -z;
        nodes_[order - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        weights_[i] = w;
        weights_[order - 1 - i] = w;
    }
}

} // namespace hmct
