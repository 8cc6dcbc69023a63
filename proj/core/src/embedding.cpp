#include "gve/embedding.hpp"

#include <cmath>
#include <stdexcept>

namespace gve {

double pair_distance(std::span<const double> a, std::span<const double> b,
                     double kappa, double epsilon) {
    double s = epsilon;
    for (size_t k = 0; k < a.size(); ++k) {
        double diff = a[k] - b[k];
        s += diff * diff;
    }
    if (s == 0.0) return 0.0;
    return std::pow(s, 0.5 * kappa);
}

double kappa_of_alpha(double alpha) {
    double sig = 1.0 / (1.0 + std::exp(-alpha));
    return kKappaMin + (kKappaMax - kKappaMin) * sig;
}

double alpha_of_kappa(double kappa) {
    if (kappa <= kKappaMin || kappa >= kKappaMax)
        throw std::invalid_argument("alpha_of_kappa: kappa must lie strictly inside (" +
                                    std::to_string(kKappaMin) + ", " +
                                    std::to_string(kKappaMax) + ")");
    double p = (kappa - kKappaMin) / (kKappaMax - kKappaMin);
    return std::log(p / (1.0 - p));
}

}  // namespace gve
