#pragma once

#include <span>
#include <vector>

namespace gve {

inline constexpr double kKappaMin = 0.05;
inline constexpr double kKappaMax = 2.0;

// n embeddings of dimension m plus the distance exponent kappa.
struct EmbeddingSet {
    int n = 0;
    int m = 0;
    std::vector<double> e;  // row-major n*m
    double kappa = 1.0;

    double& at(int i, int k) { return e[static_cast<size_t>(i) * m + k]; }
    double at(int i, int k) const { return e[static_cast<size_t>(i) * m + k]; }
    std::span<const double> row(int i) const {
        return {e.data() + static_cast<size_t>(i) * m, static_cast<size_t>(m)};
    }
};

// Generalized embedding distance (|a-b|^2 + epsilon)^(kappa/2).
// With epsilon = 0 this is the Euclidean norm raised to kappa.
double pair_distance(std::span<const double> a, std::span<const double> b,
                     double kappa, double epsilon);

// Sigmoid reparameterization keeping kappa inside [0.05, 2.0] while the
// optimizer works on the unconstrained alpha.
double kappa_of_alpha(double alpha);
double alpha_of_kappa(double kappa);  // requires kappa strictly inside the interval

}  // namespace gve
