#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace gve {

// First-order moment-tracking optimizer state for one parameter vector.
class Adam {
public:
    explicit Adam(size_t size, double beta1 = 0.9, double beta2 = 0.999,
                  double eps = 1e-8)
        : m_(size, 0.0), v_(size, 0.0), beta1_(beta1), beta2_(beta2), eps_(eps) {}

    void step(std::vector<double>& params, const std::vector<double>& grad,
              double lr) {
        beta1t_ *= beta1_;
        beta2t_ *= beta2_;
        double corr1 = 1.0 - beta1t_;
        double corr2 = 1.0 - beta2t_;
        for (size_t i = 0; i < params.size(); ++i) {
            m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grad[i];
            v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grad[i] * grad[i];
            params[i] -= lr * (m_[i] / corr1) / (std::sqrt(v_[i] / corr2) + eps_);
        }
    }

private:
    std::vector<double> m_, v_;
    double beta1_, beta2_, eps_;
    double beta1t_ = 1.0, beta2t_ = 1.0;
};

}  // namespace gve
