#pragma once
//
// greenlab/math/compensated
// Neumaier compensated accumulation for cancellation-prone sums
// (Taylor-polynomial subtraction of kernels).
//

#include <cmath>

namespace greenlab {

class NeumaierSum {
  public:
    NeumaierSum() = default;
    explicit NeumaierSum(double x) : sum_(x) {}

    void add(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace greenlab
