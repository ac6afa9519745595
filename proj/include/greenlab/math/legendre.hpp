#pragma once
//
// greenlab/math/legendre
// Streaming Legendre recurrences for the kernel expansions.
//

#include <utility>

namespace greenlab {

// Yields P_0(u), P_1(u), ... on successive next() calls.
// Upward recurrence (n+1) P_{n+1} = (2n+1) u P_n - n P_{n-1}.
class LegendreSeq {
  public:
    explicit LegendreSeq(double u) : u_(u) {}

    double next() {
        if (n_ < 0) {
            n_ = 0;
            return pn_;  // P_0 = 1
        }
        const double pnext =
            (n_ == 0) ? u_ : ((2 * n_ + 1) * u_ * pn_ - n_ * pnm1_) / (n_ + 1);
        pnm1_ = pn_;
        pn_ = pnext;
        ++n_;
        return pn_;
    }

  private:
    double u_;
    double pn_ = 1.0, pnm1_ = 0.0;
    int n_ = -1;  // order currently held in pn_
};

// Yields (P_n(u), P_n'(u)) pairs. The derivative uses
// P'_{n+1} = P'_{n-1} + (2n+1) P_n, which stays regular at u = +-1.
class LegendreDerivSeq {
  public:
    explicit LegendreDerivSeq(double u) : u_(u) {}

    std::pair<double, double> next() {
        if (n_ < 0) {
            n_ = 0;
            return {1.0, 0.0};  // P_0, P_0'
        }
        const double pnext =
            (n_ == 0) ? u_ : ((2 * n_ + 1) * u_ * pn_ - n_ * pnm1_) / (n_ + 1);
        const double dnext = dnm1_ + (2 * n_ + 1) * pn_;
        pnm1_ = pn_;
        pn_ = pnext;
        dnm1_ = dn_;
        dn_ = dnext;
        ++n_;
        return {pn_, dn_};
    }

  private:
    double u_;
    double pn_ = 1.0, pnm1_ = 0.0;
    double dn_ = 0.0, dnm1_ = 0.0;
    int n_ = -1;
};

}  // namespace greenlab
