#pragma once

#include "ordcheck/weibull.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ordcheck {

// Raised when an evaluation lands so deep in a tail that even the log-domain
// path has no representable value (all component kernels at -inf).
class TailUnderflowError : public std::range_error {
public:
    TailUnderflowError() : std::range_error("reverse hazard underflows beyond the representable tail") {}
};

// Lifetime of a parallel system of independent Weibull components with a
// common shape and heterogeneous rates:
//
//   F(t) = prod_i F_i(t)
//   r(t) = sum_i r_i(t) = (alpha/t) sum_i u((lambda_i t)^alpha)
//   f(t) = F(t) r(t)
//
// Rates are stored in the order given; every evaluation is permutation
// invariant.
class ParallelSystem {
public:
    ParallelSystem(double alpha, std::vector<double> lambdas);

    // p components at rate lambda1 followed by q at rate lambda2.
    static ParallelSystem multiple_outlier(double alpha, std::size_t p, double lambda1,
                                           std::size_t q, double lambda2);

    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] const std::vector<double>& lambdas() const noexcept { return lambdas_; }
    [[nodiscard]] std::size_t size() const noexcept { return lambdas_.size(); }
    [[nodiscard]] WeibullParams component(std::size_t i) const { return {alpha_, lambdas_.at(i)}; }

    [[nodiscard]] double cdf(double t) const;
    [[nodiscard]] double log_cdf(double t) const;
    [[nodiscard]] double survival(double t) const;
    [[nodiscard]] double log_survival(double t) const;

    [[nodiscard]] double reverse_hazard(double t) const;     // t > 0
    [[nodiscard]] double log_reverse_hazard(double t) const; // t > 0, tail-safe

    [[nodiscard]] double pdf(double t) const;     // t > 0
    [[nodiscard]] double log_pdf(double t) const; // t > 0

    // d/dt log f(t) = r(t) + (sum_i r_i'(t)) / (sum_i r_i(t)), assembled from
    // the closed forms r_i = (alpha/t) u_i and u' = (alpha/t) u s. Evaluated
    // with softmax weights so deep tails stay finite; throws
    // TailUnderflowError only when every kernel log is -inf.
    [[nodiscard]] double dlog_pdf(double t) const;

    // Solves cdf(t) = q by bracketed bisection plus secant polish, relative
    // accuracy ~1e-12. Brackets come from component quantiles at q and q^(1/n).
    [[nodiscard]] double quantile(double q) const;

private:
    double alpha_;
    std::vector<double> lambdas_;
};

} // namespace ordcheck
