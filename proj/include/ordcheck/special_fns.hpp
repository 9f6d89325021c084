#pragma once

namespace ordcheck {

// Kernels of the Weibull reverse-hazard representation. A component with
// shape alpha and rate lambda has reverse hazard (alpha/t) * u((lambda t)^alpha)
// with u(x) = x/(e^x - 1); the companions v, s, w drive the monotonicity
// arguments behind the order checks:
//
//   u(x) = x / (e^x - 1)                  decreasing, u(0) = 1
//   v(x) = x / (1 - e^-x) = x + u(x)      increasing, v(0) = 1
//   s(x) = 1 - v(x)                       decreasing, s(0) = 0, s <= 0
//   w(x) = x e^x (1 + x - e^x)/(e^x - 1)^3 = u(x) * ds/dx,  w(0) = -1/2
//
// The *_scaled functions take the already-scaled argument x (standing for
// t^alpha); they are total on [0, +inf] with limit values at the endpoints.

[[nodiscard]] double kernel_u_scaled(double x) noexcept;
[[nodiscard]] double kernel_v_scaled(double x) noexcept;
[[nodiscard]] double kernel_s_scaled(double x) noexcept;
[[nodiscard]] double kernel_w_scaled(double x) noexcept;

// log of kernel_u_scaled; finite for all finite x >= 0, safe in tails where
// kernel_u_scaled underflows to zero.
[[nodiscard]] double log_kernel_u_scaled(double x) noexcept;

// Time-domain forms: argument t >= 0 (strictly positive for the derivative),
// shape alpha > 0. Throw std::domain_error outside the domain.
//
// u, v, s are evaluated as their scaled forms at x = t^alpha. w is
//   w(t) = alpha t^(2 alpha - 1) e^{t^a}(1 + t^a - e^{t^a}) / (e^{t^a} - 1)^3
//        = alpha t^(alpha-1) * kernel_w_scaled(t^alpha),
// nonpositive everywhere and increasing in t for alpha <= 1. Its t -> 0+
// limit depends on the shape: 0 for alpha > 1, -1/2 for alpha = 1, and
// -infinity for alpha < 1 (w ~ -(alpha/2) t^(alpha-1)); kernel_w returns
// those limits at t = 0.
[[nodiscard]] double kernel_u(double t, double alpha);
[[nodiscard]] double kernel_v(double t, double alpha);
[[nodiscard]] double kernel_s(double t, double alpha);
[[nodiscard]] double kernel_w(double t, double alpha);

// du/dt = (alpha/t) u(t^alpha) s(t^alpha); requires t > 0. Nonpositive.
[[nodiscard]] double kernel_u_prime(double t, double alpha);

} // namespace ordcheck
