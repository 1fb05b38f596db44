#ifndef HODGELETS_KERNELS_HPP
#define HODGELETS_KERNELS_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace hodgelets {

// A family of nonnegative spectral kernels g_1..g_M evaluated on Laplacian
// eigenvalues. The built-in construction is a bank of log-warped Hann windows
// plus a low-pass kernel covering lambda = 0; manual kernel lists are
// supported for tests. An optional per-eigenvalue normalization table rescales
// values so the squared kernel sum is constant on a given spectrum.
struct KernelBank {
    int m_count = 0;      // M
    int overlap = 0;      // R
    double lambda_floor = 0.0;
    double lambda_max = 0.0;
    std::vector<double> centers; // warped-axis centers of kernels 2..M
    double width = 0.0;          // warped-axis window width (R * delta)
    double c_star = 0.0;         // target constant for the squared kernel sum
    bool includes_dc = false;    // kernel 1 is nonzero at lambda = 0

    std::vector<std::function<double(double)>> manual; // overrides the Hann rule

    std::vector<double> norm_lambdas; // sorted; empty when unnormalized
    std::vector<double> norm_scales;

    bool is_manual() const { return !manual.empty(); }
    bool is_normalized() const { return !norm_lambdas.empty(); }
};

// Log-scaled Hann bank: kernels 2..M are translates of the Hann window
// h(t) = 0.5 + 0.5*cos(2*pi*t), |t| <= 1/2, on the warped axis
// w(lambda) = log(lambda / lambda_floor), spaced delta = w(lambda_max)/(M-1)
// with width R*delta. Kernel 1 fills the squared sum up to the interior
// constant c* = 3R/8 below the first windows and plateaus at sqrt(c*) as
// lambda -> 0. lambda_floor is the smallest nonzero eigenvalue of
// spectrum_for_floor (fallback 1e-4 * lambda_max).
KernelBank hann_bank(double lambda_max, int m_count, int overlap,
                     const std::vector<double>& spectrum_for_floor);

// Bank from explicit kernel functions; used by tests and baselines.
KernelBank manual_bank(std::vector<std::function<double(double)>> kernels,
                       double c_star = 1.0);

// Pointwise kernel values at lambda >= 0, normalization applied when present.
Eigen::VectorXd evaluate(const KernelBank& bank, double lambda);

// G(lambda) = sum_m |g_m(lambda)|^2.
double g_sum(const KernelBank& bank, double lambda);

// Records per-distinct-eigenvalue scales sqrt(c*/G(lambda)) so that the
// squared sum equals c* on the given spectrum. Throws NumericalError when an
// eigenvalue is uncovered (G = 0, a degenerate frame).
KernelBank normalize_on_spectrum(const KernelBank& bank,
                                 const std::vector<double>& eigenvalues);

} // namespace hodgelets

#endif
