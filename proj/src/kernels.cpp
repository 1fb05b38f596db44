#include "hodgelets/kernels.hpp"

#include "hodgelets/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hodgelets {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Hann window on [-1/2, 1/2].
double hann(double t) {
    if (std::abs(t) > 0.5) return 0.0;
    return 0.5 + 0.5 * std::cos(kTwoPi * t);
}

// Raw (unnormalized) kernel values of a Hann bank. lambda = 0 maps to
// warped -infinity: band-pass kernels vanish there and the low-pass sits on
// its plateau sqrt(c*).
void hann_values(const KernelBank& bank, double lambda, Eigen::VectorXd& out) {
    out.setZero(bank.m_count);
    const bool at_dc = lambda <= 0.0;
    const double w = at_dc ? 0.0 : std::log(lambda / bank.lambda_floor);

    double band_sq = 0.0;
    for (int m = 2; m <= bank.m_count; ++m) {
        double g = at_dc ? 0.0
                         : hann((w - bank.centers[static_cast<std::size_t>(m - 2)]) / bank.width);
        out[m - 1] = g;
        band_sq += g * g;
    }

    // low-pass: fills the squared sum up to c* at and below the first
    // windows, zero past the point where the band-pass windows alone reach c*
    const double delta = bank.width / bank.overlap;
    const double cut = bank.centers.front() + (0.5 * bank.overlap - 1.0) * delta;
    if (at_dc || w <= cut) out[0] = std::sqrt(std::max(0.0, bank.c_star - band_sq));
}

void raw_values(const KernelBank& bank, double lambda, Eigen::VectorXd& out) {
    if (bank.is_manual()) {
        out.resize(bank.m_count);
        for (int m = 0; m < bank.m_count; ++m)
            out[m] = bank.manual[static_cast<std::size_t>(m)](lambda);
    } else {
        hann_values(bank, lambda, out);
    }
}

// Scale from the normalization table, 1 when lambda is between recorded
// eigenvalues.
double norm_scale(const KernelBank& bank, double lambda) {
    if (!bank.is_normalized()) return 1.0;
    auto it = std::lower_bound(bank.norm_lambdas.begin(), bank.norm_lambdas.end(), lambda);
    double best = -1.0;
    std::size_t arg = 0;
    auto consider = [&](std::size_t i) {
        double d = std::abs(bank.norm_lambdas[i] - lambda);
        if (best < 0.0 || d < best) { best = d; arg = i; }
    };
    if (it != bank.norm_lambdas.end()) consider(static_cast<std::size_t>(it - bank.norm_lambdas.begin()));
    if (it != bank.norm_lambdas.begin()) consider(static_cast<std::size_t>(it - bank.norm_lambdas.begin()) - 1);
    if (best >= 0.0 && best <= 1e-9 * (1.0 + std::abs(lambda)))
        return bank.norm_scales[arg];
    return 1.0;
}

} // namespace

KernelBank hann_bank(double lambda_max, int m_count, int overlap,
                     const std::vector<double>& spectrum_for_floor) {
    if (lambda_max <= 0.0) throw std::invalid_argument("hann_bank: lambda_max must be positive");
    if (m_count < 2) throw std::invalid_argument("hann_bank: need at least 2 kernels");
    if (overlap < 2) throw std::invalid_argument("hann_bank: overlap must be >= 2");

    KernelBank bank;
    bank.m_count = m_count;
    bank.overlap = overlap;
    bank.lambda_max = lambda_max;
    bank.c_star = 3.0 * overlap / 8.0;
    bank.includes_dc = true;

    double floor = 1e-4 * lambda_max;
    double smallest = 0.0;
    for (double ev : spectrum_for_floor)
        if (ev > 1e-8 * lambda_max && (smallest == 0.0 || ev < smallest)) smallest = ev;
    if (smallest > 0.0) floor = smallest;
    // keep the warped span nondegenerate when the spectrum has a single
    // distinct nonzero eigenvalue
    bank.lambda_floor = std::min(floor, 0.5 * lambda_max);

    const double span = std::log(lambda_max / bank.lambda_floor);
    const double delta = span / (m_count - 1);
    bank.width = overlap * delta;
    bank.centers.resize(static_cast<std::size_t>(m_count - 1));
    for (int m = 2; m <= m_count; ++m)
        bank.centers[static_cast<std::size_t>(m - 2)] = (m - 1) * delta;
    return bank;
}

KernelBank manual_bank(std::vector<std::function<double(double)>> kernels, double c_star) {
    if (kernels.empty()) throw std::invalid_argument("manual_bank: empty kernel list");
    KernelBank bank;
    bank.m_count = static_cast<int>(kernels.size());
    bank.overlap = 2;
    bank.c_star = c_star;
    bank.manual = std::move(kernels);
    bank.includes_dc = false;
    for (const auto& g : bank.manual)
        if (g(0.0) != 0.0) bank.includes_dc = true;
    return bank;
}

Eigen::VectorXd evaluate(const KernelBank& bank, double lambda) {
    if (lambda < 0.0) throw std::invalid_argument("evaluate: negative eigenvalue");
    Eigen::VectorXd out;
    raw_values(bank, lambda, out);
    double s = norm_scale(bank, lambda);
    if (s != 1.0) out *= s;
    return out;
}

double g_sum(const KernelBank& bank, double lambda) {
    return evaluate(bank, lambda).squaredNorm();
}

KernelBank normalize_on_spectrum(const KernelBank& bank,
                                 const std::vector<double>& eigenvalues) {
    if (eigenvalues.empty())
        throw std::invalid_argument("normalize_on_spectrum: empty spectrum");

    std::vector<double> distinct(eigenvalues);
    for (double& ev : distinct) ev = std::max(0.0, ev);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end(),
                               [](double a, double b) {
                                   return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b));
                               }),
                   distinct.end());

    KernelBank out = bank;
    out.norm_lambdas.clear();
    out.norm_scales.clear();
    Eigen::VectorXd vals;
    for (double ev : distinct) {
        raw_values(bank, ev, vals);
        double g = vals.squaredNorm();
        if (g <= 1e-12 * bank.c_star)
            throw NumericalError("normalize_on_spectrum: eigenvalue " + std::to_string(ev) +
                                 " not covered by any kernel (degenerate frame)");
        out.norm_lambdas.push_back(ev);
        out.norm_scales.push_back(std::sqrt(bank.c_star / g));
    }
    return out;
}

} // namespace hodgelets
