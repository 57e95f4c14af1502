#include "rholab/qform.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "rholab/io.hpp"
#include "rholab/modular.hpp"

namespace rholab {

QFormInstance::QFormInstance(std::uint64_t n) : n_(n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("QFormInstance: n must be odd and >= 3");
    lambdas_.resize(n);
    lambdas_[0] = 0.0;
    for (std::uint64_t k = 1; k < n; ++k)
        lambdas_[k] = std::abs(std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
}

double q_eval(std::span<const double> x, const QFormInstance& inst) {
    const std::uint64_t n = inst.n();
    if (x.size() != n - 1) throw std::invalid_argument("q_eval: vector must have length n-1");
    double q = 0;
    for (std::uint64_t k = 1; k < n; ++k) {
        const std::uint64_t k2 = add_mod(k, k, n);  // never 0 for odd n
        q += x[k - 1] * x[k2 - 1] * inst.lambda(k);
    }
    return q;
}

double q_norm(std::uint64_t n, std::size_t ceiling) {
    if (n > ceiling) throw std::invalid_argument("q_norm: n exceeds the dense ceiling");
    const QFormInstance inst(n);
    const auto dim = static_cast<Eigen::Index>(n - 1);
    Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(dim, dim);
    for (std::uint64_t k = 1; k < n; ++k) {
        const std::uint64_t k2 = add_mod(k, k, n);
        sym(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(k2 - 1)) += inst.lambda(k) / 2.0;
        sym(static_cast<Eigen::Index>(k2 - 1), static_cast<Eigen::Index>(k - 1)) += inst.lambda(k) / 2.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    return std::max(std::abs(es.eigenvalues().minCoeff()), std::abs(es.eigenvalues().maxCoeff()));
}

double GammaCertificate::ladder(int s) const {
    const double ln = std::log(static_cast<double>(n));
    return 1.0 - static_cast<double>(s) * d / (ln * ln);
}

namespace {

// k is on the plateau iff n/4 <= k <= 3n/4; exact in integers since n is odd.
bool on_plateau(std::uint64_t k, std::uint64_t n) {
    const auto k4 = static_cast<unsigned __int128>(k) * 4;
    return k4 >= n && k4 <= static_cast<unsigned __int128>(n) * 3;
}

// 2-adic depth of the representative of k in (-n/4, n/4); call only off the
// plateau.
int depth_of(std::uint64_t k, std::uint64_t n) {
    const std::uint64_t abs_rep = static_cast<unsigned __int128>(k) * 4 < n ? k : n - k;
    return std::countr_zero(abs_rep);
}

} // namespace

GammaCertificate gamma_build(std::uint64_t n, double d) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("gamma_build: n must be odd and >= 3");
    if (d <= 0) throw std::invalid_argument("gamma_build: d must be positive");
    GammaCertificate cert;
    cert.n = n;
    cert.d = d;
    cert.gamma.assign(n, 0.0);
    cert.dyadic_depth.assign(n, -1);
    cert.off_plateau.assign(n, 0);
    for (std::uint64_t k = 1; k < n; ++k) {
        if (on_plateau(k, n)) {
            cert.gamma[k] = 1.0;
            continue;
        }
        const int s = depth_of(k, n);
        const double t = cert.ladder(s);
        if (t <= 0)
            throw std::invalid_argument("gamma_build: d too large, ladder reaches zero at depth " +
                                        std::to_string(s));
        cert.gamma[k] = t;
        cert.dyadic_depth[k] = s;
        cert.off_plateau[k] = 1;
    }
    return cert;
}

CertificateCheck verify_certificate(const GammaCertificate& cert) {
    const std::uint64_t n = cert.n;
    const QFormInstance inst(n);
    const std::uint64_t half = n / 2 + 1;  // inverse of 2 mod n
    CertificateCheck out;
    out.max_lhs = 0;
    for (std::uint64_t k = 1; k < n; ++k) {
        const std::uint64_t hk = mul_mod(half, k, n);
        const double lhs = cert.gamma[k] * inst.lambda(k) + inst.lambda(hk) / cert.gamma[hk];
        if (lhs > out.max_lhs) {
            out.max_lhs = lhs;
            out.worst_k = k;
        }
    }
    out.ok = out.max_lhs < 2.0;
    out.margin = 2.0 - out.max_lhs;
    const double ln = std::log(static_cast<double>(n));
    out.certified_c = out.margin * ln * ln;
    out.form_bound = out.max_lhs / 2.0;
    return out;
}

double default_gamma_d(std::uint64_t n, std::span<const double> grid) {
    static constexpr std::array<double, 3> kDefaultGrid = {0.05, 0.1, 0.2};
    if (grid.empty()) grid = kDefaultGrid;
    double best_d = grid.front();
    double best_margin = -1.0;
    for (double d : grid) {
        try {
            const CertificateCheck check = verify_certificate(gamma_build(n, d));
            if (check.ok && check.margin > best_margin) {
                best_margin = check.margin;
                best_d = d;
            }
        } catch (const std::invalid_argument&) {
            // ladder collapsed for this d; skip it
        }
    }
    if (best_margin <= 0) throw std::invalid_argument("default_gamma_d: no grid value certifies n=" + std::to_string(n));
    return best_d;
}

std::string certificate_to_csv(const GammaCertificate& cert) {
    const std::uint64_t n = cert.n;
    const QFormInstance inst(n);
    const std::uint64_t half = n / 2 + 1;
    csv::Builder b;
    b.cell("k").cell("lambda_k").cell("gamma_k").cell("case").cell("lhs").end_row();
    for (std::uint64_t k = 1; k < n; ++k) {
        const std::uint64_t hk = mul_mod(half, k, n);
        const double lhs = cert.gamma[k] * inst.lambda(k) + inst.lambda(hk) / cert.gamma[hk];
        const unsigned c = cert.off_plateau[k] ? (cert.off_plateau[hk] ? 4u : 3u)
                                               : (cert.off_plateau[hk] ? 2u : 1u);
        b.cell(k).cell(inst.lambda(k)).cell(cert.gamma[k]).cell(static_cast<std::uint64_t>(c)).cell(lhs).end_row();
    }
    return b.take();
}

} // namespace rholab
