#pragma once

// The index-doubling quadratic form Q(x) = sum_k x_k x_{2k} lambda_k with
// lambda_k = |cos(pi k / n)|, its exact sphere maximum, and the explicit
// weight system that certifies the maximum is bounded away from 1.
//
// The certificate assigns a weight gamma_k to every index: 1 on the middle
// plateau n/4 <= k <= 3n/4 (where lambda_k <= 1/sqrt 2), and a dyadic ladder
// value t_s = 1 - s*d/(ln n)^2 elsewhere, with s the 2-adic depth of the
// representative of k in (-n/4, n/4). Splitting each cross term by the
// weighted AM-GM inequality turns |Q| into a per-index test:
//
//     gamma_k lambda_k + gamma_{k/2}^{-1} lambda_{k/2} < 2 - c/(ln n)^2
//
// (indices halved mod n). verify_certificate evaluates that left side
// exactly for every k; when the maximum stays below 2 the form satisfies
// max |Q| <= max_lhs / 2 on the unit sphere.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rholab {

class QFormInstance {
public:
    explicit QFormInstance(std::uint64_t n);  // n odd, >= 3

    std::uint64_t n() const noexcept { return n_; }
    double lambda(std::uint64_t k) const { return lambdas_[k]; }
    std::span<const double> lambdas() const noexcept { return lambdas_; }  // slot 0 unused

private:
    std::uint64_t n_;
    std::vector<double> lambdas_;
};

// Q over vectors indexed 1..n-1; x[k-1] holds x_k.
double q_eval(std::span<const double> x, const QFormInstance& inst);

// Exact max of |Q| over the unit sphere: the extreme eigenvalue of the
// symmetrized coefficient matrix, via a dense symmetric eigendecomposition.
double q_norm(std::uint64_t n, std::size_t ceiling = 4096);

struct GammaCertificate {
    std::uint64_t n = 0;
    double d = 0;
    std::vector<double> gamma;      // slot 0 unused
    std::vector<int> dyadic_depth;  // -1 on the plateau
    std::vector<std::uint8_t> off_plateau;

    // ladder value t_s
    double ladder(int s) const;
};

// Builds the weight system for a given d > 0. Throws std::invalid_argument
// when d is so large that some ladder value would be non-positive.
GammaCertificate gamma_build(std::uint64_t n, double d);

struct CertificateCheck {
    bool ok = false;          // max_lhs < 2
    double max_lhs = 0;       // worst per-index left side
    std::uint64_t worst_k = 0;
    double margin = 0;        // 2 - max_lhs
    double certified_c = 0;   // margin * (ln n)^2
    double form_bound = 0;    // max_lhs / 2, an upper bound for max |Q|
};

CertificateCheck verify_certificate(const GammaCertificate& cert);

// Largest-margin d from a grid (default {0.05, 0.1, 0.2}).
double default_gamma_d(std::uint64_t n, std::span<const double> grid = {});

// audit columns: k,lambda_k,gamma_k,case,lhs
// case 1: neither index off-plateau; 2: only the halved index; 3: only k;
// case 4: both.
std::string certificate_to_csv(const GammaCertificate& cert);

} // namespace rholab
