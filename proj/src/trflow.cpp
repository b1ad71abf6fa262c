#include "shw/trflow.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <random>
#include <stdexcept>

#include "shw/error.hpp"

namespace shw::trflow {

namespace {

constexpr double kSingularThreshold = 1e-9;
constexpr double kSpectralGapFactor = 1e3;
constexpr double kStructureTolerance = 1e-9;

Eigen::MatrixXd random_orthogonal(int size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd g(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) g(i, j) = gauss(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    return qr.householderQ();
}

double min_singular_value(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues().tail(1)(0);
}

bool is_geometric(const Eigen::MatrixXd& d, const Eigen::MatrixXd& r) {
    Eigen::MatrixXd cross = d.transpose() * r + r.transpose() * d;
    if (cross.cwiseAbs().maxCoeff() > kStructureTolerance) return false;
    Eigen::MatrixXd gram = r.transpose() * r;
    double c = gram.trace() / gram.rows();
    if (c <= 0) return false;
    Eigen::MatrixXd dev = gram - c * Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
    return dev.cwiseAbs().maxCoeff() <= kStructureTolerance * std::max(1.0, c);
}

}  // namespace

std::optional<BlockTag> parse_block_tag(std::string_view text) {
    if (text == "invertible") return BlockTag::invertible;
    if (text == "kernel") return BlockTag::kernel;
    return std::nullopt;
}

const char* block_tag_name(BlockTag tag) {
    return tag == BlockTag::invertible ? "invertible" : "kernel";
}

std::vector<BlockTag> parse_block_spec(std::string_view text) {
    std::vector<BlockTag> out;
    size_t i = 0;
    while (i <= text.size()) {
        size_t j = text.find(',', i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view tok = text.substr(i, j - i);
        size_t a = tok.find_first_not_of(' ');
        if (a != std::string_view::npos) {
            size_t b = tok.find_last_not_of(' ');
            tok = tok.substr(a, b - a + 1);
            auto tag = parse_block_tag(tok);
            if (!tag) throw std::invalid_argument("unknown block tag '" + std::string(tok) + "'");
            out.push_back(*tag);
        }
        if (j == text.size()) break;
        i = j + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty block spec");
    return out;
}

TRFamily make_block_family(const std::vector<BlockTag>& spec, double scale,
                           std::uint64_t seed, bool conjugate) {
    if (spec.empty()) throw std::invalid_argument("empty block spec");
    if (scale <= 0) throw std::invalid_argument("scale must be positive");

    int n = 0;
    for (BlockTag tag : spec) n += (tag == BlockTag::kernel) ? 1 : 2;
    int size = 2 * n;

    TRFamily f;
    f.n = n;
    f.J = Eigen::MatrixXd::Zero(size, size);
    f.D = Eigen::MatrixXd::Zero(size, size);
    f.R = Eigen::MatrixXd::Zero(size, size);

    // complex coordinate c occupies real rows/cols 2c (Re) and 2c+1 (Im)
    for (int c = 0; c < n; ++c) {
        f.J(2 * c, 2 * c + 1) = -1.0;
        f.J(2 * c + 1, 2 * c) = 1.0;
    }
    auto put_conj = [&](int row_coord, int col_coord, double a) {
        // conjugate-linear z -> a*conj(z) from coordinate col to coordinate row
        f.R(2 * row_coord, 2 * col_coord) = a;
        f.R(2 * row_coord + 1, 2 * col_coord + 1) = -a;
    };

    int c = 0;
    for (BlockTag tag : spec) {
        if (tag == BlockTag::kernel) {
            put_conj(c, c, scale);  // D = 0 on this coordinate
            c += 1;
        } else {
            f.D(2 * c, 2 * c) = 1.0;
            f.D(2 * c + 1, 2 * c + 1) = 1.0;
            f.D(2 * (c + 1), 2 * (c + 1)) = -1.0;
            f.D(2 * (c + 1) + 1, 2 * (c + 1) + 1) = -1.0;
            put_conj(c, c + 1, scale);
            put_conj(c + 1, c, scale);
            c += 2;
        }
    }

    if (conjugate) {
        Eigen::MatrixXd q = random_orthogonal(size, seed);
        f.J = q * f.J * q.transpose();
        f.D = q * f.D * q.transpose();
        f.R = q * f.R * q.transpose();
    }
    f.geometric = true;
    return f;
}

TRFamily direct_sum(const TRFamily& a, const TRFamily& b) {
    TRFamily f;
    f.n = a.n + b.n;
    int size = 2 * f.n;
    f.J = Eigen::MatrixXd::Zero(size, size);
    f.D = Eigen::MatrixXd::Zero(size, size);
    f.R = Eigen::MatrixXd::Zero(size, size);
    int as = 2 * a.n;
    f.J.topLeftCorner(as, as) = a.J;
    f.D.topLeftCorner(as, as) = a.D;
    f.R.topLeftCorner(as, as) = a.R;
    f.J.bottomRightCorner(size - as, size - as) = b.J;
    f.D.bottomRightCorner(size - as, size - as) = b.D;
    f.R.bottomRightCorner(size - as, size - as) = b.R;
    // R^T R = c I needs a common c across the summands
    f.geometric = a.geometric && b.geometric && is_geometric(f.D, f.R);
    return f;
}

SFResult sf_by_determinant(const TRFamily& f, double t_max, int samples) {
    if (t_max <= 0) throw std::invalid_argument("t_max must be positive");
    if (samples < 1) throw std::invalid_argument("samples must be positive");

    double min_sv = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? t_max : t_max * (1.0 + double(i) / (samples - 1));
        min_sv = std::min(min_sv, min_singular_value(f.at(t)));
    }
    if (min_sv <= kSingularThreshold)
        throw Error(errc::singular_at_evaluation,
                    "A(t) nearly singular on [t_max, 2 t_max]; pick t_max past the last crossing");

    double det = f.at(t_max).determinant();
    SFResult r;
    r.sign = det > 0 ? +1 : -1;
    r.min_singular_value_along_path = min_sv;
    r.method = SFMethod::by_determinant;
    return r;
}

SFResult sf_by_kernel(const TRFamily& f) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(f.D, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();  // decreasing
    int size = static_cast<int>(sv.size());

    int kernel_dim = 0;
    while (kernel_dim < size && sv(size - 1 - kernel_dim) < kSingularThreshold) ++kernel_dim;
    if (kernel_dim < size) {
        double smallest_nonzero = sv(size - 1 - kernel_dim);
        if (smallest_nonzero < kSingularThreshold * kSpectralGapFactor)
            throw Error(errc::hypothesis_failed,
                        "singular values of A(0) do not split cleanly at the kernel threshold");
    }
    if (kernel_dim % 2 != 0)
        throw Error(errc::odd_real_kernel,
                    "kernel has odd real dimension " + std::to_string(kernel_dim));

    SFResult r;
    r.method = SFMethod::by_kernel;
    r.kernel_dim_complex = kernel_dim / 2;
    if (kernel_dim == 0) {
        r.sign = +1;
        r.min_singular_value_along_path = sv(size - 1);
        return r;
    }

    // restriction of Adot(0) = R to ker A(0), expressed in the cokernel basis
    Eigen::MatrixXd kernel_basis = svd.matrixV().rightCols(kernel_dim);
    Eigen::MatrixXd cokernel_basis = svd.matrixU().rightCols(kernel_dim);
    Eigen::MatrixXd restriction = cokernel_basis.transpose() * f.R * kernel_basis;
    double smallest = min_singular_value(restriction);
    if (smallest <= kSingularThreshold)
        throw Error(errc::hypothesis_failed,
                    "R does not map ker A(0) isomorphically onto coker A(0)");

    r.sign = (kernel_dim / 2) % 2 == 0 ? +1 : -1;
    r.min_singular_value_along_path = smallest;
    return r;
}

VanishingReport vanishing_check(const TRFamily& f, const std::vector<double>& t_grid,
                                int random_vectors, std::uint64_t seed) {
    if (!f.geometric)
        throw std::invalid_argument("vanishing_check needs a geometric family");

    VanishingReport report;
    report.t_grid = t_grid;
    report.bound_constant = min_singular_value(f.R);

    for (double t : t_grid) {
        double sv = min_singular_value(f.at(t));
        report.min_singular_value.push_back(sv);
        if (sv + 1e-9 < report.bound_constant * std::abs(t)) report.bound_holds = false;
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int size = 2 * f.n;
    for (int v = 0; v < random_vectors; ++v) {
        Eigen::VectorXd x(size);
        for (int i = 0; i < size; ++i) x(i) = gauss(rng);
        x.normalize();
        double dx = (f.D * x).squaredNorm();
        double rx = (f.R * x).squaredNorm();
        for (double t : t_grid) {
            double lhs = (f.at(t) * x).squaredNorm();
            double residual = std::abs(lhs - dx - t * t * rx);
            report.max_identity_residual = std::max(report.max_identity_residual, residual);
        }
    }
    return report;
}

double tr_invariance_residual(const TRFamily& f, double t_max, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? t_max : -t_max + 2.0 * t_max * double(i) / (samples - 1);
        // J^{-1} = -J
        Eigen::MatrixXd residual = f.at(-t) + f.J * f.at(t) * f.J;
        worst = std::max(worst, residual.cwiseAbs().maxCoeff());
    }
    return worst;
}

}  // namespace shw::trflow
