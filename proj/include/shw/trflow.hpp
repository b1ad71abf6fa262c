#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shw::trflow {

// Finite-dimensional time-reversal-invariant family A(t) = D + tR on R^{2n}
// carrying the complex structure J (J^2 = -I): D commutes with J
// (complex-linear), R anticommutes (conjugate-linear), so that
// A(-t) = J A(t) J^{-1} identically.  The "geometric" flag additionally
// asserts D^T R + R^T D = 0 and R^T R = c I with c > 0.
struct TRFamily {
    int n = 0;  // complex dimension; matrices are 2n x 2n
    Eigen::MatrixXd J, D, R;
    bool geometric = false;

    Eigen::MatrixXd at(double t) const { return D + t * R; }
};

enum class BlockTag { invertible, kernel };

std::optional<BlockTag> parse_block_tag(std::string_view text);
const char* block_tag_name(BlockTag tag);
std::vector<BlockTag> parse_block_spec(std::string_view text);  // "kernel,invertible"

// Direct sum of elementary blocks, all geometric with R^T R = scale^2 I:
//   kernel      on C^1:  D = 0,           R z = scale * conj(z)
//   invertible  on C^2:  D = diag(1,-1),  R (z1,z2) = scale (conj z2, conj z1)
// With conjugate=true the sum is conjugated by a seeded random real
// orthogonal matrix and J is tracked along.
TRFamily make_block_family(const std::vector<BlockTag>& spec, double scale,
                           std::uint64_t seed, bool conjugate = false);

TRFamily direct_sum(const TRFamily& a, const TRFamily& b);

enum class SFMethod { by_determinant, by_kernel };

struct SFResult {
    int sign = +1;  // the TR spectral flow, +1 or -1
    std::optional<int> kernel_dim_complex;
    double min_singular_value_along_path = 0.0;
    SFMethod method = SFMethod::by_determinant;
};

// SF = sgn det A(t_max), valid once A stays nonsingular past t_max; the
// complex orientation makes the sign canonical (det of a complex-linear
// invertible map is positive).  Scans `samples` points of [t_max, 2 t_max]
// and throws SingularAtEvaluation if any singular value drops below 1e-9.
SFResult sf_by_determinant(const TRFamily& f, double t_max, int samples = 16);

// SF = (-1)^{dim_C ker A(0)}, valid when R maps ker A(0) isomorphically to
// coker A(0).  Kernel detection uses singular threshold 1e-9 with a 10^3
// spectral-gap factor; throws HypothesisFailed if the spectrum does not
// split cleanly or the restriction is not an isomorphism, OddRealKernel if
// the real kernel dimension is odd.
SFResult sf_by_kernel(const TRFamily& f);

struct VanishingReport {
    std::vector<double> t_grid;
    std::vector<double> min_singular_value;  // per grid point
    double bound_constant = 0.0;             // derived c with sigma_min >= c|t|
    bool bound_holds = true;
    double max_identity_residual = 0.0;      // |A(t)x|^2 - |Dx|^2 - t^2|Rx|^2
};

// Checks the vanishing mechanism on a geometric family: the quadratic
// identity |A(t)x|^2 = |Dx|^2 + t^2 |Rx|^2 on random unit vectors, and the
// lower bound sigma_min(A(t)) >= c|t| it implies when R is injective.
VanishingReport vanishing_check(const TRFamily& f, const std::vector<double>& t_grid,
                                int random_vectors = 100, std::uint64_t seed = 1);

// max over 11 sampled t of ||A(-t) - J A(t) J^{-1}||; identically zero up to
// rounding for well-formed families.
double tr_invariance_residual(const TRFamily& f, double t_max = 1.0, int samples = 11);

}  // namespace shw::trflow
