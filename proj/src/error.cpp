#include "shw/error.hpp"

namespace shw {

const char* errc_name(errc code) {
    switch (code) {
        case errc::degree_out_of_range: return "DegreeOutOfRange";
        case errc::profile_degree_mismatch: return "ProfileDegreeMismatch";
        case errc::oracle_budget_exceeded: return "OracleBudgetExceeded";
        case errc::unrealizable_spin_structure: return "UnrealizableSpinStructure";
        case errc::not_odd_profile: return "NotOddProfile";
        case errc::base_case_unavailable: return "BaseCaseUnavailable";
        case errc::invalid_split: return "InvalidSplit";
        case errc::singular_at_evaluation: return "SingularAtEvaluation";
        case errc::hypothesis_failed: return "HypothesisFailed";
        case errc::odd_real_kernel: return "OddRealKernel";
    }
    return "UnknownError";
}

}  // namespace shw
