#pragma once

#include <stdexcept>
#include <string>

namespace shw {

// Stable error codes surfaced through the CLI.
enum class errc {
    degree_out_of_range,
    profile_degree_mismatch,
    oracle_budget_exceeded,
    unrealizable_spin_structure,
    not_odd_profile,
    base_case_unavailable,
    invalid_split,
    singular_at_evaluation,
    hypothesis_failed,
    odd_real_kernel,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace shw
