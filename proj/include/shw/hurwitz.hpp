#pragma once

#include <cstdint>
#include <vector>

#include "shw/partition.hpp"
#include "shw/rational.hpp"

namespace shw {

// Degree-d covers of a genus-h curve with ramification profiles m^1..m^k,
// possibly disconnected domains.
struct ClassicalQuery {
    int h = 0;
    int d = 1;
    std::vector<Partition> profiles;
};

// Frobenius character-sum evaluation
//   H = sum_lambda (d!/dim)^{2h-2} prod_i |C_{m^i}| chi_lambda(m^i) / dim.
// Exact; requires d <= kMaxCharacterDegree and every profile to sum to d.
Rational classical_hurwitz(const ClassicalQuery& q, const std::string& cache_dir = "");

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

// Number of group compositions the brute-force count would perform.
std::uint64_t brute_force_cost(const ClassicalQuery& q);

// Independent oracle: counts tuples (a_1,b_1,..,a_h,b_h,s_1,..,s_k) with
// prod [a_i,b_i] prod s_j = id and s_j of cycle type m^j, weighted 1/d!.
// Requires d <= 6 and brute_force_cost(q) <= budget.
Rational brute_force_hurwitz(const ClassicalQuery& q,
                             std::uint64_t budget = kDefaultOracleBudget);

}  // namespace shw
