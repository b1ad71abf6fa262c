#pragma once

#include <cstdint>
#include <vector>

#include "shw/partition.hpp"

namespace shw {

inline constexpr int kMaxEnumerationDegree = 8;

// A permutation of {0,...,d-1} stored as its image list.
class Perm {
public:
    explicit Perm(std::vector<int> images);
    static Perm identity(int d);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    bool operator==(const Perm&) const = default;

private:
    std::vector<int> images_;
};

// (a*b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
Perm commutator(const Perm& a, const Perm& b);  // a b a^-1 b^-1
Partition cycle_type(const Perm& p);

// All permutations of S_d, in lexicographic image order.
std::vector<Perm> all_permutations(int d);

// The conjugacy class of cycle type mu in S_d.  Requires d <= 8; throws
// OracleBudgetExceeded if the class has more than max_elements members.
std::vector<Perm> enumerate_class(int d, const Partition& mu,
                                  std::uint64_t max_elements = 1'000'000);

}  // namespace shw
