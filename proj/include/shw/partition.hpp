#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shw/rational.hpp"

namespace shw {

// Largest degree we enumerate partitions (and hence profiles) for.
inline constexpr int kMaxDegree = 20;

// A ramification profile: weakly decreasing positive parts with cached sum.
// Immutable after construction; the canonical form is independent of the
// order the parts were given in.
class Partition {
public:
    Partition() = default;  // empty partition of 0
    explicit Partition(std::vector<int> parts);

    // Accepts "3,1", "3 1" and exponent shorthand "1^4" / "3,1^2".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const { return sum_; }                        // d
    int length() const { return static_cast<int>(parts_.size()); }  // l(m)

    // |m| = product of parts.
    long weight() const;

    // m! = |Aut(m)| = product of multiplicity factorials.
    Integer aut_order() const;

    // z_m = prod_k k^{r_k} r_k!  (= |m| * m!, asserted in tests).
    Integer centralizer_order() const;

    // part value -> multiplicity, e.g. (2,2,1) -> {1:1, 2:2}.
    std::map<int, int> multiplicities() const;

    bool is_odd() const;                       // every part odd
    bool is_trivial() const { return sum_ == length(); }  // (1^d) or empty

    std::string to_string() const;             // "3,1"

    bool operator==(const Partition&) const = default;

    // Descending lexicographic on parts: (4) before (3,1) before (2,2).
    static bool desc_lex_less(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// All partitions of d in descending lexicographic order.
// Throws DegreeOutOfRange unless 1 <= d <= kMaxDegree.
std::vector<Partition> partitions_of(int d);

// The subset of partitions_of(d) with every part odd, same order.
std::vector<Partition> odd_partitions_of(int d);

// chi = 2d(1-h) + sum_i (l(m^i) - d).  Throws ProfileDegreeMismatch if a
// profile does not sum to d.
long euler_characteristic(int d, int h, std::span<const Partition> profiles);

// |M_m^e| = d! m! / |m| with d = m.sum(); always a positive integer.
Rational rational_component_count(const Partition& m);

// Profile lists: "3,1;3,1" <-> vector of partitions.
std::vector<Partition> parse_profiles(std::string_view text);
std::string format_profiles(std::span<const Partition> profiles);

}  // namespace shw
