#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shw/partition.hpp"
#include "shw/rational.hpp"

namespace shw {

inline constexpr int kMaxCharacterDegree = 12;

// Integer character table of the symmetric group S_d.  Rows are irreps
// labelled by partitions, columns conjugacy classes labelled by cycle type,
// both in descending lexicographic order.  Built once, then immutable.
class CharacterTable {
public:
    // Murnaghan-Nakayama recursion; 1 <= d <= kMaxCharacterDegree.
    static CharacterTable build(int d);

    int degree() const { return d_; }
    const std::vector<Partition>& irreps() const { return labels_; }
    const std::vector<Partition>& classes() const { return labels_; }

    long entry(int irrep_index, int class_index) const {
        return entries_[static_cast<size_t>(irrep_index) * labels_.size() + class_index];
    }
    long chi(const Partition& irrep, const Partition& cls) const;
    long dimension(int irrep_index) const;  // chi_lambda(1^d)

    int index_of(const Partition& label) const;  // -1 if absent

    // Disk cache, one JSON file per degree under dir.  Files are written
    // with create-then-atomic-rename; a malformed or mismatched file is
    // ignored and rebuilt.
    static std::optional<CharacterTable> load_cached(int d, const std::string& dir);
    void store_cached(const std::string& dir) const;

    // Resolves dir and falls back to build() if dir is empty or unusable.
    static CharacterTable get(int d, const std::string& cache_dir = "");

private:
    int d_ = 0;
    std::vector<Partition> labels_;       // irrep and class labels coincide
    std::vector<long> entries_;      // row-major
};

// |C_mu| = d!/z_mu for mu a partition of d.
Integer class_size(int d, const Partition& mu);

}  // namespace shw
