#include "shw/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "shw/characters.hpp"
#include "shw/error.hpp"

namespace shw {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("permutation images are not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(int d) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 0);
    return Perm(std::move(im));
}

Perm compose(const Perm& a, const Perm& b) {
    std::vector<int> im(a.degree());
    for (int i = 0; i < a.degree(); ++i) im[i] = a(b(i));
    return Perm(std::move(im));
}

Perm inverse(const Perm& p) {
    std::vector<int> im(p.degree());
    for (int i = 0; i < p.degree(); ++i) im[p(i)] = i;
    return Perm(std::move(im));
}

Perm commutator(const Perm& a, const Perm& b) {
    return compose(compose(a, b), compose(inverse(a), inverse(b)));
}

Partition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.degree(), false);
    std::vector<int> lengths;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        do {
            seen[j] = true;
            j = p(j);
            ++len;
        } while (j != i);
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

std::vector<Perm> all_permutations(int d) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<Perm> enumerate_class(int d, const Partition& mu, std::uint64_t max_elements) {
    if (d < 1 || d > kMaxEnumerationDegree)
        throw Error(errc::degree_out_of_range,
                    "class enumeration degree " + std::to_string(d) + " outside [1," +
                        std::to_string(kMaxEnumerationDegree) + "]");
    Integer size = class_size(d, mu);
    if (size > max_elements)
        throw Error(errc::oracle_budget_exceeded,
                    "class (" + mu.to_string() + ") has " + size.get_str() +
                        " elements, budget " + std::to_string(max_elements));
    std::vector<Perm> out;
    for (auto& p : all_permutations(d))
        if (cycle_type(p) == mu) out.push_back(std::move(p));
    return out;
}

}  // namespace shw
