#include "shw/hurwitz.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>

#include "shw/characters.hpp"
#include "shw/error.hpp"
#include "shw/permutation.hpp"

namespace shw {

namespace {

constexpr int kMaxBruteForceDegree = 6;

void check_profiles(const ClassicalQuery& q) {
    if (q.h < 0) throw std::invalid_argument("genus must be nonnegative");
    for (const auto& m : q.profiles)
        if (m.sum() != q.d)
            throw Error(errc::profile_degree_mismatch,
                        "profile (" + m.to_string() + ") does not sum to " + std::to_string(q.d));
}

// Group elements of S_d with O(1) composition by index, the class label of
// every element, and all commutator values [a,b] as a flat pair list.
struct GroupTable {
    int n = 0;
    std::uint32_t id = 0;
    std::vector<Perm> elems;
    std::vector<std::uint32_t> mult;        // n*n, row-major
    std::vector<std::uint32_t> inv;
    std::vector<int> class_id;              // index into partitions_of(d)
    std::vector<Partition> classes;
    std::vector<std::vector<std::uint32_t>> class_members;
    std::vector<std::uint32_t> comm_pairs;  // [a,b] over all n^2 pairs

    explicit GroupTable(int d) {
        elems = all_permutations(d);
        n = static_cast<int>(elems.size());
        auto index_of = [&](const Perm& p) {
            return static_cast<std::uint32_t>(
                std::lower_bound(elems.begin(), elems.end(), p,
                                 [](const Perm& a, const Perm& b) { return a.images() < b.images(); }) -
                elems.begin());
        };
        id = index_of(Perm::identity(d));
        mult.resize(static_cast<size_t>(n) * n);
        inv.resize(n);
        for (int i = 0; i < n; ++i) {
            inv[i] = index_of(inverse(elems[i]));
            for (int j = 0; j < n; ++j)
                mult[static_cast<size_t>(i) * n + j] = index_of(compose(elems[i], elems[j]));
        }
        classes = partitions_of(d);
        class_id.resize(n);
        class_members.resize(classes.size());
        for (int i = 0; i < n; ++i) {
            Partition type = cycle_type(elems[i]);
            int c = static_cast<int>(
                std::find(classes.begin(), classes.end(), type) - classes.begin());
            class_id[i] = c;
            class_members[c].push_back(i);
        }
        comm_pairs.resize(static_cast<size_t>(n) * n);
        for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(n); ++a)
            for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(n); ++b)
                comm_pairs[static_cast<size_t>(a) * n + b] =
                    times(times(a, b), times(inv[a], inv[b]));
    }

    std::uint32_t times(std::uint32_t a, std::uint32_t b) const {
        return mult[static_cast<size_t>(a) * n + b];
    }
};

const GroupTable& group_table(int d) {
    static std::mutex lock;
    static std::array<std::unique_ptr<GroupTable>, 7> cache;
    std::scoped_lock guard(lock);
    if (!cache[d]) cache[d] = std::make_unique<GroupTable>(d);
    return *cache[d];
}

// Enumerates every tuple drawn from `lists`, multiplying along, and counts
// those whose total product passes the leaf test: membership of the missing
// last class factor (cycle types are inverse-invariant, so the class of the
// product itself is tested) or being the identity when no factor is solved for.
std::uint64_t walk_product(const GroupTable& g,
                           const std::vector<const std::vector<std::uint32_t>*>& lists,
                           size_t slot, std::uint32_t prod, bool solve_last, int target_class) {
    if (slot == lists.size())
        return solve_last ? g.class_id[prod] == target_class : prod == g.id;
    const auto& vals = *lists[slot];
    std::uint64_t acc = 0;
    if (slot + 1 == lists.size()) {
        if (solve_last) {
            for (std::uint32_t v : vals) acc += g.class_id[g.times(prod, v)] == target_class;
        } else {
            for (std::uint32_t v : vals) acc += g.times(prod, v) == g.id;
        }
        return acc;
    }
    for (std::uint32_t v : vals)
        acc += walk_product(g, lists, slot + 1, g.times(prod, v), solve_last, target_class);
    return acc;
}

}  // namespace

Rational classical_hurwitz(const ClassicalQuery& q, const std::string& cache_dir) {
    check_profiles(q);
    CharacterTable table = CharacterTable::get(q.d, cache_dir);

    std::vector<int> class_index(q.profiles.size());
    std::vector<Integer> sizes(q.profiles.size());
    for (size_t i = 0; i < q.profiles.size(); ++i) {
        class_index[i] = table.index_of(q.profiles[i]);
        sizes[i] = class_size(q.d, q.profiles[i]);
    }

    Integer dfact = factorial(q.d);
    Rational total = 0;
    for (size_t r = 0; r < table.irreps().size(); ++r) {
        Integer dim = table.dimension(static_cast<int>(r));
        Rational term = pow_rational(Rational(dfact) / Rational(dim), 2L * q.h - 2);
        for (size_t i = 0; i < q.profiles.size(); ++i)
            term *= Rational(sizes[i] * table.entry(static_cast<int>(r), class_index[i])) /
                    Rational(dim);
        total += term;
    }
    total.canonicalize();
    return total;
}

std::uint64_t brute_force_cost(const ClassicalQuery& q) {
    check_profiles(q);
    // tuples actually enumerated: all 2h commutator factors, and all class
    // factors except the last one, which is solved for
    long double cost = 1.0L;
    Integer dfact = factorial(q.d);
    for (int i = 0; i < 2 * q.h; ++i) cost *= dfact.get_d();
    for (size_t j = 0; j + 1 < q.profiles.size(); ++j)
        cost *= class_size(q.d, q.profiles[j]).get_d();
    constexpr long double kCap = 1e18L;
    return cost > kCap ? static_cast<std::uint64_t>(kCap) : static_cast<std::uint64_t>(cost);
}

Rational brute_force_hurwitz(const ClassicalQuery& q, std::uint64_t budget) {
    check_profiles(q);
    if (q.d < 1 || q.d > kMaxBruteForceDegree)
        throw Error(errc::degree_out_of_range,
                    "brute-force degree " + std::to_string(q.d) + " outside [1," +
                        std::to_string(kMaxBruteForceDegree) + "]");
    std::uint64_t cost = brute_force_cost(q);
    if (cost > budget)
        throw Error(errc::oracle_budget_exceeded,
                    "estimated " + std::to_string(cost) + " compositions exceeds budget " +
                        std::to_string(budget));

    const GroupTable& g = group_table(q.d);
    const int k = static_cast<int>(q.profiles.size());

    // slots: h commutator factors, then all class factors except the last,
    // which is solved for
    std::vector<const std::vector<std::uint32_t>*> lists;
    for (int i = 0; i < q.h; ++i) lists.push_back(&g.comm_pairs);
    int target_class = -1;
    for (int j = 0; j < k; ++j) {
        int c = static_cast<int>(
            std::find(g.classes.begin(), g.classes.end(), q.profiles[j]) - g.classes.begin());
        if (j + 1 < k)
            lists.push_back(&g.class_members[c]);
        else
            target_class = c;
    }

    std::uint64_t count = walk_product(g, lists, 0, g.id, k > 0, target_class);
    Rational r = Rational(Integer(count)) / Rational(factorial(q.d));
    r.canonicalize();
    return r;
}

}  // namespace shw
