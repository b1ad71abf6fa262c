#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "shw/partition.hpp"
#include "shw/rational.hpp"

namespace shw {

// Theta-characteristic parity. even is the "+" superscript (sign +1), odd
// is "-" (sign -1); parities compose by adding bits mod 2.
enum class Parity : int { even = 0, odd = 1 };

inline int parity_bit(Parity p) { return static_cast<int>(p); }
inline int parity_sign(Parity p) { return p == Parity::even ? 1 : -1; }
inline Parity parity_compose(Parity a, Parity b) {
    return static_cast<Parity>((parity_bit(a) + parity_bit(b)) % 2);
}
const char* parity_name(Parity p);            // "even" / "odd"
std::optional<Parity> parse_parity(std::string_view text);

// The argument of H^{h,p}_{m^1,...,m^k}: genus h target, parity p, degree d,
// a multiset of odd ramification profiles of d.  Constructing one validates
// that every profile is odd and sums to d, and that (h,p) != (0,odd): a
// genus-0 spin curve has even parity only.
struct SpinQuery {
    int h = 0;
    Parity parity = Parity::even;
    int d = 1;
    std::vector<Partition> profiles;

    static SpinQuery make(int h, Parity parity, int d, std::vector<Partition> profiles);

    bool operator==(const SpinQuery&) const = default;
    std::string to_string() const;  // "H^{h,+}_{d; 3,1;3,1}"
};

// Drops trivial (1^d) insertions and sorts the rest; value-preserving.
SpinQuery normalize(const SpinQuery& q);

// Base-case lookup consulted before the recursion.  A provider answers
// normalized queries only, or declines with nullopt.  This is the extension
// point for degree >= 5 genus <= 1 input data.
class BaseProvider {
public:
    virtual ~BaseProvider() = default;
    virtual std::optional<Rational> lookup(const SpinQuery& normalized) const = 0;
};

// Closed-form base values for d <= 4, h <= 1.  For d in {3,4} the only
// nontrivial odd profile is (3) resp. (3,1), so normalized queries are
// determined by the insertion count k:
//   d=1,2: etale only;  H^{0,+} = 1/d!,  H^{1,+} = 1,  H^{1,-} = -1.
//   d=3:   H^{0,+}_{(3)^k}  = [(-2)^k + 2] / 18,   H^{1,-}_{(3)^k}  = (-2)^k - 1.
//   d=4:   H^{0,+}_{(31)^k} = -[(-2)^{k-1} - 4^{k-1}]/18  (1/24 at k=0),
//          H^{1,-}_{(31)^k} = (-2)^k - 4^k.
// The degree-2 values are the recursion-consistent ones; see README.
class BuiltinBaseTable : public BaseProvider {
public:
    std::optional<Rational> lookup(const SpinQuery& normalized) const override;
};

// One step of the evaluation tree, for --explain output.
struct DerivationNode {
    std::string rule;       // "base-case", "handle-removal", "provider"
    std::string query;      // normalized query echo
    Rational value;
    // Child terms of a handle-removal sum, each weighted by z_m.
    struct Term {
        Integer coefficient;
        std::unique_ptr<DerivationNode> node;
    };
    std::vector<Term> terms;
};

// Memoized evaluator for spin Hurwitz numbers.  Evaluation always descends
// genus through the handle-removal recursion
//   H^{h,p}_{...} = sum_{m odd} z_m H^{h-1,p}_{m,m,...}   (h>=2 or (h,p)=(1,+)),
// bottoming out in the provider chain; the genus-splitting identity is kept
// for verification, not evaluation.
class SpinEngine {
public:
    SpinEngine();  // registers BuiltinBaseTable

    void add_provider(std::shared_ptr<const BaseProvider> provider);
    void set_memo_enabled(bool enabled);  // results must not change; tested

    Rational evaluate(const SpinQuery& q);
    // As evaluate, and fills in the derivation tree.
    Rational evaluate_traced(const SpinQuery& q, DerivationNode& trace);

private:
    Rational evaluate_normalized(const SpinQuery& nq, DerivationNode* trace);

    std::vector<std::shared_ptr<const BaseProvider>> providers_;
    std::unordered_map<std::string, Rational> memo_;
    bool memo_enabled_ = true;
};

// Convenience entry points on a per-call engine.
Rational spin_hurwitz(const SpinQuery& q);

// Genus-splitting evaluation
//   sum_m z_m H^{h1,p1}_{m^1..m^{k0},m} H^{h2,p2}_{m,m^{k0+1}..m^k};
// equals evaluate(q) -- that equality is a verified property, not an input.
// Profile subsets are taken in normalized order.  Requires h1+h2 = q.h,
// bit(p1)+bit(p2) = bit(q.parity) mod 2, 0 <= k0 <= k and (h_i,p_i) != (0,odd).
Rational split_spin_hurwitz(SpinEngine& engine, const SpinQuery& q, int h1, int h2,
                            Parity p1, Parity p2, int k0);

// Local dimension-zero GT invariant of a genus-h parity-p spin curve: the
// etale spin Hurwitz number evaluated as a chain of genus-1 numbers
//   sum prod z_{m^i} H_{m^{h-1}} H_{m^{h-1},m^{h-2}} ... H_{m^1}   (H = H^{1,-})
// when h = p mod 2 (even parity <-> h even); otherwise one handle-removal
// step followed by the chain at genus h-1.  Requires h >= 2.
Rational gt_local(SpinEngine& engine, int h, Parity parity, int d);

// Central-character inputs of the genus-1 odd-parity degree-4 evaluation.
struct CentralCharacterData {
    long f3_at_31 = -4;
    long f3_at_4 = 8;

    // p1(m) = d - 1/24 and p3(m) = sum m_j^3 - 1/240.
    static Rational p1(const Partition& m);
    static Rational p3(const Partition& m);
};

// H^{1,-}_{(31)^k} = 2^{-k} [ f3(31)^k - f3(4)^k ]; equals (-2)^k - 4^k with
// the built-in character values.
Rational eop_genus1(long k, const CentralCharacterData& data = {});

}  // namespace shw
