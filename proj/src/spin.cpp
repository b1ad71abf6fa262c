#include "shw/spin.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "shw/error.hpp"

namespace shw {

const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::optional<Parity> parse_parity(std::string_view text) {
    if (text == "even" || text == "+") return Parity::even;
    if (text == "odd" || text == "-") return Parity::odd;
    return std::nullopt;
}

SpinQuery SpinQuery::make(int h, Parity parity, int d, std::vector<Partition> profiles) {
    if (h < 0) throw std::invalid_argument("genus must be nonnegative");
    if (d < 1 || d > kMaxDegree)
        throw Error(errc::degree_out_of_range,
                    "degree " + std::to_string(d) + " outside [1," + std::to_string(kMaxDegree) + "]");
    if (h == 0 && parity == Parity::odd)
        throw Error(errc::unrealizable_spin_structure,
                    "a genus-0 spin curve has even parity only");
    for (const auto& m : profiles) {
        if (m.sum() != d)
            throw Error(errc::profile_degree_mismatch,
                        "profile (" + m.to_string() + ") does not sum to " + std::to_string(d));
        if (!m.is_odd())
            throw Error(errc::not_odd_profile, "profile (" + m.to_string() + ") has an even part");
    }
    return SpinQuery{h, parity, d, std::move(profiles)};
}

std::string SpinQuery::to_string() const {
    std::ostringstream os;
    os << "H^{" << h << "," << (parity == Parity::even ? '+' : '-') << "}_{" << d;
    if (!profiles.empty()) os << ";" << format_profiles(profiles);
    os << "}";
    return os.str();
}

SpinQuery normalize(const SpinQuery& q) {
    SpinQuery n = q;
    std::erase_if(n.profiles, [](const Partition& m) { return m.is_trivial(); });
    std::sort(n.profiles.begin(), n.profiles.end(), Partition::desc_lex_less);
    return n;
}

namespace {

std::string memo_key(const SpinQuery& nq) {
    return std::to_string(nq.h) + "|" + std::to_string(parity_bit(nq.parity)) + "|" +
           std::to_string(nq.d) + "|" + format_profiles(nq.profiles);
}

// Expected nontrivial odd profile per degree <= 4: none for d <= 2.
const Partition* nontrivial_odd_profile(int d) {
    static const Partition three({3});
    static const Partition three_one({3, 1});
    if (d == 3) return &three;
    if (d == 4) return &three_one;
    return nullptr;
}

}  // namespace

std::optional<Rational> BuiltinBaseTable::lookup(const SpinQuery& nq) const {
    if (nq.d > 4 || nq.h > 1) return std::nullopt;

    const Partition* expected = nontrivial_odd_profile(nq.d);
    for (const auto& m : nq.profiles)
        if (expected == nullptr || !(m == *expected)) return std::nullopt;
    long k = static_cast<long>(nq.profiles.size());

    if (nq.h == 0) {  // parity is even by the SpinQuery invariant
        switch (nq.d) {
            case 1:
            case 2:
                return Rational(1) / Rational(factorial(nq.d));
            case 3:
                // [(-2)^k + 2] / 18
                return (pow_int(-2, k) + 2) / Rational(18);
            case 4:
                // 1/24 at k=0, else -[(-2)^{k-1} - 4^{k-1}]/18
                if (k == 0) return Rational(1, 24);
                return -(pow_int(-2, k - 1) - pow_int(4, k - 1)) / Rational(18);
        }
    }

    // h == 1
    if (nq.d <= 2) return Rational(parity_sign(nq.parity));
    if (nq.parity == Parity::odd) {
        if (nq.d == 3) return pow_int(-2, k) - 1;       // (-2)^k - 1
        return pow_int(-2, k) - pow_int(4, k);          // d == 4
    }
    return std::nullopt;  // (1,+) descends through handle removal
}

SpinEngine::SpinEngine() { providers_.push_back(std::make_shared<BuiltinBaseTable>()); }

void SpinEngine::add_provider(std::shared_ptr<const BaseProvider> provider) {
    providers_.push_back(std::move(provider));
}

void SpinEngine::set_memo_enabled(bool enabled) {
    memo_enabled_ = enabled;
    if (!enabled) memo_.clear();
}

Rational SpinEngine::evaluate(const SpinQuery& q) {
    return evaluate_normalized(normalize(SpinQuery::make(q.h, q.parity, q.d, q.profiles)), nullptr);
}

Rational SpinEngine::evaluate_traced(const SpinQuery& q, DerivationNode& trace) {
    return evaluate_normalized(normalize(SpinQuery::make(q.h, q.parity, q.d, q.profiles)), &trace);
}

Rational SpinEngine::evaluate_normalized(const SpinQuery& nq, DerivationNode* trace) {
    std::string key = memo_key(nq);
    if (memo_enabled_ && trace == nullptr) {
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    auto finish = [&](const Rational& value) {
        if (memo_enabled_) memo_.emplace(key, value);
        return value;
    };

    for (size_t i = 0; i < providers_.size(); ++i) {
        if (auto hit = providers_[i]->lookup(nq)) {
            if (trace) {
                trace->rule = (i == 0) ? "base-case" : "provider";
                trace->query = nq.to_string();
                trace->value = *hit;
            }
            return finish(*hit);
        }
    }

    if (nq.h >= 2 || (nq.h == 1 && nq.parity == Parity::even)) {
        // handle removal: H^{h,p}_{...} = sum_m z_m H^{h-1,p}_{m,m,...}
        Rational total = 0;
        if (trace) {
            trace->rule = "handle-removal";
            trace->query = nq.to_string();
        }
        for (const auto& m : odd_partitions_of(nq.d)) {
            std::vector<Partition> with_handles = nq.profiles;
            with_handles.push_back(m);
            with_handles.push_back(m);
            SpinQuery sub = normalize(SpinQuery{nq.h - 1, nq.parity, nq.d, std::move(with_handles)});
            Integer z = m.centralizer_order();
            if (trace) {
                auto child = std::make_unique<DerivationNode>();
                Rational v = evaluate_normalized(sub, child.get());
                total += Rational(z) * v;
                trace->terms.push_back({z, std::move(child)});
            } else {
                total += Rational(z) * evaluate_normalized(sub, nullptr);
            }
        }
        total.canonicalize();
        if (trace) trace->value = total;
        return finish(total);
    }

    throw Error(errc::base_case_unavailable,
                "no base value for " + nq.to_string() +
                    " (degree >= 5 needs an external base provider)");
}

Rational spin_hurwitz(const SpinQuery& q) {
    SpinEngine engine;
    return engine.evaluate(q);
}

Rational split_spin_hurwitz(SpinEngine& engine, const SpinQuery& q, int h1, int h2,
                            Parity p1, Parity p2, int k0) {
    SpinQuery nq = normalize(SpinQuery::make(q.h, q.parity, q.d, q.profiles));
    int k = static_cast<int>(nq.profiles.size());
    if (h1 < 0 || h2 < 0 || h1 + h2 != nq.h)
        throw Error(errc::invalid_split, "genera " + std::to_string(h1) + "+" + std::to_string(h2) +
                                             " do not sum to " + std::to_string(nq.h));
    if ((parity_bit(p1) + parity_bit(p2)) % 2 != parity_bit(nq.parity))
        throw Error(errc::invalid_split, "parities do not compose to " + std::string(parity_name(nq.parity)));
    if (k0 < 0 || k0 > k)
        throw Error(errc::invalid_split, "insertion split index " + std::to_string(k0) +
                                             " outside [0," + std::to_string(k) + "]");
    if ((h1 == 0 && p1 == Parity::odd) || (h2 == 0 && p2 == Parity::odd))
        throw Error(errc::invalid_split, "a genus-0 factor cannot carry odd parity");

    std::vector<Partition> left_base(nq.profiles.begin(), nq.profiles.begin() + k0);
    std::vector<Partition> right_base(nq.profiles.begin() + k0, nq.profiles.end());

    Rational total = 0;
    for (const auto& m : odd_partitions_of(nq.d)) {
        std::vector<Partition> left = left_base;
        left.push_back(m);
        std::vector<Partition> right = right_base;
        right.push_back(m);
        Rational lv = engine.evaluate(SpinQuery::make(h1, p1, nq.d, std::move(left)));
        Rational rv = engine.evaluate(SpinQuery::make(h2, p2, nq.d, std::move(right)));
        total += Rational(m.centralizer_order()) * lv * rv;
    }
    total.canonicalize();
    return total;
}

namespace {

// sum over odd m^1..m^{g-1} of prod z_{m^i} H_{extra,m^{g-1}} H_{m^{g-1},m^{g-2}}
// ... H_{m^1}, every factor a genus-1 odd-parity number.
Rational genus_one_chain(SpinEngine& engine, int g, int d, const std::vector<Partition>& extra) {
    if (g == 1) return engine.evaluate(SpinQuery::make(1, Parity::odd, d, extra));
    Rational total = 0;
    for (const auto& m : odd_partitions_of(d)) {
        std::vector<Partition> head = extra;
        head.push_back(m);
        Rational head_v = engine.evaluate(SpinQuery::make(1, Parity::odd, d, std::move(head)));
        total += Rational(m.centralizer_order()) * head_v * genus_one_chain(engine, g - 1, d, {m});
    }
    total.canonicalize();
    return total;
}

}  // namespace

Rational gt_local(SpinEngine& engine, int h, Parity parity, int d) {
    if (h < 2) throw std::invalid_argument("gt_local needs genus >= 2");
    if (h % 2 == parity_bit(parity)) return genus_one_chain(engine, h, d, {});
    // one handle-removal step, then the chain at genus h-1
    Rational total = 0;
    for (const auto& m : odd_partitions_of(d))
        total += Rational(m.centralizer_order()) * genus_one_chain(engine, h - 1, d, {m, m});
    total.canonicalize();
    return total;
}

Rational CentralCharacterData::p1(const Partition& m) {
    return Rational(m.sum()) - Rational(1, 24);
}

Rational CentralCharacterData::p3(const Partition& m) {
    Rational s = 0;
    for (int part : m.parts()) s += static_cast<long>(part) * part * part;
    return s - Rational(1, 240);
}

Rational eop_genus1(long k, const CentralCharacterData& data) {
    if (k < 0) throw std::invalid_argument("insertion count must be nonnegative");
    Rational diff = pow_int(data.f3_at_31, k) - pow_int(data.f3_at_4, k);
    Rational r = diff / pow_int(2, k);
    r.canonicalize();
    return r;
}

}  // namespace shw
