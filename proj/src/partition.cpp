#include "shw/partition.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <functional>
#include <sstream>

#include "shw/error.hpp"

namespace shw {

namespace {

void check_degree(int d) {
    if (d < 1 || d > kMaxDegree)
        throw Error(errc::degree_out_of_range,
                    "degree " + std::to_string(d) + " outside [1," + std::to_string(kMaxDegree) + "]");
}

int parse_positive_int(std::string_view tok, std::string_view ctx) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 1)
        throw std::invalid_argument("bad partition token '" + std::string(ctx) + "'");
    return value;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("partition parts must be positive");
        sum_ += p;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
        if (i >= text.size()) break;
        size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != ',') ++j;
        std::string_view tok = text.substr(i, j - i);
        // exponent shorthand: "1^4" means four parts equal to 1
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
            int base = parse_positive_int(tok.substr(0, caret), tok);
            int rep = parse_positive_int(tok.substr(caret + 1), tok);
            parts.insert(parts.end(), rep, base);
        } else {
            parts.push_back(parse_positive_int(tok, tok));
        }
        i = j;
    }
    if (parts.empty()) throw std::invalid_argument("empty partition text");
    return Partition(std::move(parts));
}

long Partition::weight() const {
    long w = 1;
    for (int p : parts_) w *= p;
    return w;
}

Integer Partition::aut_order() const {
    Integer r = 1;
    for (const auto& [part, mult] : multiplicities()) r *= factorial(mult);
    return r;
}

Integer Partition::centralizer_order() const {
    Integer z = 1;
    for (const auto& [part, mult] : multiplicities()) {
        for (int i = 0; i < mult; ++i) z *= part;
        z *= factorial(mult);
    }
    return z;
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

bool Partition::is_odd() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

bool Partition::desc_lex_less(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                        b.parts().begin(), b.parts().end(),
                                        std::greater<>());
}

std::vector<Partition> partitions_of(int d) {
    check_degree(d);
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending-lex order falls out of always trying the largest next part
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

std::vector<Partition> odd_partitions_of(int d) {
    std::vector<Partition> out;
    for (auto& m : partitions_of(d))
        if (m.is_odd()) out.push_back(std::move(m));
    return out;
}

long euler_characteristic(int d, int h, std::span<const Partition> profiles) {
    long chi = 2L * d * (1 - h);
    for (const auto& m : profiles) {
        if (m.sum() != d)
            throw Error(errc::profile_degree_mismatch,
                        "profile (" + m.to_string() + ") does not sum to " + std::to_string(d));
        chi += m.length() - d;
    }
    return chi;
}

Rational rational_component_count(const Partition& m) {
    Rational r = Rational(factorial(m.sum()) * m.aut_order()) / m.weight();
    r.canonicalize();
    assert(r.get_den() == 1 && r > 0);
    return r;
}

std::vector<Partition> parse_profiles(std::string_view text) {
    std::vector<Partition> out;
    size_t i = 0;
    while (i <= text.size()) {
        size_t j = text.find(';', i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view piece = text.substr(i, j - i);
        size_t a = piece.find_first_not_of(' ');
        if (a != std::string_view::npos) {
            size_t b = piece.find_last_not_of(' ');
            out.push_back(Partition::parse(piece.substr(a, b - a + 1)));
        }
        if (j == text.size()) break;
        i = j + 1;
    }
    return out;
}

std::string format_profiles(std::span<const Partition> profiles) {
    std::string s;
    for (size_t i = 0; i < profiles.size(); ++i) {
        if (i) s += ';';
        s += profiles[i].to_string();
    }
    return s;
}

}  // namespace shw
