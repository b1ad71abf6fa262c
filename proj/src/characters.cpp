#include "shw/characters.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>

#include "json.hpp"

#include "shw/error.hpp"

namespace shw {

namespace {

constexpr int kCacheFormatVersion = 1;

using Shape = std::vector<int>;  // weakly decreasing positive parts

// First-column hook lengths ("beta numbers") of a shape padded to `rows`
// rows: beta_i = shape_i + (rows-1-i).  A border strip of length t is
// removed by lowering one beta number by t onto an unoccupied value; the
// strip height is the number of occupied values crossed.
Shape shape_from_betas(std::vector<int> betas) {
    std::sort(betas.begin(), betas.end(), std::greater<>());
    Shape s;
    int rows = static_cast<int>(betas.size());
    for (int i = 0; i < rows; ++i) {
        int part = betas[i] - (rows - 1 - i);
        if (part > 0) s.push_back(part);
    }
    return s;
}

// chi_lambda(mu-suffix starting at index `pos`), memoized across columns.
long mn_character(const Shape& lambda, const std::vector<int>& mu, size_t pos,
                       std::map<std::pair<Shape, std::vector<int>>, long>& memo) {
    if (lambda.empty()) return 1;  // pos == mu.size() as well, degrees match

    std::vector<int> suffix(mu.begin() + pos, mu.end());
    auto key = std::make_pair(lambda, suffix);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int t = mu[pos];
    int rows = static_cast<int>(lambda.size());
    std::vector<int> betas(rows);
    for (int i = 0; i < rows; ++i) betas[i] = lambda[i] + (rows - 1 - i);

    long total = 0;
    for (int i = 0; i < rows; ++i) {
        int target = betas[i] - t;
        if (target < 0) continue;
        if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;
        int height = 0;
        for (int b : betas)
            if (b > target && b < betas[i]) ++height;
        std::vector<int> next = betas;
        next[i] = target;
        long sub = mn_character(shape_from_betas(std::move(next)), mu, pos + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

void check_table_degree(int d) {
    if (d < 1 || d > kMaxCharacterDegree)
        throw Error(errc::degree_out_of_range,
                    "character table degree " + std::to_string(d) + " outside [1," +
                        std::to_string(kMaxCharacterDegree) + "]");
}

std::filesystem::path cache_file(int d, const std::string& dir) {
    return std::filesystem::path(dir) / ("chartable-d" + std::to_string(d) + "-v" +
                                         std::to_string(kCacheFormatVersion) + ".json");
}

}  // namespace

CharacterTable CharacterTable::build(int d) {
    check_table_degree(d);
    CharacterTable t;
    t.d_ = d;
    t.labels_ = partitions_of(d);
    size_t n = t.labels_.size();
    t.entries_.resize(n * n);
    std::map<std::pair<Shape, std::vector<int>>, long> memo;
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            t.entries_[r * n + c] =
                mn_character(t.labels_[r].parts(), t.labels_[c].parts(), 0, memo);
    return t;
}

long CharacterTable::chi(const Partition& irrep, const Partition& cls) const {
    int r = index_of(irrep), c = index_of(cls);
    if (r < 0 || c < 0) throw std::invalid_argument("label is not a partition of the table degree");
    return entry(r, c);
}

long CharacterTable::dimension(int irrep_index) const {
    // the identity class (1^d) is last in descending lex order
    return entry(irrep_index, static_cast<int>(labels_.size()) - 1);
}

int CharacterTable::index_of(const Partition& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label, Partition::desc_lex_less);
    if (it == labels_.end() || !(*it == label)) return -1;
    return static_cast<int>(it - labels_.begin());
}

std::optional<CharacterTable> CharacterTable::load_cached(int d, const std::string& dir) {
    check_table_degree(d);
    std::ifstream in(cache_file(d, dir));
    if (!in) return std::nullopt;
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) return std::nullopt;
    if (!doc.contains("version") || doc["version"] != kCacheFormatVersion || doc["d"] != d)
        return std::nullopt;

    CharacterTable t;
    t.d_ = d;
    t.labels_ = partitions_of(d);
    size_t n = t.labels_.size();
    auto labels_match = [&](const char* key) {
        const auto& arr = doc[key];
        if (!arr.is_array() || arr.size() != n) return false;
        for (size_t i = 0; i < n; ++i)
            if (arr[i].get<std::vector<int>>() != t.labels_[i].parts()) return false;
        return true;
    };
    if (!labels_match("irreps") || !labels_match("classes")) return std::nullopt;
    const auto& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != n * n) return std::nullopt;
    t.entries_ = entries.get<std::vector<long>>();
    return t;
}

void CharacterTable::store_cached(const std::string& dir) const {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return;

    nlohmann::json doc;
    doc["version"] = kCacheFormatVersion;
    doc["d"] = d_;
    auto labels = nlohmann::json::array();
    for (const auto& p : labels_) labels.push_back(p.parts());
    doc["irreps"] = labels;
    doc["classes"] = labels;
    doc["entries"] = entries_;

    // create-then-atomic-rename so concurrent readers never see a torn file
    static std::mt19937_64 rng(std::random_device{}());
    fs::path final_path = cache_file(d_, dir);
    fs::path tmp = final_path;
    tmp += ".tmp" + std::to_string(rng());
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << doc.dump();
    }
    fs::rename(tmp, final_path, ec);
    if (ec) fs::remove(tmp, ec);
}

CharacterTable CharacterTable::get(int d, const std::string& cache_dir) {
    if (!cache_dir.empty()) {
        if (auto cached = load_cached(d, cache_dir)) return *cached;
        CharacterTable t = build(d);
        t.store_cached(cache_dir);
        return t;
    }
    return build(d);
}

Integer class_size(int d, const Partition& mu) {
    if (mu.sum() != d)
        throw Error(errc::profile_degree_mismatch,
                    "class label (" + mu.to_string() + ") does not sum to " + std::to_string(d));
    return factorial(d) / mu.centralizer_order();
}

}  // namespace shw
