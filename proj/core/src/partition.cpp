#include "pdtrank/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "text_util.hpp"

namespace pdtrank {

Partition::Partition(Multiplicities mult) {
    for (auto it = mult.begin(); it != mult.end();) {
        if (it->first <= 0) {
            throw std::invalid_argument("partition part size must be positive, got " +
                                        std::to_string(it->first));
        }
        if (it->second < 0) {
            throw std::invalid_argument("negative multiplicity for size " +
                                        std::to_string(it->first));
        }
        it = it->second == 0 ? mult.erase(it) : std::next(it);
    }
    mult_ = std::move(mult);
}

Partition Partition::from_parts(std::span<const int> parts) {
    Multiplicities mult;
    for (int part : parts) {
        if (part <= 0) {
            throw std::invalid_argument("partition part size must be positive, got " +
                                        std::to_string(part));
        }
        ++mult[part];
    }
    return Partition(std::move(mult));
}

int Partition::multiplicity(int size) const noexcept {
    auto it = mult_.find(size);
    return it == mult_.end() ? 0 : it->second;
}

int Partition::weight() const noexcept {
    int total = 0;
    for (const auto& [size, count] : mult_) total += size * count;
    return total;
}

int Partition::num_parts() const noexcept {
    int total = 0;
    for (const auto& [size, count] : mult_) total += count;
    return total;
}

int Partition::largest_part() const noexcept {
    return mult_.empty() ? 0 : mult_.rbegin()->first;
}

std::vector<int> Partition::parts() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(num_parts()));
    for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) {
        out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
    }
    return out;
}

namespace {

void visit_partitions(int remaining, int max_part, Partition::Multiplicities& current,
                      const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition(current));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        ++current[part];
        visit_partitions(remaining - part, part, current, visit);
        if (--current[part] == 0) current.erase(part);
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) return;
    Partition::Multiplicities current;
    visit_partitions(n, n, current, visit);
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::uint64_t partition_count(int n) {
    if (n < 0) return 0;
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return static_cast<std::uint64_t>(p[static_cast<std::size_t>(n)]);
}

int crank(const Partition& p) {
    const int ones = p.multiplicity(1);
    if (ones == 0) return p.largest_part();
    int larger = 0;
    for (auto it = p.multiplicities().upper_bound(ones); it != p.multiplicities().end(); ++it) {
        larger += it->second;
    }
    return larger - ones;
}

CrankTable crank_distribution(int n) {
    CrankTable table;
    table.n = n;
    if (n == 1) {
        table.counts = {{-1, 1}, {0, -1}, {1, 1}};
        return table;
    }
    for_each_partition(n, [&](const Partition& p) { ++table.counts[crank(p)]; });
    return table;
}

std::string to_text(const Partition& p) {
    if (p.empty()) return std::string(detail::kEmptySymbol);
    std::string out;
    for (int part : p.parts()) {
        if (!out.empty()) out += '+';
        out += std::to_string(part);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    text = detail::trim(text);
    if (text.empty() || text == detail::kEmptySymbol) return {};
    std::vector<int> parts;
    for (std::string_view token : detail::split(text, '+')) {
        parts.push_back(detail::parse_positive(detail::trim(token), text));
    }
    return Partition::from_parts(parts);
}

nlohmann::json to_json(const Partition& p) {
    nlohmann::json mult = nlohmann::json::object();
    for (const auto& [size, count] : p.multiplicities()) mult[std::to_string(size)] = count;
    return {{"mult", mult}};
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("mult") || !j.at("mult").is_object()) {
        throw std::invalid_argument("partition JSON must be an object with a \"mult\" object");
    }
    Partition::Multiplicities mult;
    for (const auto& [key, value] : j.at("mult").items()) {
        mult[detail::parse_positive(key, key)] = value.get<int>();
    }
    return Partition(std::move(mult));
}

}  // namespace pdtrank
