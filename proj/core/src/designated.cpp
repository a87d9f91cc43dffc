#include "pdtrank/designated.hpp"

#include <stdexcept>

#include "text_util.hpp"

namespace pdtrank {

OverlinePartition::OverlinePartition(Partition parts, Positions designated, int tag)
    : parts_(std::move(parts)), designated_(std::move(designated)), tag_(tag) {
    if (parts_.multiplicity(tag_) < 1) {
        throw std::invalid_argument("tagged size " + std::to_string(tag_) + " does not occur");
    }
    if (designated_.size() != parts_.distinct_sizes()) {
        throw std::invalid_argument("every occurring size needs exactly one designated copy");
    }
    for (const auto& [size, count] : parts_.multiplicities()) {
        auto it = designated_.find(size);
        if (it == designated_.end()) {
            throw std::invalid_argument("size " + std::to_string(size) + " has no designated copy");
        }
        if (it->second < 1 || it->second > count) {
            throw std::invalid_argument("designated position " + std::to_string(it->second) +
                                        " out of range for size " + std::to_string(size));
        }
    }
}

int OverlinePartition::position(int size) const noexcept {
    auto it = designated_.find(size);
    return it == designated_.end() ? 0 : it->second;
}

S2Triple::S2Triple(Partition alpha, Partition beta, int tag)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), tag_(tag) {
    if (alpha_.multiplicity(tag_) < 1) {
        throw std::invalid_argument("alpha must contain the tag size " + std::to_string(tag_));
    }
    for (const auto& [size, count] : alpha_.multiplicities()) {
        if (size != tag_ && count == 1) {
            throw std::invalid_argument("alpha has a single copy of untagged size " +
                                        std::to_string(size));
        }
    }
}

void for_each_s1(int n, const std::function<void(const OverlinePartition&)>& visit) {
    if (n <= 0) return;
    for_each_partition(n, [&](const Partition& p) {
        std::vector<std::pair<int, int>> sizes(p.multiplicities().begin(), p.multiplicities().end());
        OverlinePartition::Positions g;
        for (const auto& [size, count] : sizes) g[size] = 1;
        while (true) {
            for (const auto& [size, count] : sizes) visit(OverlinePartition(p, g, size));
            // Odometer with g_1 most significant.
            std::size_t i = sizes.size();
            while (i > 0) {
                --i;
                auto& pos = g[sizes[i].first];
                if (pos < sizes[i].second) {
                    ++pos;
                    break;
                }
                pos = 1;
                if (i == 0) return;
            }
        }
    });
}

std::vector<OverlinePartition> enumerate_s1(int n) {
    std::vector<OverlinePartition> out;
    for_each_s1(n, [&](const OverlinePartition& p) { out.push_back(p); });
    return out;
}

void for_each_s2(int n, const std::function<void(const S2Triple&)>& visit) {
    if (n <= 0) return;
    std::vector<std::vector<Partition>> by_weight(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) by_weight[static_cast<std::size_t>(w)] = enumerate_partitions(w);

    for (int alpha_weight = n; alpha_weight >= 1; --alpha_weight) {
        const auto& betas = by_weight[static_cast<std::size_t>(n - alpha_weight)];
        for_each_partition(alpha_weight, [&](const Partition& alpha) {
            int singles = 0;
            int single_size = 0;
            for (const auto& [size, count] : alpha.multiplicities()) {
                if (count == 1) {
                    ++singles;
                    single_size = size;
                }
            }
            if (singles > 1) return;
            for (const auto& [t, count] : alpha.multiplicities()) {
                if (singles == 1 && t != single_size) continue;
                for (const auto& beta : betas) visit(S2Triple(alpha, beta, t));
            }
        });
    }
}

std::vector<S2Triple> enumerate_s2(int n) {
    std::vector<S2Triple> out;
    for_each_s2(n, [&](const S2Triple& t) { out.push_back(t); });
    return out;
}

std::uint64_t pd_count(int n) {
    std::uint64_t total = 0;
    for_each_partition(n, [&](const Partition& p) {
        std::uint64_t choices = 1;
        for (const auto& [size, count] : p.multiplicities()) choices *= static_cast<std::uint64_t>(count);
        total += choices;
    });
    return total;
}

std::uint64_t pdt_count(int n) {
    std::uint64_t total = 0;
    for_each_s1(n, [&](const OverlinePartition&) { ++total; });
    return total;
}

std::string format_overline(const OverlinePartition& p) {
    std::string out;
    const auto& mult = p.parts().multiplicities();
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        const auto [size, count] = *it;
        const int designated = p.position(size);
        for (int copy = 1; copy <= count; ++copy) {
            if (!out.empty()) out += '+';
            if (copy == designated && size == p.tag()) out += '~';
            out += std::to_string(size);
            if (copy == designated) out += '\'';
        }
    }
    return out;
}

OverlinePartition parse_overline(std::string_view text) {
    const std::string_view whole = detail::trim(text);
    auto fail = [&](const std::string& why) -> std::invalid_argument {
        return std::invalid_argument("invalid overline partition \"" + std::string(whole) + "\": " + why);
    };
    if (whole.empty()) throw fail("empty");

    Partition::Multiplicities mult;
    OverlinePartition::Positions designated;
    int tag = 0;
    int previous = 0;
    for (std::string_view token : detail::split(whole, '+')) {
        token = detail::trim(token);
        bool tagged = false;
        bool primed = false;
        if (!token.empty() && token.front() == '~') {
            tagged = true;
            token.remove_prefix(1);
        }
        if (!token.empty() && token.back() == '\'') {
            primed = true;
            token.remove_suffix(1);
        }
        const int size = detail::parse_positive(token, whole);
        if (previous != 0 && size > previous) throw fail("parts must be weakly decreasing");
        previous = size;
        const int copy = ++mult[size];
        if (primed) {
            if (!designated.emplace(size, copy).second) {
                throw fail("size " + std::to_string(size) + " has more than one designated copy");
            }
        }
        if (tagged) {
            if (!primed) throw fail("\"~\" must sit on a designated (primed) part");
            if (tag != 0) throw fail("more than one tagged part");
            tag = size;
        }
    }
    if (tag == 0) throw fail("no tagged part");
    try {
        return OverlinePartition(Partition(std::move(mult)), std::move(designated), tag);
    } catch (const std::invalid_argument& e) {
        throw fail(e.what());
    }
}

nlohmann::json to_json(const OverlinePartition& p) {
    nlohmann::json f = nlohmann::json::object();
    nlohmann::json g = nlohmann::json::object();
    for (const auto& [size, count] : p.parts().multiplicities()) {
        f[std::to_string(size)] = count;
        g[std::to_string(size)] = p.position(size);
    }
    return {{"n", p.weight()}, {"f", f}, {"g", g}, {"k", p.tag()}};
}

OverlinePartition overline_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("f") || !j.contains("g") || !j.contains("k")) {
        throw std::invalid_argument("overline partition JSON needs \"f\", \"g\" and \"k\"");
    }
    Partition::Multiplicities f;
    for (const auto& [key, value] : j.at("f").items()) f[detail::parse_positive(key, key)] = value.get<int>();
    OverlinePartition::Positions g;
    for (const auto& [key, value] : j.at("g").items()) {
        const int pos = value.get<int>();
        if (pos != 0) g[detail::parse_positive(key, key)] = pos;
    }
    OverlinePartition p(Partition(std::move(f)), std::move(g), j.at("k").get<int>());
    if (j.contains("n") && j.at("n").get<int>() != p.weight()) {
        throw std::invalid_argument("overline partition JSON: \"n\" does not match the parts");
    }
    return p;
}

}  // namespace pdtrank
