#include "pdtrank/ranks.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "pdtrank/delta.hpp"

namespace pdtrank {

int RankValue::value() const {
    if (!value_) throw std::logic_error("exceptional pdt-rank has no integer value");
    return *value_;
}

std::string RankValue::to_string() const {
    return value_ ? std::to_string(*value_) : std::string("X");
}

namespace {

bool is_single_one(const Partition& p) {
    return p.distinct_sizes() == 1 && p.multiplicity(1) == 1;
}

int floor_mod(int m, int modulus) {
    const int r = m % modulus;
    return r < 0 ? r + modulus : r;
}

/// Read-only view of (f, g; k) with the predicates the class definitions use.
class Shape {
public:
    explicit Shape(const OverlinePartition& p) : p_(p), k_(p.tag()) {}

    int f(int i) const { return p_.multiplicity(i); }
    int g(int i) const { return p_.position(i); }
    int k() const { return k_; }
    int n() const { return p_.weight(); }

    /// f(i) == g(i) for every occurring size outside `skip`.
    bool fully_designated(std::initializer_list<int> skip = {}) const {
        return all_sizes(skip, [&](int i) { return f(i) == g(i); });
    }

    /// f(i) != 1 for every occurring size outside `skip`.
    bool no_single_copies(std::initializer_list<int> skip) const {
        return all_sizes(skip, [&](int i) { return f(i) != 1; });
    }

    bool only_sizes(std::initializer_list<int> allowed) const {
        return all_sizes(allowed, [](int) { return false; });
    }

    std::vector<int> sizes_with_multiplicity(int count) const {
        std::vector<int> out;
        for (const auto& [size, c] : p_.parts().multiplicities()) {
            if (c == count) out.push_back(size);
        }
        return out;
    }

    /// Largest size with multiplicity >= 2, or 0.
    int largest_repeated() const {
        const auto& mult = p_.parts().multiplicities();
        for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
            if (it->second >= 2) return it->first;
        }
        return 0;
    }

private:
    template <typename Pred>
    bool all_sizes(std::initializer_list<int> skip, Pred pred) const {
        for (const auto& [size, count] : p_.parts().multiplicities()) {
            bool skipped = false;
            for (int s : skip) skipped = skipped || s == size;
            if (!skipped && !pred(size)) return false;
        }
        return true;
    }

    const OverlinePartition& p_;
    int k_;
};

bool in_a1(const Shape& s) {
    return s.fully_designated() && s.no_single_copies({1, s.k()}) && s.k() != 1 && s.f(1) >= 3;
}

bool in_a2(const Shape& s) {
    return s.fully_designated() && s.no_single_copies({1}) && s.k() == 1 && s.f(1) >= 2;
}

bool in_a3(const Shape& s) {
    const int k = s.k();
    return s.f(1) == 1 && s.g(1) == 1 && k != 1 && s.f(k) >= 2 && s.g(k) == s.f(k) - 1 &&
           s.fully_designated({1, k}) && s.no_single_copies({1, k});
}

bool in_a4(const Shape& s) {
    const int k = s.k();
    if (!(s.f(1) == 1 && s.g(1) == 1 && k != 1 && s.f(k) >= 2 && s.fully_designated())) return false;
    // Sizes other than 1 with a single copy; exactly one such j is allowed.
    int singles = 0;
    for (int size : s.sizes_with_multiplicity(1)) singles += size != 1 ? 1 : 0;
    return singles == 1 && k == s.largest_repeated();
}

bool in_a5(const Shape& s) {
    const int k = s.k();
    return k != 1 && s.f(k) == 1 && s.g(k) == 1 && s.only_sizes({k}) && s.n() >= 3;
}

bool in_b1(const Shape& s) {
    return s.fully_designated({1}) && s.k() != 1 && s.f(1) >= 3 && s.g(1) == s.f(1) - 1 &&
           s.no_single_copies({1, s.k()});
}

bool in_b2(const Shape& s) {
    return s.fully_designated({1}) && s.no_single_copies({1}) && s.k() == 1 && s.f(1) >= 2 &&
           s.g(1) == s.f(1) - 1;
}

bool in_b3(const Shape& s) {
    return s.f(1) == 1 && s.g(1) == 1 && s.fully_designated({1}) && s.no_single_copies({1}) &&
           s.k() != 1;
}

bool in_b4(const Shape& s) {
    const int k = s.k();
    return s.f(1) == 1 && s.g(1) == 1 && k != 1 && s.f(k) == 1 && s.g(k) == 1 &&
           s.fully_designated({1, k}) && s.no_single_copies({1, k}) && s.largest_repeated() != 0;
}

bool in_b5(const Shape& s) {
    const int k = s.k();
    return k != 1 && s.f(k) == 1 && s.g(k) == 1 && s.f(1) == 1 && s.g(1) == 1 &&
           s.only_sizes({1, k});
}

OverlinePartition with_positions(const OverlinePartition& p, int size, int new_position, int tag) {
    auto g = p.designated();
    g[size] = new_position;
    return OverlinePartition(p.parts(), std::move(g), tag);
}

}  // namespace

RankValue pdt_rank(const OverlinePartition& lambda) {
    const S2Triple image = delta(lambda);
    if (is_single_one(image.beta())) return RankValue::exceptional();
    return RankValue::regular(crank(image.beta()));
}

SignedCountTable ndt_counts(int n) {
    SignedCountTable table;
    table.n = n;
    for_each_s1(n, [&](const OverlinePartition& lambda) {
        const RankValue r = pdt_rank(lambda);
        if (r.is_exceptional()) {
            --table.counts[0];
            ++table.counts[1];
            ++table.counts[-1];
        } else {
            ++table.counts[r.value()];
        }
    });
    std::erase_if(table.counts, [](const auto& kv) { return kv.second == 0; });
    return table;
}

std::map<int, std::int64_t> residue_sums(const std::map<int, std::int64_t>& counts, int modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    std::map<int, std::int64_t> out;
    for (int r = 0; r < modulus; ++r) out[r] = 0;
    for (const auto& [m, c] : counts) out[floor_mod(m, modulus)] += c;
    return out;
}

std::map<int, std::int64_t> ndt_residue(int n, int modulus) {
    return residue_sums(ndt_counts(n).counts, modulus);
}

std::string_view to_string(RankClass c) noexcept {
    switch (c) {
        case RankClass::A1: return "A1";
        case RankClass::A2: return "A2";
        case RankClass::A3: return "A3";
        case RankClass::A4: return "A4";
        case RankClass::A5: return "A5";
        case RankClass::B1: return "B1";
        case RankClass::B2: return "B2";
        case RankClass::B3: return "B3";
        case RankClass::B4: return "B4";
        case RankClass::B5: return "B5";
        case RankClass::Neither: return "none";
    }
    return "none";
}

bool is_a_class(RankClass c) noexcept {
    return c == RankClass::A1 || c == RankClass::A2 || c == RankClass::A3 || c == RankClass::A4 ||
           c == RankClass::A5;
}

bool is_b_class(RankClass c) noexcept {
    return c == RankClass::B1 || c == RankClass::B2 || c == RankClass::B3 || c == RankClass::B4 ||
           c == RankClass::B5;
}

std::vector<RankClass> matching_classes(const OverlinePartition& lambda) {
    const Shape s(lambda);
    std::vector<RankClass> out;
    const std::pair<RankClass, bool (*)(const Shape&)> tests[] = {
        {RankClass::A1, in_a1}, {RankClass::A2, in_a2}, {RankClass::A3, in_a3},
        {RankClass::A4, in_a4}, {RankClass::A5, in_a5}, {RankClass::B1, in_b1},
        {RankClass::B2, in_b2}, {RankClass::B3, in_b3}, {RankClass::B4, in_b4},
        {RankClass::B5, in_b5},
    };
    for (const auto& [cls, test] : tests) {
        if (test(s)) out.push_back(cls);
    }
    return out;
}

RankClass classify(const OverlinePartition& lambda) {
    const auto matches = matching_classes(lambda);
    if (matches.empty()) return RankClass::Neither;
    if (matches.size() > 1) {
        throw std::logic_error("overlapping rank classes for " + format_overline(lambda));
    }
    return matches.front();
}

OverlinePartition phi(const OverlinePartition& lambda) {
    const Shape s(lambda);
    const int k = s.k();
    switch (classify(lambda)) {
        case RankClass::A1:
        case RankClass::A2:
            return with_positions(lambda, 1, s.g(1) - 1, k);
        case RankClass::A3:
            return with_positions(lambda, k, s.g(k) + 1, k);
        case RankClass::A4:
            for (int j : s.sizes_with_multiplicity(1)) {
                if (j != 1) return OverlinePartition(lambda.parts(), lambda.designated(), j);
            }
            break;
        case RankClass::A5:
            return OverlinePartition(Partition(Partition::Multiplicities{{k - 1, 1}, {1, 1}}), {{k - 1, 1}, {1, 1}}, k - 1);
        default:
            break;
    }
    throw std::invalid_argument("phi is defined on A(n) only: " + format_overline(lambda));
}

OverlinePartition phi_inverse(const OverlinePartition& mu) {
    const Shape s(mu);
    const int k = s.k();
    switch (classify(mu)) {
        case RankClass::B1:
        case RankClass::B2:
            return with_positions(mu, 1, s.g(1) + 1, k);
        case RankClass::B3:
            return with_positions(mu, k, s.g(k) - 1, k);
        case RankClass::B4:
            return OverlinePartition(mu.parts(), mu.designated(), s.largest_repeated());
        case RankClass::B5:
            return OverlinePartition(Partition(Partition::Multiplicities{{k + 1, 1}}), {{k + 1, 1}}, k + 1);
        default:
            break;
    }
    throw std::invalid_argument("phi_inverse is defined on B(n) only: " + format_overline(mu));
}

int modified_rank(const OverlinePartition& lambda) {
    const RankClass c = classify(lambda);
    if (is_a_class(c)) return 1;
    if (is_b_class(c)) return -1;
    return pdt_rank(lambda).value();
}

std::map<int, std::int64_t> nmdt_counts(int n) {
    std::map<int, std::int64_t> counts;
    for_each_s1(n, [&](const OverlinePartition& lambda) { ++counts[modified_rank(lambda)]; });
    return counts;
}

std::map<int, std::int64_t> nmdt_residue(int n, int modulus) {
    return residue_sums(nmdt_counts(n), modulus);
}

}  // namespace pdtrank
