#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdtrank/partition.hpp"

namespace pdtrank {

/// Partition with overline designated summands, written (f, g; k).
///
/// Every occurring size i has exactly one designated copy, recorded as its
/// 1-based position g(i) among the f(i) copies read left to right. One
/// designated copy, the one of size k, is additionally tagged (overlined).
///
/// Example: 3̄' + 1 + 1' is f = {1:2, 3:1}, g = {1:2, 3:1}, k = 3.
class OverlinePartition {
public:
    using Positions = std::map<int, int>;

    /// Throws std::invalid_argument unless g has exactly the sizes of f with
    /// 1 <= g(i) <= f(i), and f(k) >= 1.
    OverlinePartition(Partition parts, Positions designated, int tag);

    const Partition& parts() const noexcept { return parts_; }
    const Positions& designated() const noexcept { return designated_; }
    int tag() const noexcept { return tag_; }

    int multiplicity(int size) const noexcept { return parts_.multiplicity(size); }
    /// g(size); 0 when the size does not occur.
    int position(int size) const noexcept;
    int weight() const noexcept { return parts_.weight(); }

    friend bool operator==(const OverlinePartition&, const OverlinePartition&) = default;
    friend auto operator<=>(const OverlinePartition&, const OverlinePartition&) = default;

private:
    Partition parts_;
    Positions designated_;
    int tag_;
};

/// (alpha, beta; t): x_t >= 1 and x_i != 1 for every i != t, where x are the
/// multiplicities of alpha. beta is unrestricted.
class S2Triple {
public:
    /// Throws std::invalid_argument when the alpha/t condition fails.
    S2Triple(Partition alpha, Partition beta, int tag);

    const Partition& alpha() const noexcept { return alpha_; }
    const Partition& beta() const noexcept { return beta_; }
    int tag() const noexcept { return tag_; }
    int weight() const noexcept { return alpha_.weight() + beta_.weight(); }

    friend bool operator==(const S2Triple&, const S2Triple&) = default;
    friend auto operator<=>(const S2Triple&, const S2Triple&) = default;

private:
    Partition alpha_;
    Partition beta_;
    int tag_;
};

/// Visits S1(n). Order: underlying partitions as in for_each_partition, then
/// position vectors (g_1, g_2, ...) over ascending sizes in lexicographic
/// order, then tag ascending. Nothing is visited for n <= 0.
void for_each_s1(int n, const std::function<void(const OverlinePartition&)>& visit);
std::vector<OverlinePartition> enumerate_s1(int n);

/// Visits S2(n). Order: weight of alpha descending, alpha in for_each_partition
/// order, t ascending, then beta in for_each_partition order.
void for_each_s2(int n, const std::function<void(const S2Triple&)>& visit);
std::vector<S2Triple> enumerate_s2(int n);

/// PD(n): sum over partitions of n of the product of the multiplicities. PD(0) = 1.
std::uint64_t pd_count(int n);

/// PD_t(n) = |S1(n)|. PD_t(0) = 0.
std::uint64_t pdt_count(int n);

/// Canonical text: parts descending, the designated copy of each size suffixed
/// with ', the tagged one prefixed with ~. Example: "~2'+2+1'".
std::string format_overline(const OverlinePartition& p);

/// Grammar: part ("+" part)*, part := "~"? digits "'"?. Parts weakly
/// decreasing, exactly one "~" and it sits on a primed part, exactly one "'"
/// per occurring size. Throws std::invalid_argument otherwise.
OverlinePartition parse_overline(std::string_view text);

/// {"n": ..., "f": {...}, "g": {...}, "k": ...}
nlohmann::json to_json(const OverlinePartition& p);
OverlinePartition overline_from_json(const nlohmann::json& j);

}  // namespace pdtrank
