#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace pdtrank {

/// Integer partition stored in multiplicity form: part size -> number of copies.
///
/// Sizes are positive, stored multiplicities are positive; a size that is not
/// stored has multiplicity zero. The empty map is the empty partition.
class Partition {
public:
    using Multiplicities = std::map<int, int>;

    Partition() = default;

    /// Zero multiplicities are dropped. Throws std::invalid_argument on a
    /// non-positive size or a negative multiplicity.
    explicit Partition(Multiplicities mult);

    /// Builds from a list of parts in any order.
    static Partition from_parts(std::span<const int> parts);

    const Multiplicities& multiplicities() const noexcept { return mult_; }
    int multiplicity(int size) const noexcept;

    bool empty() const noexcept { return mult_.empty(); }
    int weight() const noexcept;
    int num_parts() const noexcept;
    int largest_part() const noexcept;
    std::size_t distinct_sizes() const noexcept { return mult_.size(); }

    /// Parts in weakly decreasing order.
    std::vector<int> parts() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.mult_ <=> b.mult_; }

private:
    Multiplicities mult_;
};

inline int weight(const Partition& p) noexcept { return p.weight(); }

/// Visits every partition of n exactly once, in reverse lexicographic order of
/// the descending part lists: (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1^n).
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

/// All partitions of n in the order of for_each_partition. enumerate_partitions(0) = {∅}.
std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions of n by Euler's pentagonal recurrence.
std::uint64_t partition_count(int n);

/// Dyson's crank: the largest part when there are no ones, otherwise the number
/// of parts larger than the number of ones minus the number of ones.
/// The empty partition has crank 0.
int crank(const Partition& p);

struct CrankTable {
    int n = 0;
    std::map<int, std::int64_t> counts;  // M(m, n), zero entries omitted
};

/// Crank distribution of the partitions of n. At n = 1 the conventional signed
/// values M(-1,1) = M(1,1) = 1, M(0,1) = -1 are returned instead of the plain count.
CrankTable crank_distribution(int n);

/// "a+b+c" with parts descending; the empty partition is "∅".
std::string to_text(const Partition& p);

/// Inverse of to_text. Accepts "∅" or "" for the empty partition.
Partition parse_partition(std::string_view text);

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace pdtrank
