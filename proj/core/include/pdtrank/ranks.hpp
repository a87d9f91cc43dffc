#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdtrank/designated.hpp"

namespace pdtrank {

/// pdt-rank of a partition with overline designated summands: the crank of
/// beta in its delta image. When beta = (1) the rank is exceptional; such a
/// partition is counted as -1 at rank 0 and +1 at each of ranks 1 and -1.
class RankValue {
public:
    static RankValue regular(int m) noexcept { return RankValue(m); }
    static RankValue exceptional() noexcept { return RankValue(std::nullopt); }

    bool is_exceptional() const noexcept { return !value_.has_value(); }
    /// Throws std::logic_error on an exceptional rank.
    int value() const;

    /// The integer, or "X" for the exceptional rank.
    std::string to_string() const;

    friend bool operator==(const RankValue&, const RankValue&) = default;

private:
    explicit RankValue(std::optional<int> v) noexcept : value_(v) {}
    std::optional<int> value_;
};

RankValue pdt_rank(const OverlinePartition& lambda);

struct SignedCountTable {
    int n = 0;
    std::map<int, std::int64_t> counts;  // N_dt(m, n), zero entries omitted
};

/// Signed pdt-rank counts over S1(n).
SignedCountTable ndt_counts(int n);

/// Sum of counts over each residue class m mod modulus; every residue
/// 0..modulus-1 is present. Throws std::invalid_argument when modulus < 2.
std::map<int, std::int64_t> residue_sums(const std::map<int, std::int64_t>& counts, int modulus);

std::map<int, std::int64_t> ndt_residue(int n, int modulus);

/// Membership in the sets A1..A5 (modified rank 1) and B1..B5 (delta image
/// with beta = (1), modified rank -1).
enum class RankClass { A1, A2, A3, A4, A5, B1, B2, B3, B4, B5, Neither };

std::string_view to_string(RankClass c) noexcept;
bool is_a_class(RankClass c) noexcept;
bool is_b_class(RankClass c) noexcept;

/// Classifies lambda. Conditions quantified "for all i" exclude the sizes the
/// class already pins down (1 and/or the tag). Two refinements keep A(n) and
/// B(n) in bijection: A4 requires the tag to be the largest size with
/// multiplicity >= 2, and A5 requires weight >= 3.
/// Throws std::logic_error if more than one class matches.
RankClass classify(const OverlinePartition& lambda);

/// Every class whose conditions lambda meets; used to check disjointness.
std::vector<RankClass> matching_classes(const OverlinePartition& lambda);

/// The bijection A(n) -> B(n), applied class by class:
///   A1, A2: the designated 1 moves one copy left (g_1 - 1);
///   A3:     the designated copy of the tag size moves right (g_k + 1);
///   A4:     the tag moves to the unique size j != 1 with a single copy;
///   A5:     (~n') -> (~(n-1)' + 1').
/// Throws std::invalid_argument when lambda is not in A(n).
OverlinePartition phi(const OverlinePartition& lambda);

/// Inverse of phi. Throws std::invalid_argument when mu is not in B(n).
OverlinePartition phi_inverse(const OverlinePartition& mu);

/// 1 on A(n), -1 on B(n), the pdt-rank otherwise.
int modified_rank(const OverlinePartition& lambda);

/// N_mdt(m, n): plain counts of the modified rank over S1(n), zero entries omitted.
std::map<int, std::int64_t> nmdt_counts(int n);
std::map<int, std::int64_t> nmdt_residue(int n, int modulus);

}  // namespace pdtrank
