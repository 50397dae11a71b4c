#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mullineux {

/// A partition of n: parts stored largest first, no zeros.
///
/// The empty partition is the unique partition of 0. Instances are
/// immutable once built; all mutating algorithms produce new values.
class Partition {
public:
    Partition() = default;

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& part_vector() const { return parts_; }

    /// |λ|.
    int size() const { return n_; }
    /// Number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// λ_row with 1-based rows; 0 past the last part.
    int row(int row) const
    {
        return row >= 1 && row <= length() ? parts_[row - 1] : 0;
    }

    /// Multiplicity of the value v among the parts.
    int multiplicity(int v) const;

    bool contains_cell(int row, int col) const
    {
        return row >= 1 && col >= 1 && col <= this->row(row);
    }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    friend Partition make_partition(std::span<const int> parts);
    friend Partition make_partition_unchecked(std::vector<int> parts);

    std::vector<int> parts_;
    int n_ = 0;
};

/// Validating constructor. Trailing zeros are stripped; negative parts or
/// an increasing adjacent pair raise std::invalid_argument.
Partition make_partition(std::span<const int> parts);
Partition make_partition(std::initializer_list<int> parts);

/// For algorithms that produce parts already known to be valid.
Partition make_partition_unchecked(std::vector<int> parts);

/// Parses "7,7,7,4,4,1,1" (whitespace tolerated, empty string is ()).
Partition parse_partition(const std::string& text);

/// A box of the Young diagram, 1-based (row, col).
struct Cell {
    int row = 1;
    int col = 1;
    friend bool operator==(const Cell&, const Cell&) = default;
};

Partition conjugate(const Partition& lambda);

bool is_e_regular(const Partition& lambda, int e);

/// Selects which partitions an enumeration yields. Exactly one constraint
/// is active at a time.
class PartitionFilter {
public:
    enum class Kind {
        all,
        e_regular,
        distinct,
        distinct_odd,
        distinct_odd_not_div,
        odd_or_odd_multiple, // odd parts (distinct) or odd multiples of e (repeatable)
        odd_parts,
    };

    static PartitionFilter all() { return PartitionFilter(Kind::all, 0); }
    static PartitionFilter e_regular(int e);
    static PartitionFilter distinct() { return PartitionFilter(Kind::distinct, 0); }
    static PartitionFilter distinct_odd() { return PartitionFilter(Kind::distinct_odd, 0); }
    static PartitionFilter distinct_odd_not_div(int e);
    static PartitionFilter odd_or_odd_multiple(int e);
    static PartitionFilter odd_parts() { return PartitionFilter(Kind::odd_parts, 0); }

    Kind kind() const { return kind_; }
    int e() const { return e_; }

    bool allows_part(int k) const;
    /// Largest permitted multiplicity of part value k.
    int max_multiplicity(int k) const;
    bool accepts(const Partition& lambda) const;

private:
    PartitionFilter(Kind kind, int e) : kind_(kind), e_(e) {}
    Kind kind_;
    int e_;
};

/// Streams every partition of n accepted by the filter, in lexicographically
/// decreasing order of the parts sequence.
void for_each_partition(int n, const PartitionFilter& filter,
                        const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate(int n, const PartitionFilter& filter);

std::int64_t count_partitions(int n, const PartitionFilter& filter);

/// The rim: cells (i,j) of [λ] with (i+1,j+1) outside [λ], from the top
/// right to the bottom left. Each row is walked right to left before
/// descending. Throws on the empty partition.
std::vector<Cell> rim(const Partition& lambda);

/// The e-rim used to build the Mullineux symbol: e cells along the rim,
/// then a jump to the rightmost rim cell of the next row below the last
/// cell taken, and so on. The last segment may be short.
std::vector<Cell> e_rim(const Partition& lambda, int e);

} // namespace mullineux
