#pragma once

#include <span>
#include <string>
#include <vector>

#include "mullineux/partition.hpp"

namespace mullineux {

/// Two-row array (a_1..a_k ; r_1..r_k) for a fixed e. Column i records the
/// cells a_i and rows r_i of the i-th e-rim peeled off the diagram.
///
/// Only valid symbols can be constructed: use compute_symbol or
/// MullineuxSymbol::from_rows, which checks every Mullineux condition.
class MullineuxSymbol {
public:
    static MullineuxSymbol from_rows(int e, std::vector<int> a, std::vector<int> r);

    int e() const { return e_; }
    std::span<const int> a() const { return a_; }
    std::span<const int> r() const { return r_; }
    int columns() const { return static_cast<int>(a_.size()); }
    /// Σ a_i.
    int total() const;

    /// 0 when e | a_i, 1 otherwise (0-based column index).
    int epsilon(int i) const { return a_[i] % e_ == 0 ? 0 : 1; }

    friend bool operator==(const MullineuxSymbol&, const MullineuxSymbol&) = default;

private:
    MullineuxSymbol(int e, std::vector<int> a, std::vector<int> r)
        : e_(e), a_(std::move(a)), r_(std::move(r))
    {}
    friend MullineuxSymbol compute_symbol(const Partition&, int);

    int e_ = 2;
    std::vector<int> a_;
    std::vector<int> r_;
};

MullineuxSymbol compute_symbol(const Partition& lambda, int e);

/// Checks Mullineux's conditions (i)-(vi) on a raw array. Malformed input
/// (unequal rows, nonpositive entries, e < 2) yields false. The empty array
/// is the symbol of the empty partition and is valid.
bool validate_symbol(std::span<const int> a, std::span<const int> r, int e);

/// Rebuilds λ from its symbol, innermost layer first.
///
/// Each layer (a, r) is grown around the partition μ built so far. Within
/// a layer the rows split into consecutive blocks, one per e-segment, and
/// every block is pinned down by its first and last row; a backward pass
/// marks which blocks can be extended to a full tiling, and a forward pass
/// reads off the row lengths. The result is checked by peeling the layer
/// off again. std::logic_error signals an unrealizable layer.
Partition reconstruct(const MullineuxSymbol& symbol);

/// The symbol of m_e(λ): r_i replaced by a_i - r_i + ε_i.
MullineuxSymbol mullineux_image_symbol(const MullineuxSymbol& symbol);

Partition mullineux_map(const Partition& lambda, int e);

/// True iff r_i = (a_i + ε_i)/2 in every column.
bool has_fixed_point_shape(const MullineuxSymbol& symbol);

/// m_e(λ) == λ. Both the direct comparison and the symbol criterion are
/// evaluated; debug builds assert they agree.
bool is_fixed(const Partition& lambda, int e);

/// All e-regular λ ⊢ n fixed by m_e, lexicographically decreasing.
std::vector<Partition> fixed_points(int n, int e);

/// Membership in the set M_e(n): parity tied to divisibility by e, gaps in
/// [0, 2e], equal neighbours even, gap 2e forces odd, last part below 2e.
bool in_m_set(const Partition& a, int e);

std::vector<Partition> enumerate_m_set(int n, int e);

} // namespace mullineux
