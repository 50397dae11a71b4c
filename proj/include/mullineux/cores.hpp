#pragma once

#include <string>
#include <vector>

#include "mullineux/partition.hpp"
#include "mullineux/symbol.hpp"

namespace mullineux {

/// Integer vector (n_0..n_{e-1}) with zero sum labelling an e-core.
struct NVector {
    int e = 2;
    std::vector<int> n;

    friend bool operator==(const NVector&, const NVector&) = default;
};

struct CoreDecomposition {
    Partition core;
    int weight = 0;
    int e = 2;

    friend bool operator==(const CoreDecomposition&, const CoreDecomposition&) = default;
};

/// Which removable rim e-hook to strip first. Both orders reach the same
/// core; highest_first is the canonical one.
enum class HookOrder { highest_first, lowest_first };

CoreDecomposition e_core(const Partition& lambda, int e,
                         HookOrder order = HookOrder::highest_first);

/// (e/2) Σ n_i² + Σ i·n_i. Throws std::invalid_argument unless Σ n_i = 0.
int core_size_from_nvector(const NVector& v);

/// Runner bead counts of a beta-set with `bead_count` beads, minus the
/// average. bead_count must be a multiple of e and at least ℓ(μ).
NVector nvector_from_core(const Partition& mu, int e, int bead_count);

/// Same, with the canonical bead count: the least multiple of e above ℓ(μ).
/// Throws std::invalid_argument if μ is not an e-core.
NVector nvector_from_core(const Partition& mu, int e);

Partition core_from_nvector(const NVector& v);

/// n_j = #{i : (a_i-ε_i)/2 ≡ j} - #{i : (-a_i-ε_i)/2 ≡ j}  (mod e).
/// Requires a fixed-point symbol.
NVector nvector_from_symbol(const MullineuxSymbol& symbol);

/// (Σ a_i - |core|)/e for a fixed-point symbol.
int weight_from_symbol(const MullineuxSymbol& symbol);

/// Self-conjugate e-cores of n, lexicographically decreasing.
std::vector<Partition> self_conjugate_cores(int n, int e);

/// Self-conjugate partition with the given diagonal hook lengths, which
/// must be distinct odd numbers in decreasing order.
Partition from_diagonal_hooks(const Partition& hooks);

/// James abacus of a beta-set with the canonical bead count, one text row
/// per abacus row: 'o' bead, '.' gap, runner labels on top.
std::string render_beta_abacus(const Partition& lambda, int e);

} // namespace mullineux
