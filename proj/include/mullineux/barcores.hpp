#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mullineux/partition.hpp"

namespace mullineux {

/// One t-bar removal on the abacus.
struct BarMove {
    enum class Kind { slide, pair };
    Kind kind = Kind::slide;
    int position = 0; // slide: bead moved up from here; pair: smaller bead a
    int partner = 0;  // pair only: t - a

    friend bool operator==(const BarMove&, const BarMove&) = default;
};

/// t-runner abacus of a bar partition. A part p is a bead at position p,
/// i.e. on runner p mod t in row p / t.
class Abacus {
public:
    Abacus(int t, std::set<int> beads);

    int t() const { return t_; }
    const std::set<int>& beads() const { return beads_; }
    int runner(int position) const { return position % t_; }
    int row(int position) const { return position / t_; }

    bool has_bead(int position) const { return beads_.count(position) != 0; }

    /// Every legal move: slides of a bead p ≥ t onto a vacant p - t (a bead
    /// reaching 0 disappears), and removals of first-row pairs a, t - a.
    std::vector<BarMove> moves() const;
    void apply(const BarMove& move);

    Partition to_partition() const;
    int size() const;

    /// Runner labels on top, then one line per row with 'o' for a bead and
    /// '.' for a vacancy.
    std::string render() const;

private:
    int t_;
    std::set<int> beads_;
};

Abacus abacus_display(const Partition& lambda, int t);

struct BarCoreDecomposition {
    Partition core;
    int bar_weight = 0;
    int t = 2;
    /// Odd distinct parts with t = 2e, e even: the domain on which the
    /// core and weight do not depend on the order of moves.
    bool canonical_domain = false;
};

/// Distinct odd parts and t divisible by 4.
bool in_canonical_bar_domain(const Partition& lambda, int t);

/// Canonical order: slide every bead as far up as it goes, lowest runner
/// first, then remove the first-row pair with the smallest a; repeat.
BarCoreDecomposition bar_core(const Partition& lambda, int t);

/// Number of distinct-odd-part partitions of |μ| + t·w with t-bar core μ
/// and bar weight w, by enumeration. t must be 2e with e even, and μ a bar
/// core with odd distinct parts.
std::int64_t same_barcore_count(const Partition& mu, int t, int w);

/// Number of r-tuples of partitions of total size s.
std::int64_t tuple_count(int r, int s);

/// Tuples (γ^1..γ^r ; τ) with τ in odd parts and |τ| + 2Σ|γ^i| = s,
/// counted from enumerated partition counts.
std::int64_t kappa(int r, int s);

} // namespace mullineux
