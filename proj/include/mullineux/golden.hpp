#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mullineux::golden {

/// Expected fixed-point counts indexed by (n, w), 1 ≤ n ≤ n_max and
/// 0 ≤ w ≤ w_max. Blank cells are stored as 0.
struct GoldenTable {
    int e = 4;
    int n_max = 0;
    int w_max = 0;
    std::vector<std::vector<std::int64_t>> rows; // rows[n-1][w]
    std::string provenance;

    std::int64_t cell(int n, int w) const { return rows.at(n - 1).at(w); }
};

/// The e = 4 reference table.
const GoldenTable& reference_table_e4();

/// A sequence prefix starting at index `offset`.
struct GoldenSequence {
    std::string id;
    std::string description;
    int offset = 0;
    std::vector<std::int64_t> values;
    std::string provenance;
};

/// Looks up an embedded sequence by its OEIS id; throws std::out_of_range
/// for unknown ids.
const GoldenSequence& sequence(const std::string& id);
const std::vector<GoldenSequence>& all_sequences();

/// Id of the embedded sequence for MF_e(-q), e in 3..6.
std::string alternating_sequence_id(int e);

} // namespace mullineux::golden
