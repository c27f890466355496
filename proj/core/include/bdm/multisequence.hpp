#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace bdm {

/// An M x N array of field elements, row-major. Rows are the parallel
/// streams, columns the time steps; both indices 0-based in code.
struct MultiSequence {
    int m = 0;
    int n = 0;
    std::vector<int32_t> data;

    MultiSequence() = default;
    MultiSequence(int rows, int cols)
        : m(rows), n(cols), data(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

    int32_t at(int row, int col) const {
        return data[static_cast<size_t>(row) * static_cast<size_t>(n) +
                    static_cast<size_t>(col)];
    }
    int32_t& at(int row, int col) {
        return data[static_cast<size_t>(row) * static_cast<size_t>(n) +
                    static_cast<size_t>(col)];
    }

    bool operator==(const MultiSequence&) const = default;
};

/*
 * Text format: header line "q M N", then M lines of N space-separated
 * symbols in 0..q-1.
 */
struct MultiSequenceFile {
    int q = 0;
    MultiSequence seq;
};

MultiSequenceFile read_multisequence(std::istream& in);
void write_multisequence(std::ostream& out, int q, const MultiSequence& seq);

}  // namespace bdm
