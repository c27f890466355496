#pragma once

#include "bdm/multisequence.hpp"
#include "bdm/prime_field.hpp"

#include <map>
#include <span>
#include <vector>

namespace bdm {

/*
 * Joint linear complexity of a ragged prefix: the smallest L >= 0 such that
 * coefficients c_1..c_L over the field satisfy
 *
 *     a[t][i] + sum_j c_j * a[t][i-j] == 0     for all t, L+1 <= i <= n_t
 *
 * (indices 1-based as written; code uses 0-based storage).  Decided by
 * Gaussian elimination over the field, searching L upward from lowerBound;
 * complexity grows monotonically under prefix extension, so passing the
 * previous value is sound.
 */
long joint_linear_complexity(const PrimeField& field, const MultiSequence& seq,
                             std::span<const int> rowLengths, long lowerBound = 0);

/// Convenience overload over the full rectangle.
long joint_linear_complexity(const PrimeField& field, const MultiSequence& seq);

struct ProfileEntry {
    int col = 0;  // 0-based column (time step)
    int row = 0;  // 0-based row read at this substep
    long complexity = 0;
    long jumpHeight = 0;  // complexity increase caused by this symbol
};

struct ComplexityProfile {
    std::vector<ProfileEntry> perSubstep;       // column-major reading order
    std::vector<long> perColumnDeviation;       // L_n - ceil(n*M/(M+1))
    long jumpCount = 0;
    std::map<long, long> heightHistogram;
};

/// Reads the array column by column, rows in order within a column,
/// recomputing the joint complexity after every symbol.
ComplexityProfile complexity_profile(const PrimeField& field, const MultiSequence& seq);

/*
 * Counts the symbols for position (row, col) that leave the joint complexity
 * of the preceding column-major prefix unchanged.  At an eligible position
 * (some symbol increases L) exactly one symbol should keep it; everywhere
 * else no symbol can, so all q qualify.
 */
int uniqueness_check(const PrimeField& field, const MultiSequence& seq, int row, int col);

}  // namespace bdm
