#include "bdm/linear_complexity.hpp"

#include <algorithm>
#include <stdexcept>

namespace bdm {

namespace {

// Incremental row reducer over F_p: rows are appended and reduced against the
// pivots found so far. Inconsistency (0 = nonzero) is reported immediately.
class Eliminator {
public:
    Eliminator(const PrimeField& field, size_t unknowns)
        : f_(field), cols_(unknowns), pivotRowOfCol_(unknowns, -1) {}

    // Row: coefficients over the unknowns plus right-hand side. Returns false
    // when the system became inconsistent.
    bool add(std::vector<int32_t> coef, int32_t rhs) {
        for (size_t c = 0; c < cols_; ++c) {
            if (coef[c] == 0) continue;
            const int pivot = pivotRowOfCol_[c];
            if (pivot < 0) {
                // Normalize and store as a new pivot row.
                const int32_t scale = f_.inv(coef[c]);
                for (size_t j = c; j < cols_; ++j) coef[j] = f_.mul(coef[j], scale);
                rhs = f_.mul(rhs, scale);
                pivotRowOfCol_[c] = static_cast<int>(rows_.size());
                rows_.push_back({std::move(coef), rhs, c});
                return true;
            }
            const int32_t factor = coef[c];
            const auto& prow = rows_[static_cast<size_t>(pivot)];
            for (size_t j = c; j < cols_; ++j)
                coef[j] = f_.sub(coef[j], f_.mul(factor, prow.coef[j]));
            rhs = f_.sub(rhs, f_.mul(factor, prow.rhs));
        }
        return rhs == 0;
    }

private:
    struct Row {
        std::vector<int32_t> coef;
        int32_t rhs;
        size_t lead;
    };
    const PrimeField& f_;
    size_t cols_;
    std::vector<int> pivotRowOfCol_;
    std::vector<Row> rows_;
};

// Feasibility of a length-L recurrence for the given ragged prefix.
bool recurrence_feasible(const PrimeField& f, const MultiSequence& seq,
                         std::span<const int> rowLengths, long L) {
    Eliminator elim(f, static_cast<size_t>(L));
    for (int t = 0; t < seq.m; ++t) {
        const int len = rowLengths[static_cast<size_t>(t)];
        for (long i = L; i < len; ++i) {  // 0-based position i holds a_{t,i+1}
            std::vector<int32_t> coef(static_cast<size_t>(L));
            for (long j = 1; j <= L; ++j)
                coef[static_cast<size_t>(j - 1)] = seq.at(t, static_cast<int>(i - j));
            if (!elim.add(std::move(coef), f.neg(seq.at(t, static_cast<int>(i))))) return false;
        }
    }
    return true;
}

}  // namespace

long joint_linear_complexity(const PrimeField& field, const MultiSequence& seq,
                             std::span<const int> rowLengths, long lowerBound) {
    if (rowLengths.size() != static_cast<size_t>(seq.m))
        throw std::invalid_argument("joint_linear_complexity: row length count mismatch");
    long maxLen = 0;
    for (int t = 0; t < seq.m; ++t) {
        if (rowLengths[static_cast<size_t>(t)] < 0 || rowLengths[static_cast<size_t>(t)] > seq.n)
            throw std::invalid_argument("joint_linear_complexity: row length out of range");
        maxLen = std::max(maxLen, static_cast<long>(rowLengths[static_cast<size_t>(t)]));
    }
    for (long L = std::max(0L, lowerBound);; ++L) {
        if (L >= maxLen) return maxLen;  // vacuously feasible
        if (recurrence_feasible(field, seq, rowLengths, L)) return L;
    }
}

long joint_linear_complexity(const PrimeField& field, const MultiSequence& seq) {
    std::vector<int> lens(static_cast<size_t>(seq.m), seq.n);
    return joint_linear_complexity(field, seq, lens);
}

ComplexityProfile complexity_profile(const PrimeField& field, const MultiSequence& seq) {
    ComplexityProfile profile;
    profile.perSubstep.reserve(static_cast<size_t>(seq.m) * static_cast<size_t>(seq.n));
    std::vector<int> lens(static_cast<size_t>(seq.m), 0);
    long L = 0;
    for (int col = 0; col < seq.n; ++col) {
        for (int row = 0; row < seq.m; ++row) {
            lens[static_cast<size_t>(row)] = col + 1;
            const long next = joint_linear_complexity(field, seq, lens, L);
            ProfileEntry e;
            e.col = col;
            e.row = row;
            e.complexity = next;
            e.jumpHeight = next - L;
            if (e.jumpHeight > 0) {
                profile.jumpCount += 1;
                profile.heightHistogram[e.jumpHeight] += 1;
            }
            profile.perSubstep.push_back(e);
            L = next;
        }
        const long typical = (static_cast<long>(col + 1) * seq.m + seq.m) / (seq.m + 1);
        profile.perColumnDeviation.push_back(L - typical);
    }
    return profile;
}

int uniqueness_check(const PrimeField& field, const MultiSequence& seq, int row, int col) {
    if (row < 0 || row >= seq.m || col < 0 || col >= seq.n)
        throw std::invalid_argument("uniqueness_check: position out of range");
    std::vector<int> lens(static_cast<size_t>(seq.m), 0);
    for (int t = 0; t < seq.m; ++t) lens[static_cast<size_t>(t)] = t < row ? col + 1 : col;
    MultiSequence work = seq;
    const long before = joint_linear_complexity(field, work, lens);
    lens[static_cast<size_t>(row)] = col + 1;
    int unchanged = 0;
    for (int32_t sym = 0; sym < field.p(); ++sym) {
        work.at(row, col) = sym;
        if (joint_linear_complexity(field, work, lens, before) == before) ++unchanged;
    }
    return unchanged;
}

}  // namespace bdm
