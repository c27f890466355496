#include "bdm/solver.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>
#include <vector>

namespace bdm {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

size_t bit_size(const BigInt& v) {
    return v == 0 ? 0 : boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

// Fraction-free (Bareiss) row echelon form with column skipping. Returns the
// pivot column of each pivot row; skipped columns are free variables.
std::vector<int> bareiss_echelon(Matrix& a) {
    const size_t n = a.size();
    std::vector<int> pivotCols;
    BigInt prev = 1;
    size_t pivRow = 0;
    for (size_t col = 0; col < n && pivRow < n; ++col) {
        // Pivot with minimal bit length keeps intermediate growth down.
        size_t best = n;
        for (size_t r = pivRow; r < n; ++r) {
            if (a[r][col] == 0) continue;
            if (best == n || bit_size(a[r][col]) < bit_size(a[best][col])) best = r;
        }
        if (best == n) continue;  // free column
        std::swap(a[pivRow], a[best]);
        const BigInt& p = a[pivRow][col];
        for (size_t r = pivRow + 1; r < n; ++r) {
            if (a[r][col] == 0) {
                for (size_t c = col + 1; c < n; ++c) {
                    if (a[pivRow][c] == 0 && a[r][c] == 0) continue;
                    a[r][c] = p * a[r][c] / prev;
                }
            } else {
                for (size_t c = col + 1; c < n; ++c)
                    a[r][c] = (p * a[r][c] - a[r][col] * a[pivRow][c]) / prev;
                a[r][col] = 0;
            }
        }
        prev = p;
        pivotCols.push_back(static_cast<int>(col));
        ++pivRow;
    }
    return pivotCols;
}

}  // namespace

StationaryResult<BigRat> stationary_exact(const BoundedModel& model, const BigRat& q) {
    require_q_above_one(q);
    const EvaluatedTransitions<BigRat> ev = evaluate_transitions(model, q);
    const size_t n = model.layer_size(0);

    auto roundTrip = [&](std::vector<BigRat> x) {
        for (int t = 0; t <= model.m; ++t) x = apply_layer(model, ev, t, x);
        return x;
    };

    // Rows of the layer-0 round-trip operator, assembled by pushing basis
    // vectors through the sparse layer factors.
    std::vector<std::vector<BigRat>> r(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<BigRat> e(n, BigRat{0});
        e[i] = 1;
        r[i] = roundTrip(std::move(e));
    }

    // Integer matrix for (R^T - I) x = 0.
    BigInt common = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const BigRat v = (i == j) ? r[j][i] - 1 : r[j][i];
            common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(v));
        }
    Matrix a(n, std::vector<BigInt>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const BigRat v = ((i == j) ? r[j][i] - 1 : r[j][i]) * BigRat(common);
            a[i][j] = boost::multiprecision::numerator(v);
        }

    const std::vector<int> pivotCols = bareiss_echelon(a);
    const size_t rank = pivotCols.size();
    if (rank != n - 1)
        throw std::runtime_error("stationary_exact: nullspace dimension is " +
                                 std::to_string(n - rank) +
                                 ", expected 1 (model is not irreducible?)");

    std::vector<bool> isPivot(n, false);
    for (int c : pivotCols) isPivot[static_cast<size_t>(c)] = true;
    size_t freeCol = n;
    for (size_t c = 0; c < n; ++c)
        if (!isPivot[c]) freeCol = c;

    std::vector<BigRat> x(n, BigRat{0});
    x[freeCol] = 1;
    for (size_t i = rank; i-- > 0;) {
        const size_t c = static_cast<size_t>(pivotCols[i]);
        BigRat acc = 0;
        for (size_t j = c + 1; j < n; ++j)
            if (a[i][j] != 0) acc += BigRat(a[i][j]) * x[j];
        x[c] = -acc / BigRat(a[i][c]);
    }

    BigRat sum = 0;
    for (const BigRat& v : x) sum += v;
    if (sum == 0) throw std::runtime_error("stationary_exact: degenerate nullspace vector");
    for (BigRat& v : x) v /= sum;
    for (const BigRat& v : x)
        if (v < 0)
            throw std::runtime_error("stationary_exact: stationary vector has negative entries");

    const std::vector<BigRat> check = roundTrip(x);
    BigRat resid = 0;
    for (size_t i = 0; i < n; ++i) resid += boost::multiprecision::abs(check[i] - x[i]);
    if (resid != 0)
        throw std::runtime_error("stationary_exact: fixed-point verification failed");

    StationaryResult<BigRat> res;
    res.residualL1 = resid;
    res.roundTrips = 0;
    res.dist = detail::propagate_layers(model, ev, std::move(x));
    return res;
}

}  // namespace bdm
