#include "c5/linalg.hpp"

#include <stdexcept>

namespace c5 {

bool is_symmetric(const QMatrix& m) {
    size_t n = m.size();
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) return false;
        for (size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) return false;
    }
    return true;
}

PsdResult verify_psd_full(const QMatrix& m0) {
    if (!is_symmetric(m0)) throw std::invalid_argument("verify_psd: matrix not symmetric");
    QMatrix m = m0;
    int n = static_cast<int>(m.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;

    for (int step = 0; step < n; ++step) {
        // symmetric pivoting: bring a positive diagonal entry forward
        int pivot = -1;
        for (int i = step; i < n; ++i)
            if (m[idx[i]][idx[i]] > 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            // all remaining diagonal entries are <= 0; PSD forces the whole
            // remaining submatrix to vanish
            for (int i = step; i < n; ++i)
                for (int j = step; j < n; ++j)
                    if (m[idx[i]][idx[j]] != 0) return {false, step};
            return {true, -1};
        }
        std::swap(idx[step], idx[pivot]);
        const Rational d = m[idx[step]][idx[step]];
        for (int i = step + 1; i < n; ++i) {
            Rational factor = m[idx[i]][idx[step]] / d;
            if (factor == 0) continue;
            for (int j = step + 1; j < n; ++j)
                m[idx[i]][idx[j]] -= factor * m[idx[step]][idx[j]];
            m[idx[i]][idx[step]] = 0;
        }
        // a zero diagonal with a nonzero off-diagonal entry in its row
        // refutes PSD; detect it early for a crisp failing pivot
        for (int i = step + 1; i < n; ++i) {
            if (m[idx[i]][idx[i]] < 0) return {false, i};
            if (m[idx[i]][idx[i]] == 0)
                for (int j = step + 1; j < n; ++j)
                    if (m[idx[i]][idx[j]] != 0) return {false, i};
        }
    }
    return {true, -1};
}

bool verify_psd(const QMatrix& m) { return verify_psd_full(m).psd; }

bool solve_affine(const std::vector<QVector>& rows, const QVector& rhs, QVector& x) {
    size_t nrows = rows.size();
    size_t ncols = x.size();
    if (rhs.size() != nrows) throw std::invalid_argument("solve_affine: size mismatch");
    // augmented matrix
    std::vector<QVector> a(nrows, QVector(ncols + 1));
    for (size_t r = 0; r < nrows; ++r) {
        if (rows[r].size() != ncols) throw std::invalid_argument("solve_affine: row size");
        for (size_t c = 0; c < ncols; ++c) a[r][c] = rows[r][c];
        a[r][ncols] = rhs[r];
    }
    std::vector<long> pivot_col;  // per pivot row
    size_t prow = 0;
    for (size_t col = 0; col < ncols && prow < nrows; ++col) {
        size_t sel = prow;
        while (sel < nrows && a[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(a[prow], a[sel]);
        const Rational d = a[prow][col];
        for (size_t c = col; c <= ncols; ++c) a[prow][c] /= d;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == prow || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t c = col; c <= ncols; ++c) a[r][c] -= f * a[prow][c];
        }
        pivot_col.push_back(static_cast<long>(col));
        ++prow;
    }
    for (size_t r = prow; r < nrows; ++r)
        if (a[r][ncols] != 0) return false;  // inconsistent
    // back-substitute: pivot variables from the free ones already in x
    for (size_t r = 0; r < pivot_col.size(); ++r) {
        size_t pc = static_cast<size_t>(pivot_col[r]);
        Rational v = a[r][ncols];
        for (size_t c = pc + 1; c < ncols; ++c)
            if (a[r][c] != 0) v -= a[r][c] * x[c];
        x[pc] = v;
    }
    // note: free columns left of a pivot column keep their x values because
    // RREF zeroes pivot rows everywhere except their own pivot columns
    return true;
}

}  // namespace c5
