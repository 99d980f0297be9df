#pragma once

#include <optional>
#include <vector>

#include "c5/rational.hpp"

namespace c5 {

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

bool is_symmetric(const QMatrix& m);

struct PsdResult {
    bool psd = false;
    int failing_pivot = -1;  // column index of the decisive pivot when not PSD
};

// Exact PSD decision by rational LDL^T with symmetric pivoting: a negative
// pivot refutes, a zero pivot demands its whole remaining row be zero.
PsdResult verify_psd_full(const QMatrix& m);
bool verify_psd(const QMatrix& m);

// Solves A x = b exactly, leaving x untouched on non-pivot columns (x is
// both the initial guess for free variables and the output). Returns false
// if the system is inconsistent.
bool solve_affine(const std::vector<QVector>& rows, const QVector& rhs, QVector& x);

}  // namespace c5
