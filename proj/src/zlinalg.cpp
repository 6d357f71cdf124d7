#include "minorb/zlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace minorb::zlinalg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer rows");
        for (long long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t k) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
}

/// row(i) += f * row(j)
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) += f * a.at(j, c);
}

/// col(i) += f * col(j)
void add_col(IntMatrix& a, std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, i) += f * a.at(r, j);
}

/// Locate the entry of minimal nonzero absolute value in the submatrix
/// starting at (t,t); returns false if that submatrix is zero.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t r = t; r < a.rows(); ++r) {
        for (std::size_t c = t; c < a.cols(); ++c) {
            const Int& v = a.at(r, c);
            if (v == 0) continue;
            Int av = abs(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pr = r;
                pc = c;
            }
        }
    }
    return found;
}

/// True iff all entries of row t and column t beyond (t,t) are zero.
bool pivot_is_lone(const IntMatrix& a, std::size_t t) {
    for (std::size_t r = t + 1; r < a.rows(); ++r)
        if (a.at(r, t) != 0) return false;
    for (std::size_t c = t + 1; c < a.cols(); ++c)
        if (a.at(t, c) != 0) return false;
    return true;
}

}  // namespace

SnfResult snf(const IntMatrix& input) {
    IntMatrix a = input;
    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Int> diag;

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pr = t, pc = t;
        if (!find_pivot(a, t, pr, pc)) break;  // remaining submatrix is zero
        swap_rows(a, t, pr);
        swap_cols(a, t, pc);

        // Clear row/column t. Each reduction shrinks |a(t,t)| or finishes a
        // line, so this terminates; re-pivot on the smallest entry each pass.
        while (!pivot_is_lone(a, t)) {
            for (std::size_t r = t + 1; r < a.rows(); ++r) {
                if (a.at(r, t) == 0) continue;
                Int q = a.at(r, t) / a.at(t, t);
                add_row(a, r, t, -q);
            }
            for (std::size_t c = t + 1; c < a.cols(); ++c) {
                if (a.at(t, c) == 0) continue;
                Int q = a.at(t, c) / a.at(t, t);
                add_col(a, c, t, -q);
            }
            std::size_t rr = t, cc = t;
            find_pivot(a, t, rr, cc);
            swap_rows(a, t, rr);
            swap_cols(a, t, cc);
        }
        diag.push_back(abs(a.at(t, t)));
    }

    // Repair the divisibility chain: for each adjacent pair (d[i], d[j]) with
    // d[i] ∤ d[j], replace by (gcd, lcm). Repeated sweeps reach a fixed point.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] % diag[i] != 0) {
                Int g = gcd(diag[i], diag[i + 1]);
                Int l = diag[i] / g * diag[i + 1];
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
        }
    }

    const std::size_t rank = diag.size();
    return SnfResult{std::move(diag), rank};
}

FGAbelianGroup cokernel(const IntMatrix& m) {
    SnfResult s = snf(m);
    FGAbelianGroup g;
    g.free_rank = m.rows() - s.rank;
    for (const Int& d : s.divisors)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

std::size_t kernel_rank(const IntMatrix& m) { return m.cols() - snf(m).rank; }

std::size_t rank(const IntMatrix& m) { return snf(m).rank; }

}  // namespace minorb::zlinalg
