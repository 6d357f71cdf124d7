/**
 * zlinalg.hpp — exact integer linear algebra.
 *
 * Dense matrices over arbitrary-precision integers, Smith normal form,
 * and the derived kernel/cokernel data used to assemble finitely
 * generated abelian groups. Everything here is exact; there is no
 * floating point anywhere in this library.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace minorb::zlinalg {

using Int = boost::multiprecision::cpp_int;

/** Dense rows×cols integer matrix. Zero-row / zero-column shapes are legal. */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Build from explicit row data; all rows must have equal length.
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t k);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;

    bool operator==(const IntMatrix& other) const = default;

    /// Human-readable grid, one matrix row per line.
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/** Invariant factors d₁ | d₂ | … | d_rank (all positive) plus the rank. */
struct SnfResult {
    std::vector<Int> divisors;
    std::size_t rank = 0;
};

/**
 * Smith normal form. Diagonalizes by elementary row/column operations with
 * minimal-absolute-value pivoting and repairs the divisibility chain, so the
 * returned divisors satisfy d₁ | d₂ | … and multiply to the gcd of the
 * maximal minors up to sign.
 */
SnfResult snf(const IntMatrix& m);

/**
 * Finitely generated abelian group ℤ^free_rank ⊕ ⊕ᵢ ℤ/dᵢ in canonical form:
 * torsion coefficients in divisibility order, each ≥ 2.
 */
struct FGAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }

    static FGAbelianGroup free(std::size_t rank) { return {rank, {}}; }

    bool operator==(const FGAbelianGroup& other) const = default;
};

/** Cokernel ℤ^rows / im(M): free rank = rows − rank, torsion = divisors > 1. */
FGAbelianGroup cokernel(const IntMatrix& m);

/** Rank of the (free) kernel: cols − rank. */
std::size_t kernel_rank(const IntMatrix& m);

/** Rank over ℚ (number of nonzero invariant factors). */
std::size_t rank(const IntMatrix& m);

}  // namespace minorb::zlinalg
