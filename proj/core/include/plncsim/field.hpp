#pragma once

// Exact arithmetic over a prime field GF(q) and the dense matrix
// operations built on it: random fill, Gaussian elimination rank, and
// full-column-rank solves.
//
// Elements are machine integers in [0, q). Every product is reduced
// before it can overflow, so all results are exact; q may be any prime
// up to 2^32-1 (q^2 must fit in 64 bits). Elimination uses the first
// nonzero pivot in column order, which makes rank and solve results
// reproducible bit for bit.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "plncsim/errors.hpp"
#include "plncsim/rng.hpp"

namespace plncsim {

/// Field descriptor: carries the modulus and the scalar operations.
class PrimeField {
public:
    /// Validates primality once; composite (or out-of-range) moduli are
    /// rejected here so arithmetic never has to re-check.
    explicit PrimeField(std::uint64_t modulus);

    std::uint32_t modulus() const { return q_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<std::uint32_t>(s >= q_ ? s - q_ : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) + q_ - b);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }

    /// Multiplicative inverse by extended Euclid. Throws ZeroInverseError on 0.
    std::uint32_t inv(std::uint32_t a) const;

    /// Uniform element including 0.
    std::uint32_t random_element(SplitMix64& rng) const {
        return static_cast<std::uint32_t>(rng.uniform_below(q_));
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t q_;
};

/// Dense row-major matrix over a prime field. Immutable by convention
/// once filled; all operations return fresh matrices.
class FieldMatrix {
public:
    FieldMatrix(PrimeField field, int rows, int cols);

    /// Entries drawn i.i.d. uniform over {0,...,q-1} in row-major order.
    static FieldMatrix random(PrimeField field, int rows, int cols, SplitMix64& rng);
    static FieldMatrix identity(PrimeField field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    std::uint32_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::uint32_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::span<const std::uint32_t> row(int r) const {
        return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }
    std::span<std::uint32_t> row(int r) {
        return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }

    FieldMatrix transposed() const;

    bool operator==(const FieldMatrix&) const = default;

private:
    PrimeField field_;
    int rows_;
    int cols_;
    std::vector<std::uint32_t> data_;
};

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);

/// Rank over GF(q) by Gaussian elimination.
int rank(const FieldMatrix& m);

struct SolveReport {
    int rank = 0;
    std::optional<FieldMatrix> solution; // present iff rank == lhs.cols()
};

/// Eliminates [lhs | rhs] once and back-substitutes when lhs has full
/// column rank. rhs may have any number of columns.
SolveReport solve_with_rank(const FieldMatrix& lhs, const FieldMatrix& rhs);

/// Unique X with lhs*X = rhs when rank(lhs) = cols(lhs); nullopt when the
/// system is rank deficient (a modeled decoding failure, not a bug).
std::optional<FieldMatrix> solve(const FieldMatrix& lhs, const FieldMatrix& rhs);

} // namespace plncsim
