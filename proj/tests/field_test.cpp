#include "plncsim/field.hpp"

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "plncsim/rng.hpp"

namespace plncsim {
namespace {

// Independent multiply used to build solve fixtures: plain loops and
// explicit modular reduction, no FieldMatrix machinery.
FieldMatrix reference_product(const FieldMatrix& a, const FieldMatrix& b) {
    const std::uint64_t q = a.field().modulus();
    FieldMatrix out(a.field(), a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < b.cols(); ++c) {
            std::uint64_t acc = 0;
            for (int k = 0; k < a.cols(); ++k) {
                acc = (acc + static_cast<std::uint64_t>(a(r, k)) * b(k, c)) % q;
            }
            out(r, c) = static_cast<std::uint32_t>(acc);
        }
    }
    return out;
}

// Exhaustive-search inverse, usable for small moduli.
std::uint32_t brute_force_inverse(std::uint32_t a, std::uint32_t q) {
    for (std::uint32_t x = 1; x < q; ++x) {
        if (static_cast<std::uint64_t>(a) * x % q == 1) return x;
    }
    ADD_FAILURE() << "no inverse found for " << a << " mod " << q;
    return 0;
}

TEST(PrimeFieldTest, AcceptsPrimes) {
    EXPECT_EQ(PrimeField(2).modulus(), 2u);
    EXPECT_EQ(PrimeField(7).modulus(), 7u);
    EXPECT_EQ(PrimeField(257).modulus(), 257u);
    EXPECT_EQ(PrimeField(4294967291ull).modulus(), 4294967291u); // largest 32-bit prime
}

TEST(PrimeFieldTest, RejectsComposites) {
    EXPECT_THROW(PrimeField(256), CompositeModulusError);
    EXPECT_THROW(PrimeField(1), CompositeModulusError);
    EXPECT_THROW(PrimeField(0), CompositeModulusError);
    EXPECT_THROW(PrimeField(4294967295ull), CompositeModulusError);
}

TEST(PrimeFieldTest, RejectsOversizedModulus) {
    EXPECT_THROW(PrimeField(4294967311ull), std::invalid_argument); // prime, but q^2 > 2^64
}

TEST(PrimeFieldTest, ElementOps) {
    const PrimeField f(7);
    EXPECT_EQ(f.add(3, 5), 1u);
    EXPECT_EQ(f.sub(1, 5), 3u);
    EXPECT_EQ(f.mul(3, 5), 1u);
    EXPECT_EQ(f.inv(3), brute_force_inverse(3, 7));
    EXPECT_EQ(f.inv(3), 5u);
}

TEST(PrimeFieldTest, InverseOf2Mod257) {
    const PrimeField f(257);
    EXPECT_EQ(f.inv(2), brute_force_inverse(2, 257));
    EXPECT_EQ(f.inv(2), 129u);
}

TEST(PrimeFieldTest, ZeroHasNoInverse) {
    EXPECT_THROW(PrimeField(7).inv(0), ZeroInverseError);
}

TEST(PrimeFieldTest, AlgebraLaws) {
    SplitMix64 rng(2024);
    for (std::uint32_t q : {2u, 7u, 257u}) {
        const PrimeField f(q);
        for (int i = 0; i < 3000; ++i) {
            const std::uint32_t a = f.random_element(rng);
            const std::uint32_t b = f.random_element(rng);
            const std::uint32_t c = f.random_element(rng);
            EXPECT_EQ(f.sub(f.add(a, b), b), a);
            EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            if (a != 0) {
                EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
            }
        }
    }
}

TEST(FieldMatrixTest, EmptyAndDeterministicRandom) {
    const PrimeField f(257);
    SplitMix64 rng(1);
    const FieldMatrix empty = FieldMatrix::random(f, 0, 5, rng);
    EXPECT_EQ(empty.rows(), 0);
    EXPECT_EQ(empty.cols(), 5);

    SplitMix64 a(99), b(99);
    EXPECT_EQ(FieldMatrix::random(f, 6, 4, a), FieldMatrix::random(f, 6, 4, b));
}

TEST(FieldMatrixTest, RandomGf2IsBalanced) {
    const PrimeField f(2);
    SplitMix64 rng(7);
    const int n = 1000;
    const FieldMatrix m = FieldMatrix::random(f, n, n, rng);
    std::int64_t ones = 0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) ones += m(r, c);
    }
    const double fraction = static_cast<double>(ones) / (static_cast<double>(n) * n);
    EXPECT_GE(fraction, 0.49);
    EXPECT_LE(fraction, 0.51);
}

TEST(RankTest, Identity) {
    for (std::uint32_t q : {2u, 7u, 257u}) {
        EXPECT_EQ(rank(FieldMatrix::identity(PrimeField(q), 6)), 6);
    }
}

TEST(RankTest, DependentRows) {
    // Row 2 = 2 * row 1, so rank 1; hand elimination confirms for both fields.
    for (std::uint32_t q : {7u, 3u}) {
        FieldMatrix m(PrimeField(q), 2, 2);
        m(0, 0) = 1;
        m(0, 1) = 2;
        m(1, 0) = 2;
        m(1, 1) = 4 % q;
        EXPECT_EQ(rank(m), 1);
    }
}

TEST(RankTest, ZeroMatrix) {
    EXPECT_EQ(rank(FieldMatrix(PrimeField(7), 4, 3)), 0);
}

TEST(RankTest, MatchesTransposeRank) {
    SplitMix64 rng(33);
    for (std::uint32_t q : {2u, 7u, 257u}) {
        const PrimeField f(q);
        for (int i = 0; i < 25; ++i) {
            const int rows = 1 + static_cast<int>(rng.uniform_below(8));
            const int cols = 1 + static_cast<int>(rng.uniform_below(8));
            const FieldMatrix m = FieldMatrix::random(f, rows, cols, rng);
            EXPECT_EQ(rank(m), rank(m.transposed()));
        }
    }
}

TEST(RankTest, InvariantUnderRowOps) {
    SplitMix64 rng(44);
    for (std::uint32_t q : {2u, 7u, 257u}) {
        const PrimeField f(q);
        for (int i = 0; i < 25; ++i) {
            const int rows = 2 + static_cast<int>(rng.uniform_below(6));
            const int cols = 1 + static_cast<int>(rng.uniform_below(6));
            FieldMatrix m = FieldMatrix::random(f, rows, cols, rng);
            const int base = rank(m);

            FieldMatrix swapped = m;
            const int r1 = static_cast<int>(rng.uniform_below(rows));
            const int r2 = static_cast<int>(rng.uniform_below(rows));
            for (int c = 0; c < cols; ++c) std::swap(swapped(r1, c), swapped(r2, c));
            EXPECT_EQ(rank(swapped), base);

            FieldMatrix scaled = m;
            const std::uint32_t factor = 1 + static_cast<std::uint32_t>(rng.uniform_below(q - 1));
            for (int c = 0; c < cols; ++c) scaled(r1, c) = f.mul(scaled(r1, c), factor);
            EXPECT_EQ(rank(scaled), base);
        }
    }
}

TEST(SolveTest, IdentityReturnsRhs) {
    const PrimeField f(257);
    SplitMix64 rng(5);
    const FieldMatrix rhs = FieldMatrix::random(f, 6, 3, rng);
    const auto x = solve(FieldMatrix::identity(f, 6), rhs);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, rhs);
}

TEST(SolveTest, ConstructThenSolveRoundtrip) {
    const PrimeField f(257);
    SplitMix64 rng(6);
    const FieldMatrix a = FieldMatrix::random(f, 8, 5, rng);
    ASSERT_EQ(rank(a), 5); // deterministic seed; retune the seed if this ever trips
    const FieldMatrix x_true = FieldMatrix::random(f, 5, 3, rng);
    const FieldMatrix rhs = reference_product(a, x_true);
    const auto x = solve(a, rhs);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, x_true);
}

TEST(SolveTest, RankDeficientReturnsNothing) {
    const PrimeField f(7);
    FieldMatrix a(f, 2, 2);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(1, 0) = 2;
    a(1, 1) = 4;
    FieldMatrix rhs(f, 2, 1);
    rhs(0, 0) = 3;
    rhs(1, 0) = 5;
    const SolveReport report = solve_with_rank(a, rhs);
    EXPECT_EQ(report.rank, 1);
    EXPECT_FALSE(report.solution.has_value());
}

TEST(SolveTest, RoundtripOnWideModulus) {
    // Exercises the eagerly reduced elimination path (q >= 2^16).
    const PrimeField f(2147483647u);
    SplitMix64 rng(8);
    const FieldMatrix a = FieldMatrix::random(f, 7, 4, rng);
    ASSERT_EQ(rank(a), 4);
    const FieldMatrix x_true = FieldMatrix::random(f, 4, 2, rng);
    const auto x = solve(a, reference_product(a, x_true));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, x_true);
    EXPECT_EQ(rank(a), rank(a.transposed()));
}

TEST(SolveTest, RandomRoundtrips) {
    SplitMix64 rng(77);
    for (std::uint32_t q : {2u, 7u, 257u}) {
        const PrimeField f(q);
        int done = 0;
        while (done < 40) {
            const int cols = 1 + static_cast<int>(rng.uniform_below(5));
            const int rows = cols + static_cast<int>(rng.uniform_below(4));
            const FieldMatrix a = FieldMatrix::random(f, rows, cols, rng);
            if (rank(a) != cols) continue; // singular draws happen over GF(2)
            const FieldMatrix x_true = FieldMatrix::random(f, cols, 2, rng);
            const auto x = solve(a, reference_product(a, x_true));
            ASSERT_TRUE(x.has_value());
            EXPECT_EQ(*x, x_true);
            ++done;
        }
    }
}

TEST(MatrixProductTest, MatchesReference) {
    SplitMix64 rng(91);
    for (std::uint32_t q : {2u, 257u, 2147483647u}) {
        const PrimeField f(q);
        const FieldMatrix a = FieldMatrix::random(f, 5, 7, rng);
        const FieldMatrix b = FieldMatrix::random(f, 7, 4, rng);
        EXPECT_EQ(a * b, reference_product(a, b));
    }
}

} // namespace
} // namespace plncsim
