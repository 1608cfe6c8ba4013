#include "plncsim/field.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace plncsim {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace

PrimeField::PrimeField(std::uint64_t modulus) {
    if (modulus > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("field modulus too large: q^2 must fit in 64 bits");
    }
    if (!is_prime(modulus)) {
        throw CompositeModulusError("field modulus must be prime, got " + std::to_string(modulus));
    }
    q_ = static_cast<std::uint32_t>(modulus);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw ZeroInverseError("zero has no multiplicative inverse");
    // Extended Euclid on (a, q); q prime guarantees gcd 1.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q_, new_r = a;
    while (new_r != 0) {
        const std::int64_t quotient = r / new_r;
        t -= quotient * new_t;
        std::swap(t, new_t);
        r -= quotient * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += q_;
    return static_cast<std::uint32_t>(t);
}

FieldMatrix::FieldMatrix(PrimeField field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be non-negative");
    data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FieldMatrix FieldMatrix::random(PrimeField field, int rows, int cols, SplitMix64& rng) {
    FieldMatrix m(field, rows, cols);
    for (auto& v : m.data_) v = field.random_element(rng);
    return m;
}

FieldMatrix FieldMatrix::identity(PrimeField field, int n) {
    FieldMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.field() != b.field()) throw std::invalid_argument("matrix product across different fields");
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    const PrimeField& f = a.field();
    const std::uint64_t q = f.modulus();
    FieldMatrix out(f, a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int k = 0; k < a.cols(); ++k) {
            const std::uint64_t arc = a(r, k);
            if (arc == 0) continue;
            for (int c = 0; c < b.cols(); ++c) {
                // arc*b < q^2 and out < q, so the sum stays below 2^64.
                out(r, c) = static_cast<std::uint32_t>((out(r, c) + arc * b(k, c)) % q);
            }
        }
    }
    return out;
}

namespace {

// Working state for elimination over [lhs | rhs], kept in uint64 rows.
//
// For q < 2^16 entries are reduced lazily: a row only accumulates
// products below q^2, and with fewer than 2^31 pivot steps the running
// value stays under 2^63. Pivot rows are normalized (hence reduced)
// before they are used as multiplicands, preserving the bound. For
// larger q every update reduces eagerly.
class Eliminator {
public:
    Eliminator(const FieldMatrix& lhs, const FieldMatrix& rhs)
        : field_(lhs.field()),
          q_(field_.modulus()),
          rows_(lhs.rows()),
          lhs_cols_(lhs.cols()),
          rhs_cols_(rhs.cols()),
          width_(lhs.cols() + rhs.cols()),
          lazy_(q_ < (1u << 16)),
          work_(static_cast<std::size_t>(rows_) * width_) {
        for (int r = 0; r < rows_; ++r) {
            std::uint64_t* dst = row(r);
            for (int c = 0; c < lhs_cols_; ++c) dst[c] = lhs(r, c);
            for (int c = 0; c < rhs_cols_; ++c) dst[lhs_cols_ + c] = rhs(r, c);
        }
    }

    // Row echelon form with first-nonzero pivoting; returns the rank.
    int forward_eliminate() {
        int pivot = 0;
        for (int col = 0; col < lhs_cols_ && pivot < rows_; ++col) {
            int found = -1;
            for (int r = pivot; r < rows_; ++r) {
                if (reduced(r, col) != 0) {
                    found = r;
                    break;
                }
            }
            if (found < 0) continue;
            if (found != pivot) swap_rows(found, pivot);
            normalize(pivot, col);
            for (int r = pivot + 1; r < rows_; ++r) {
                const std::uint32_t factor = reduced(r, col);
                if (factor != 0) subtract_scaled(r, pivot, factor, col);
            }
            ++pivot;
        }
        return pivot;
    }

    // Valid only after forward_eliminate returned lhs_cols_ (every column
    // has a pivot, so pivot i sits in row i, column i).
    FieldMatrix back_substitute() {
        FieldMatrix x(field_, lhs_cols_, rhs_cols_);
        for (int i = lhs_cols_ - 1; i >= 0; --i) {
            const std::uint64_t* src = row(i);
            for (int c = 0; c < rhs_cols_; ++c) {
                std::uint64_t acc = src[lhs_cols_ + c] % q_;
                for (int j = i + 1; j < lhs_cols_; ++j) {
                    const std::uint64_t coeff = src[j] % q_;
                    acc = (acc + (q_ - field_.mul(static_cast<std::uint32_t>(coeff), x(j, c)))) % q_;
                }
                x(i, c) = static_cast<std::uint32_t>(acc);
            }
        }
        return x;
    }

private:
    std::uint64_t* row(int r) { return work_.data() + static_cast<std::size_t>(r) * width_; }

    std::uint32_t reduced(int r, int c) {
        std::uint64_t& v = row(r)[c];
        v %= q_;
        return static_cast<std::uint32_t>(v);
    }

    void swap_rows(int a, int b) {
        std::uint64_t* ra = row(a);
        std::uint64_t* rb = row(b);
        for (int c = 0; c < width_; ++c) std::swap(ra[c], rb[c]);
    }

    // Reduce the pivot row and scale it so the pivot entry becomes 1.
    void normalize(int r, int col) {
        std::uint64_t* rr = row(r);
        const std::uint32_t inv = field_.inv(static_cast<std::uint32_t>(rr[col] % q_));
        for (int c = col; c < width_; ++c) rr[c] = rr[c] % q_ * inv % q_;
    }

    // row[dst] -= factor * row[src]; src is a normalized (reduced) row.
    void subtract_scaled(int dst, int src, std::uint32_t factor, int col) {
        std::uint64_t* rd = row(dst);
        const std::uint64_t* rs = row(src);
        const std::uint64_t c = q_ - factor; // add c*src ≡ subtract factor*src (mod q)
        if (lazy_) {
            rd[col] = 0;
            for (int j = col + 1; j < width_; ++j) rd[j] += c * rs[j];
        } else {
            rd[col] = 0;
            for (int j = col + 1; j < width_; ++j) rd[j] = (rd[j] % q_ + c * rs[j] % q_) % q_;
        }
    }

    PrimeField field_;
    std::uint64_t q_;
    int rows_;
    int lhs_cols_;
    int rhs_cols_;
    int width_;
    bool lazy_;
    std::vector<std::uint64_t> work_;
};

} // namespace

int rank(const FieldMatrix& m) {
    const FieldMatrix empty_rhs(m.field(), m.rows(), 0);
    Eliminator e(m, empty_rhs);
    return e.forward_eliminate();
}

SolveReport solve_with_rank(const FieldMatrix& lhs, const FieldMatrix& rhs) {
    if (lhs.field() != rhs.field()) throw std::invalid_argument("solve across different fields");
    if (lhs.rows() != rhs.rows()) throw std::invalid_argument("solve row count mismatch");
    Eliminator e(lhs, rhs);
    SolveReport report;
    report.rank = e.forward_eliminate();
    if (report.rank == lhs.cols()) report.solution = e.back_substitute();
    return report;
}

std::optional<FieldMatrix> solve(const FieldMatrix& lhs, const FieldMatrix& rhs) {
    return solve_with_rank(lhs, rhs).solution;
}

} // namespace plncsim
