#ifndef FFGS_FP_MATRIX_HPP
#define FFGS_FP_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ffgs {

using FpVec = std::vector<uint8_t>;

// Dense row-major matrix over GF(p). Cochain spaces in scope stay below a
// few thousand rows/columns; exactness matters, speed barely does.
class FpMat {
public:
    FpMat() : p_(2), rows_(0), cols_(0) {}
    FpMat(uint32_t p, size_t rows, size_t cols, uint64_t budget_cells = 0);

    uint32_t p() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint8_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint8_t v) { a_[r * cols_ + c] = v; }
    void add_at(size_t r, size_t c, int64_t v);

    FpVec row(size_t r) const;
    void set_row(size_t r, const FpVec& v);

    // In-place row reduction to reduced row echelon form; returns rank.
    size_t rref();

    // Rank without mutating.
    size_t rank() const;

    // Basis of { x : M x = 0 } (length-cols vectors).
    std::vector<FpVec> kernel_basis() const;

    // One solution of M x = b, if any.
    std::optional<FpVec> solve(const FpVec& b) const;

private:
    uint32_t p_;
    size_t rows_, cols_;
    std::vector<uint8_t> a_;
};

// Error raised when a matrix would exceed the configured cell budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A growing echelonized row space over GF(p); supports membership tests and
// canonical reduction of vectors against the space (deterministic
// representatives for cohomology reports).
class RowSpace {
public:
    RowSpace(uint32_t p, size_t width) : p_(p), width_(width) {}

    uint32_t p() const { return p_; }
    size_t width() const { return width_; }
    size_t rank() const { return rows_.size(); }

    // Reduce v against the space; returns the canonical remainder.
    FpVec reduce(const FpVec& v) const;
    bool contains(const FpVec& v) const { FpVec r = reduce(v); for (auto x : r) if (x) return false; return true; }
    // Insert v (reduced); returns true when the rank grew.
    bool insert(const FpVec& v);

    const std::vector<FpVec>& rows() const { return rows_; }

private:
    uint32_t p_;
    size_t width_;
    std::vector<FpVec> rows_;   // echelonized, each with leading 1
    std::vector<size_t> lead_;  // pivot column per row
};

// --- small helpers --------------------------------------------------------

FpVec fp_vec_add(uint32_t p, const FpVec& a, const FpVec& b);
FpVec fp_vec_sub(uint32_t p, const FpVec& a, const FpVec& b);
FpVec fp_vec_scale(uint32_t p, uint32_t c, const FpVec& a);
bool fp_vec_is_zero(const FpVec& a);
uint32_t fp_inv(uint32_t p, uint32_t a);

} // namespace ffgs

#endif
