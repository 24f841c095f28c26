#include "ffgs/fp_matrix.hpp"

#include <string>

namespace ffgs {

uint32_t fp_inv(uint32_t p, uint32_t a) {
    a %= p;
    if (a == 0) throw std::domain_error("fp_inv: zero");
    uint32_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

FpMat::FpMat(uint32_t p, size_t rows, size_t cols, uint64_t budget_cells)
    : p_(p), rows_(rows), cols_(cols) {
    uint64_t cells = static_cast<uint64_t>(rows) * cols;
    if (budget_cells > 0 && cells > budget_cells)
        throw BudgetExceeded("matrix of " + std::to_string(cells) +
                             " cells exceeds budget " + std::to_string(budget_cells));
    a_.assign(cells, 0);
}

void FpMat::add_at(size_t r, size_t c, int64_t v) {
    int64_t cur = at(r, c);
    int64_t s = (cur + v) % static_cast<int64_t>(p_);
    if (s < 0) s += p_;
    set(r, c, static_cast<uint8_t>(s));
}

FpVec FpMat::row(size_t r) const {
    return FpVec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

void FpMat::set_row(size_t r, const FpVec& v) {
    for (size_t c = 0; c < cols_; ++c) a_[r * cols_ + c] = v[c];
}

size_t FpMat::rref() {
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t piv = rank;
        while (piv < rows_ && at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != rank)
            for (size_t c = 0; c < cols_; ++c) std::swap(a_[piv * cols_ + c], a_[rank * cols_ + c]);
        uint32_t inv = fp_inv(p_, at(rank, col));
        for (size_t c = col; c < cols_; ++c)
            set(rank, c, static_cast<uint8_t>(at(rank, c) * inv % p_));
        for (size_t r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            uint32_t f = at(r, col);
            if (f == 0) continue;
            for (size_t c = col; c < cols_; ++c)
                set(r, c, static_cast<uint8_t>((at(r, c) + (p_ - f) * at(rank, c)) % p_));
        }
        ++rank;
    }
    return rank;
}

size_t FpMat::rank() const {
    FpMat copy = *this;
    return copy.rref();
}

std::vector<FpVec> FpMat::kernel_basis() const {
    FpMat m = *this;
    m.rref();
    // Identify pivot columns.
    std::vector<int> pivot_row(cols_, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c)
        if (m.at(r, c) == 1) {
            bool is_pivot = true;
            for (size_t cc = 0; cc < c; ++cc)
                if (m.at(r, cc) != 0) { is_pivot = false; break; }
            if (is_pivot) pivot_row[c] = static_cast<int>(r++);
        }
    std::vector<FpVec> basis;
    for (size_t free_col = 0; free_col < cols_; ++free_col) {
        if (pivot_row[free_col] >= 0) continue;
        FpVec v(cols_, 0);
        v[free_col] = 1;
        for (size_t c = 0; c < cols_; ++c)
            if (pivot_row[c] >= 0) {
                uint32_t val = m.at(static_cast<size_t>(pivot_row[c]), free_col);
                v[c] = static_cast<uint8_t>((p_ - val) % p_);
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FpVec> FpMat::solve(const FpVec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: rhs size mismatch");
    FpMat aug(p_, rows_, cols_ + 1);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) aug.set(r, c, at(r, c));
        aug.set(r, cols_, b[r]);
    }
    aug.rref();
    FpVec x(cols_, 0);
    for (size_t r = 0; r < rows_; ++r) {
        size_t lead = cols_ + 1;
        for (size_t c = 0; c <= cols_; ++c)
            if (aug.at(r, c) != 0) { lead = c; break; }
        if (lead == cols_ + 1) continue;       // zero row
        if (lead == cols_) return std::nullopt; // 0 = nonzero
        x[lead] = aug.at(r, cols_);
    }
    return x;
}

FpVec RowSpace::reduce(const FpVec& v) const {
    if (v.size() != width_) throw std::invalid_argument("RowSpace: width mismatch");
    FpVec r = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t f = r[lead_[i]];
        if (f == 0) continue;
        const FpVec& row = rows_[i];
        for (size_t c = 0; c < width_; ++c)
            r[c] = static_cast<uint8_t>((r[c] + (p_ - f) * row[c]) % p_);
    }
    return r;
}

bool RowSpace::insert(const FpVec& v) {
    FpVec r = reduce(v);
    size_t lead = width_;
    for (size_t c = 0; c < width_; ++c)
        if (r[c] != 0) { lead = c; break; }
    if (lead == width_) return false;
    uint32_t inv = fp_inv(p_, r[lead]);
    for (size_t c = 0; c < width_; ++c) r[c] = static_cast<uint8_t>(r[c] * inv % p_);
    // Back-substitute into existing rows to keep the reduced form canonical.
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t f = rows_[i][lead];
        if (f == 0) continue;
        for (size_t c = 0; c < width_; ++c)
            rows_[i][c] = static_cast<uint8_t>((rows_[i][c] + (p_ - f) * r[c]) % p_);
    }
    rows_.push_back(std::move(r));
    lead_.push_back(lead);
    return true;
}

FpVec fp_vec_add(uint32_t p, const FpVec& a, const FpVec& b) {
    FpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<uint8_t>((a[i] + b[i]) % p);
    return r;
}

FpVec fp_vec_sub(uint32_t p, const FpVec& a, const FpVec& b) {
    FpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<uint8_t>((a[i] + p - b[i]) % p);
    return r;
}

FpVec fp_vec_scale(uint32_t p, uint32_t c, const FpVec& a) {
    FpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<uint8_t>(a[i] * c % p);
    return r;
}

bool fp_vec_is_zero(const FpVec& a) {
    for (auto x : a)
        if (x) return false;
    return true;
}

} // namespace ffgs
