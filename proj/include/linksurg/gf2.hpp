#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace linksurg::gf2 {

using word_t = std::uint64_t;

// dst[i] ^= src[i] for nwords words. Selected once at startup from CPU features.
using xor_kernel_fn = void (*)(word_t* dst, const word_t* src, std::size_t nwords);

xor_kernel_fn active_kernel();
const char* active_kernel_name();
void xor_words_scalar(word_t* dst, const word_t* src, std::size_t nwords);

// All kernels compiled into the binary (for equivalence tests).
std::vector<std::pair<std::string, xor_kernel_fn>> all_kernels();

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        word_t m = word_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= word_t(1) << (i & 63); }
    void xor_in(const BitVec& o) {
        if (o.w_.size() != w_.size()) throw std::invalid_argument("BitVec size mismatch");
        active_kernel()(w_.data(), o.w_.data(), w_.size());
    }
    bool any() const {
        for (word_t x : w_)
            if (x) return true;
        return false;
    }
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    std::size_t n_ = 0;
    std::vector<word_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), w_(rows * stride_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        word_t m = word_t(1) << (c & 63);
        word_t& x = w_[r * stride_ + (c >> 6)];
        if (v)
            x |= m;
        else
            x &= ~m;
    }
    void flip(std::size_t r, std::size_t c) { w_[r * stride_ + (c >> 6)] ^= word_t(1) << (c & 63); }
    void xor_rows(std::size_t dst, std::size_t src) {
        active_kernel()(w_.data() + dst * stride_, w_.data() + src * stride_, stride_);
    }
    void append_row() {
        ++rows_;
        w_.resize(rows_ * stride_, 0);
    }

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<word_t> w_;
};

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(BitMatrix& m);
std::size_t rank(BitMatrix m);

// Solve A x = b; on success x is the particular solution with all free variables zero.
bool solve(const BitMatrix& a, const BitVec& b, BitVec& x);

// Basis of { x : A x = 0 }, one vector per free column, in column order.
std::vector<BitVec> nullspace(const BitMatrix& a);

// Canonical coset representative of x + span(basis): eliminates the pivot
// coordinate of every basis vector (basis need not be in RREF).
BitVec reduce_mod(BitVec x, std::vector<BitVec> basis);

}  // namespace linksurg::gf2
