#include "linksurg/gf2.hpp"

#include <algorithm>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define LINKSURG_X86 1
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#define LINKSURG_NEON 1
#endif

namespace linksurg::gf2 {

void xor_words_scalar(word_t* dst, const word_t* src, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i) dst[i] ^= src[i];
}

#ifdef LINKSURG_X86
__attribute__((target("avx2"))) static void xor_words_avx2(word_t* dst, const word_t* src,
                                                           std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < nwords; ++i) dst[i] ^= src[i];
}
#endif

#ifdef LINKSURG_NEON
static void xor_words_neon(word_t* dst, const word_t* src, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        uint64x2_t a = vld1q_u64(dst + i);
        uint64x2_t b = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(a, b));
    }
    for (; i < nwords; ++i) dst[i] ^= src[i];
}
#endif

static xor_kernel_fn pick_kernel(const char** name) {
#ifdef LINKSURG_X86
    if (__builtin_cpu_supports("avx2")) {
        *name = "avx2";
        return &xor_words_avx2;
    }
#endif
#ifdef LINKSURG_NEON
    *name = "neon";
    return &xor_words_neon;
#endif
    *name = "scalar";
    return &xor_words_scalar;
}

static const char* g_kernel_name = nullptr;
static xor_kernel_fn g_kernel = pick_kernel(&g_kernel_name);

xor_kernel_fn active_kernel() { return g_kernel; }
const char* active_kernel_name() { return g_kernel_name; }

std::vector<std::pair<std::string, xor_kernel_fn>> all_kernels() {
    std::vector<std::pair<std::string, xor_kernel_fn>> v;
    v.emplace_back("scalar", &xor_words_scalar);
#ifdef LINKSURG_X86
    if (__builtin_cpu_supports("avx2")) v.emplace_back("avx2", &xor_words_avx2);
#endif
#ifdef LINKSURG_NEON
    v.emplace_back("neon", &xor_words_neon);
#endif
    return v;
}

std::vector<std::size_t> rref(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t cc = 0; cc < m.cols(); ++cc) {
                bool a = m.get(r, cc), b = m.get(p, cc);
                m.set(r, cc, b);
                m.set(p, cc, a);
            }
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(BitMatrix m) { return rref(m).size(); }

bool solve(const BitMatrix& a, const BitVec& b, BitVec& x) {
    // Augment with b as the last column.
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) aug.set(r, c, true);
        if (b.get(r)) aug.set(r, a.cols(), true);
    }
    auto pivots = rref(aug);
    x = BitVec(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == a.cols()) return false;  // inconsistent
        if (aug.get(i, a.cols())) x.set(pivots[i], true);
    }
    return true;
}

std::vector<BitVec> nullspace(const BitMatrix& a) {
    BitMatrix m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<BitVec> basis;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        BitVec v(a.cols());
        v.set(c, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (m.get(i, c)) v.set(pivots[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

BitVec reduce_mod(BitVec x, std::vector<BitVec> basis) {
    // Triangularize the basis by leading coordinate, then eliminate those
    // coordinates from x in ascending order (canonical coset representative).
    auto leading = [](const BitVec& v) -> std::size_t {
        for (std::size_t c = 0; c < v.size(); ++c)
            if (v.get(c)) return c;
        return v.size();
    };
    std::vector<BitVec> tri;
    std::vector<std::size_t> lead;
    for (BitVec v : basis) {
        for (;;) {
            std::size_t l = leading(v);
            if (l == v.size()) break;
            bool clashed = false;
            for (std::size_t j = 0; j < tri.size(); ++j)
                if (lead[j] == l) {
                    v.xor_in(tri[j]);
                    clashed = true;
                    break;
                }
            if (!clashed) {
                tri.push_back(v);
                lead.push_back(l);
                break;
            }
        }
    }
    std::vector<std::size_t> order(tri.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return lead[a] < lead[b]; });
    for (std::size_t j : order)
        if (x.get(lead[j])) x.xor_in(tri[j]);
    return x;
}

}  // namespace linksurg::gf2
