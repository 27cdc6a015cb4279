// AVX2 variants of the hot kernels. Compiled with -mavx2 in its own TU and
// only reached through the dispatch table after a runtime CPUID check.
//
// Equivalence contract with the scalar reference: vectorization is across
// independent output elements only, each lane performs the same
// mul-then-add sequence, so results are bit-identical. No FMA.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

#include "coce/kernels.hpp"

namespace coce::kernels {

namespace {

void gemm_avx2(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate) {
    const int n8 = n - (n % 8);
    for (int mm = 0; mm < m; ++mm) {
        float* crow = c + static_cast<std::size_t>(mm) * n;
        if (!accumulate) std::memset(crow, 0, sizeof(float) * static_cast<std::size_t>(n));
        const float* arow = a + static_cast<std::size_t>(mm) * k;
        for (int kk = 0; kk < k; ++kk) {
            const float av = arow[kk];
            const float* brow = b + static_cast<std::size_t>(kk) * n;
            const __m256 va = _mm256_set1_ps(av);
            int nn = 0;
            for (; nn < n8; nn += 8) {
                __m256 vc = _mm256_loadu_ps(crow + nn);
                __m256 vb = _mm256_loadu_ps(brow + nn);
                vc = _mm256_add_ps(vc, _mm256_mul_ps(va, vb));
                _mm256_storeu_ps(crow + nn, vc);
            }
            for (; nn < n; ++nn) crow[nn] += av * brow[nn];
        }
    }
}

void relu_fwd_avx2(const float* x, float* y, std::size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) _mm256_storeu_ps(y + i, _mm256_max_ps(_mm256_loadu_ps(x + i), zero));
    for (; i < n; ++i) y[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_bwd_avx2(const float* x, const float* dy, float* dx, std::size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 mask = _mm256_cmp_ps(_mm256_loadu_ps(x + i), zero, _CMP_GT_OQ);
        __m256 add = _mm256_and_ps(_mm256_loadu_ps(dy + i), mask);
        _mm256_storeu_ps(dx + i, _mm256_add_ps(_mm256_loadu_ps(dx + i), add));
    }
    for (; i < n; ++i)
        if (x[i] > 0.0f) dx[i] += dy[i];
}

void axpy_avx2(float alpha, const float* x, float* y, std::size_t n) {
    const __m256 va = _mm256_set1_ps(alpha);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 vy = _mm256_loadu_ps(y + i);
        vy = _mm256_add_ps(vy, _mm256_mul_ps(va, _mm256_loadu_ps(x + i)));
        _mm256_storeu_ps(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void add_scalar_avx2(float s, float* x, std::size_t n) {
    const __m256 vs = _mm256_set1_ps(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(x + i, _mm256_add_ps(_mm256_loadu_ps(x + i), vs));
    for (; i < n; ++i) x[i] += s;
}

void sgd_update_avx2(float* p, float* v, const float* g, float lr, float mu, std::size_t n) {
    const __m256 vmu = _mm256_set1_ps(mu);
    const __m256 vlr = _mm256_set1_ps(lr);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 vv = _mm256_add_ps(_mm256_mul_ps(vmu, _mm256_loadu_ps(v + i)), _mm256_loadu_ps(g + i));
        _mm256_storeu_ps(v + i, vv);
        __m256 vp = _mm256_sub_ps(_mm256_loadu_ps(p + i), _mm256_mul_ps(vlr, vv));
        _mm256_storeu_ps(p + i, vp);
    }
    for (; i < n; ++i) {
        v[i] = mu * v[i] + g[i];
        p[i] = p[i] - lr * v[i];
    }
}

}  // namespace

const Backend* avx2_backend_impl() {
    static const Backend backend{"avx2",         gemm_avx2, relu_fwd_avx2,
                                 relu_bwd_avx2,  axpy_avx2, add_scalar_avx2,
                                 sgd_update_avx2};
    return &backend;
}

}  // namespace coce::kernels

#endif  // x86_64
