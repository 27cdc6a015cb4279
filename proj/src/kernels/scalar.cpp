#include <cstring>

#include "coce/kernels.hpp"

// Reference kernels. These define the numeric contract every SIMD variant is
// equivalence-tested against, so the loop structure here is deliberately
// fixed: per output element the reduction runs in ascending k order, one
// rounding per multiply and one per add.

namespace coce::kernels {

namespace {

void gemm_scalar(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate) {
    for (int mm = 0; mm < m; ++mm) {
        float* crow = c + static_cast<std::size_t>(mm) * n;
        if (!accumulate) std::memset(crow, 0, sizeof(float) * static_cast<std::size_t>(n));
        const float* arow = a + static_cast<std::size_t>(mm) * k;
        for (int kk = 0; kk < k; ++kk) {
            const float av = arow[kk];
            const float* brow = b + static_cast<std::size_t>(kk) * n;
            for (int nn = 0; nn < n; ++nn) crow[nn] += av * brow[nn];
        }
    }
}

void relu_fwd_scalar(const float* x, float* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_bwd_scalar(const float* x, const float* dy, float* dx, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] > 0.0f) dx[i] += dy[i];
}

void axpy_scalar(float alpha, const float* x, float* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void add_scalar_scalar(float s, float* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] += s;
}

void sgd_update_scalar(float* p, float* v, const float* g, float lr, float mu, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = mu * v[i] + g[i];
        p[i] = p[i] - lr * v[i];
    }
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend backend{
        "scalar",         gemm_scalar, relu_fwd_scalar,
        relu_bwd_scalar,  axpy_scalar, add_scalar_scalar,
        sgd_update_scalar};
    return backend;
}

void gemm_f64(const double* a, const double* b, double* c, int m, int k, int n, bool accumulate) {
    for (int mm = 0; mm < m; ++mm) {
        double* crow = c + static_cast<std::size_t>(mm) * n;
        if (!accumulate) std::memset(crow, 0, sizeof(double) * static_cast<std::size_t>(n));
        const double* arow = a + static_cast<std::size_t>(mm) * k;
        for (int kk = 0; kk < k; ++kk) {
            const double av = arow[kk];
            const double* brow = b + static_cast<std::size_t>(kk) * n;
            for (int nn = 0; nn < n; ++nn) crow[nn] += av * brow[nn];
        }
    }
}

}  // namespace coce::kernels
