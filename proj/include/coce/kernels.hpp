#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace coce::kernels {

// Flat-array compute kernels behind the tensor ops. Each backend must produce
// bit-identical results to the scalar reference: SIMD variants vectorize the
// lane-parallel dimension and keep every per-element reduction in the same
// order, with no FMA contraction (the build sets -ffp-contract=off).
struct Backend {
    const char* name;

    // c[m x n] = a[m x k] * b[k x n], row-major. accumulate=true adds into c.
    // Reduction order per output element: ascending k.
    void (*gemm)(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate);

    void (*relu_fwd)(const float* x, float* y, std::size_t n);
    // dx += dy where x > 0
    void (*relu_bwd)(const float* x, const float* dy, float* dx, std::size_t n);
    // y += alpha * x
    void (*axpy)(float alpha, const float* x, float* y, std::size_t n);
    // x += s
    void (*add_scalar)(float s, float* x, std::size_t n);
    // v = mu*v + g; p = p - lr*v
    void (*sgd_update)(float* p, float* v, const float* g, float lr, float mu, std::size_t n);
};

const Backend& scalar_backend();

// Backends usable on this machine, scalar first.
std::vector<const Backend*> available_backends();

// Active backend. Defaults to the widest available SIMD variant; the
// COCE_KERNELS environment variable ("scalar", "avx2") overrides.
const Backend& active();
bool set_active(const std::string& name);  // false if unknown/unavailable

// Double-precision reference path for the gradient-check mode. Scalar only.
void gemm_f64(const double* a, const double* b, double* c, int m, int k, int n, bool accumulate);

}  // namespace coce::kernels
