#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "coce/errors.hpp"

namespace coce {

inline std::string shape_str(const std::vector<int>& shape) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "x" : "") << shape[i];
    os << "]";
    return os.str();
}

inline std::size_t shape_numel(const std::vector<int>& shape) {
    std::size_t n = 1;
    for (int d : shape) {
        if (d <= 0) throw DimensionError("non-positive dimension in shape " + shape_str(shape));
        n *= static_cast<std::size_t>(d);
    }
    return n;
}

// Dense row-major n-d array with an optional gradient buffer of the same
// length. Gradients accumulate; callers zero them between backward passes.
template <typename T>
struct TensorT {
    std::vector<int> shape;
    std::vector<T> data;
    std::vector<T> grad;  // empty until ensure_grad()
    bool requires_grad = false;

    TensorT() = default;
    explicit TensorT(std::vector<int> s) : shape(std::move(s)), data(shape_numel(shape), T(0)) {}
    TensorT(std::vector<int> s, std::vector<T> d) : shape(std::move(s)), data(std::move(d)) {
        if (data.size() != shape_numel(shape))
            throw DimensionError("data length " + std::to_string(data.size()) +
                                 " does not match shape " + shape_str(shape));
    }

    std::size_t numel() const { return data.size(); }
    int dim(std::size_t i) const { return shape.at(i); }
    int ndim() const { return static_cast<int>(shape.size()); }

    void ensure_grad() {
        if (grad.size() != data.size()) grad.assign(data.size(), T(0));
    }
    void zero_grad() {
        if (!grad.empty()) std::fill(grad.begin(), grad.end(), T(0));
    }
    bool has_grad() const { return grad.size() == data.size(); }

    bool all_finite() const {
        for (T v : data)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }

    T& at(std::size_t i) { return data[i]; }
    T at(std::size_t i) const { return data[i]; }

    // 4-d accessor, row-major (b, c, h, w)
    T& at4(int b, int c, int h, int w) {
        const int C = shape[1], H = shape[2], W = shape[3];
        return data[static_cast<std::size_t>(((b * C + c) * H + h) * W + w)];
    }
    T at4(int b, int c, int h, int w) const {
        const int C = shape[1], H = shape[2], W = shape[3];
        return data[static_cast<std::size_t>(((b * C + c) * H + h) * W + w)];
    }
    // 3-d accessor (c, h, w)
    T& at3(int c, int h, int w) {
        const int H = shape[1], W = shape[2];
        return data[static_cast<std::size_t>((c * H + h) * W + w)];
    }
    T at3(int c, int h, int w) const {
        const int H = shape[1], W = shape[2];
        return data[static_cast<std::size_t>((c * H + h) * W + w)];
    }
    T& at2(int r, int c) { return data[static_cast<std::size_t>(r * shape[1] + c)]; }
    T at2(int r, int c) const { return data[static_cast<std::size_t>(r * shape[1] + c)]; }
};

template <typename T>
using TensorPtr = std::shared_ptr<TensorT<T>>;

template <typename T>
TensorPtr<T> make_tensor(std::vector<int> shape) {
    return std::make_shared<TensorT<T>>(std::move(shape));
}

template <typename T>
TensorPtr<T> make_tensor(std::vector<int> shape, std::vector<T> data) {
    return std::make_shared<TensorT<T>>(std::move(shape), std::move(data));
}

using Tensor = TensorT<float>;

// c x H x W float image with pixel values in [0, 1].
using Image = TensorT<float>;

}  // namespace coce
