#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dreamforge/core/errors.hpp"
#include "dreamforge/core/rng.hpp"

namespace df {

using Shape = std::vector<int64_t>;

inline int64_t shape_numel(const Shape& s) {
    int64_t n = 1;
    for (int64_t d : s) n *= d;
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ')';
    return os.str();
}

/// Dense n-dimensional array, row-major, contiguous.
template <typename T>
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape shape, T fill = T(0))
        : shape_(std::move(shape)), data_(check_dims(shape_), fill) {}
    Tensor(Shape shape, std::vector<T> data) : shape_(std::move(shape)), data_(std::move(data)) {
        if (int64_t(data_.size()) != shape_numel(shape_))
            throw ShapeError("tensor data length " + std::to_string(data_.size()) +
                             " does not match shape " + shape_str(shape_));
    }

    static Tensor scalar(T v) { return Tensor({1}, std::vector<T>{v}); }

    static Tensor randn(Shape shape, const RngStream& stream, uint64_t index0 = 0, T stddev = T(1)) {
        Tensor t(std::move(shape));
        for (int64_t i = 0; i < t.numel(); ++i) t.data_[size_t(i)] = T(stream.normal(index0 + uint64_t(i))) * stddev;
        return t;
    }

    static Tensor uniform(Shape shape, const RngStream& stream, T lo, T hi, uint64_t index0 = 0) {
        Tensor t(std::move(shape));
        for (int64_t i = 0; i < t.numel(); ++i)
            t.data_[size_t(i)] = T(stream.uniform(index0 + uint64_t(i), double(lo), double(hi)));
        return t;
    }

    const Shape& shape() const { return shape_; }
    int64_t dim(size_t i) const { return shape_.at(i); }
    size_t ndim() const { return shape_.size(); }
    int64_t numel() const { return int64_t(data_.size()); }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    std::vector<T>& vec() { return data_; }
    const std::vector<T>& vec() const { return data_; }

    T& operator[](int64_t i) { return data_[size_t(i)]; }
    const T& operator[](int64_t i) const { return data_[size_t(i)]; }

    T& at(std::initializer_list<int64_t> idx) { return data_[size_t(flat_index(idx))]; }
    const T& at(std::initializer_list<int64_t> idx) const { return data_[size_t(flat_index(idx))]; }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

    Tensor reshaped(Shape new_shape) const {
        if (shape_numel(new_shape) != numel())
            throw ShapeError("reshape " + shape_str(shape_) + " -> " + shape_str(new_shape));
        Tensor t;
        t.shape_ = std::move(new_shape);
        t.data_ = data_;
        return t;
    }

    bool all_finite() const {
        for (const T& v : data_)
            if (!std::isfinite(double(v))) return false;
        return true;
    }

    template <typename U>
    Tensor<U> cast() const {
        Tensor<U> t;
        t = Tensor<U>(shape_);
        for (int64_t i = 0; i < numel(); ++i) t[i] = U(data_[size_t(i)]);
        return t;
    }

private:
    static size_t check_dims(const Shape& s) {
        for (int64_t d : s)
            if (d <= 0) throw ShapeError("non-positive dim in shape " + shape_str(s));
        return size_t(shape_numel(s));
    }

    int64_t flat_index(std::initializer_list<int64_t> idx) const {
        if (idx.size() != shape_.size()) throw ShapeError("index rank mismatch");
        int64_t flat = 0;
        size_t k = 0;
        for (int64_t i : idx) {
            flat = flat * shape_[k] + i;
            ++k;
        }
        return flat;
    }

    Shape shape_;
    std::vector<T> data_;
};

template <typename T>
T max_abs_diff(const Tensor<T>& a, const Tensor<T>& b) {
    if (!a.same_shape(b)) throw ShapeError("max_abs_diff shape mismatch");
    T m = T(0);
    for (int64_t i = 0; i < a.numel(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace df
