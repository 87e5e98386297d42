#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace structreg {

/// Dense row-major array of doubles. Rank 0 (scalar) through rank-2 is what
/// the rest of the library actually uses; the shape is kept general so
/// image-shaped rows can be described without a separate type.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> shape)
        : shape_(std::move(shape)), data_(count_(shape_), 0.0) {}

    Tensor(std::vector<std::size_t> shape, std::vector<double> values)
        : shape_(std::move(shape)), data_(std::move(values)) {
        if (data_.size() != count_(shape_))
            throw std::invalid_argument("Tensor: value count does not match shape");
    }

    static Tensor scalar(double v) { return Tensor({}, {v}); }

    static Tensor zeros(std::vector<std::size_t> shape) { return Tensor(std::move(shape)); }

    static Tensor full(std::vector<std::size_t> shape, double v) {
        Tensor t(std::move(shape));
        for (auto& x : t.data_) x = v;
        return t;
    }

    /// Build a matrix from nested initializer lists; rows must be equal length.
    static Tensor matrix(std::initializer_list<std::initializer_list<double>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        Tensor t({r, c});
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("Tensor::matrix: ragged rows");
            for (double v : row) t.data_[i++] = v;
        }
        return t;
    }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t numel() const { return data_.size(); }
    bool is_scalar() const { return data_.size() == 1; }

    /// Rows/cols of a rank-2 tensor; a rank-1 tensor is treated as one row.
    std::size_t rows() const { return rank() >= 2 ? shape_[0] : 1; }
    std::size_t cols() const {
        if (rank() >= 2) return shape_[1];
        return rank() == 1 ? shape_[0] : 1;
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::span<double> values() { return data_; }
    std::span<const double> values() const { return data_; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols() + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols() + j]; }

    double value() const {
        if (!is_scalar()) throw std::logic_error("Tensor::value: not a scalar");
        return data_[0];
    }

    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(data_).subspan(i * cols(), cols());
    }
    std::span<double> row(std::size_t i) {
        return std::span<double>(data_).subspan(i * cols(), cols());
    }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

    std::string shape_str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < shape_.size(); ++i) {
            if (i) s += "x";
            s += std::to_string(shape_[i]);
        }
        return s + ")";
    }

private:
    static std::size_t count_(const std::vector<std::size_t>& shape) {
        std::size_t n = 1;
        for (std::size_t d : shape) n *= d;
        return n;
    }

    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

inline bool all_finite(const Tensor& t) {
    for (double v : t.values())
        if (!std::isfinite(v)) return false;
    return true;
}

} // namespace structreg
