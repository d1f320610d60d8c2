#pragma once

#include <cstddef>
#include <vector>

#include "gcpoly/errors.hpp"

namespace gcp {

/// Dense row-major matrix over an arbitrary ring. Element types that carry
/// runtime context (field pointers) work because arithmetic never invokes a
/// default-constructed zero: accumulations start from actual products.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static Mat identity(std::size_t n, const T& zero, const T& one) {
        Mat m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat out = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = out.a_[k] + o.a_[k];
        return out;
    }

    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat out = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = out.a_[k] - o.a_[k];
        return out;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_ || cols_ == 0)
            throw DomainError("Mat: inner dimension mismatch");
        Mat out(rows_, o.cols_, a_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j) {
                T acc = (*this)(i, 0) * o(0, j);
                for (std::size_t k = 1; k < cols_; ++k)
                    acc = acc + (*this)(i, k) * o(k, j);
                out(i, j) = acc;
            }
        return out;
    }

    Mat scaled(const T& c) const {
        Mat out = *this;
        for (auto& x : out.a_) x = x * c;
        return out;
    }

    Mat transpose() const {
        Mat out(cols_, rows_, a_.empty() ? T{} : a_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    T trace() const {
        if (rows_ != cols_ || rows_ == 0) throw DomainError("Mat::trace: not square");
        T acc = (*this)(0, 0);
        for (std::size_t i = 1; i < rows_; ++i) acc = acc + (*this)(i, i);
        return acc;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    static Mat tensor(const Mat& x, const Mat& y) {
        Mat out(x.rows_ * y.rows_, x.cols_ * y.cols_, x.a_[0] * y.a_[0]);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j)
                for (std::size_t k = 0; k < y.rows_; ++k)
                    for (std::size_t l = 0; l < y.cols_; ++l)
                        out(i * y.rows_ + k, j * y.cols_ + l) = x(i, j) * y(k, l);
        return out;
    }

    static Mat direct_sum(const Mat& x, const Mat& y, const T& zero) {
        Mat out(x.rows_ + y.rows_, x.cols_ + y.cols_, zero);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) out(i, j) = x(i, j);
        for (std::size_t i = 0; i < y.rows_; ++i)
            for (std::size_t j = 0; j < y.cols_; ++j)
                out(x.rows_ + i, x.cols_ + j) = y(i, j);
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DomainError("Mat: shape mismatch");
    }
};

}  // namespace gcp
