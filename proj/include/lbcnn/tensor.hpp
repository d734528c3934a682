#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "lbcnn/errors.hpp"
#include "lbcnn/rng.hpp"

namespace lbcnn {

using Index = std::int64_t;
using Shape = std::vector<Index>;

inline std::string shape_str(const Shape& shape) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "," : "") << shape[i];
    os << ']';
    return os.str();
}

/// Dense real-valued tensor, rank 1..4, row-major with layout
/// (batch, channel, row, column). The flat index of element (n,c,y,x)
/// is ((n*C + c)*H + y)*W + x.
class Tensor {
public:
    Tensor() = default;

    Tensor(Shape shape, double fill = 0.0) : shape_(std::move(shape)) {
        validate_shape(shape_);
        data_.assign(static_cast<std::size_t>(numel(shape_)), fill);
    }

    Tensor(std::initializer_list<Index> shape, double fill = 0.0)
        : Tensor(Shape(shape), fill) {}

    static Index numel(const Shape& shape) {
        Index n = 1;
        for (Index e : shape) n *= e;
        return n;
    }

    const Shape& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    Index dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }
    Index size() const { return static_cast<Index>(data_.size()); }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double& operator[](Index flat) { return data_[static_cast<std::size_t>(flat)]; }
    double operator[](Index flat) const { return data_[static_cast<std::size_t>(flat)]; }

    /// 4-D element access; the tensor must have rank 4.
    double& at(Index n, Index c, Index y, Index x) {
        return data_[static_cast<std::size_t>(flat_index(n, c, y, x))];
    }
    double at(Index n, Index c, Index y, Index x) const {
        return data_[static_cast<std::size_t>(flat_index(n, c, y, x))];
    }

    /// 2-D element access; the tensor must have rank 2.
    double& at2(Index r, Index c) { return data_[static_cast<std::size_t>(r * dim(1) + c)]; }
    double at2(Index r, Index c) const { return data_[static_cast<std::size_t>(r * dim(1) + c)]; }

    /// Pointer to the contiguous H*W plane (n, c) of a rank-4 tensor.
    double* plane(Index n, Index c) {
        return data_.data() + static_cast<std::size_t>((n * dim(1) + c) * dim(2) * dim(3));
    }
    const double* plane(Index n, Index c) const {
        return data_.data() + static_cast<std::size_t>((n * dim(1) + c) * dim(2) * dim(3));
    }

    void fill(double value) { data_.assign(data_.size(), value); }

    /// Fills with i.i.d. draws from the given sampler, in flat order.
    template <typename Sampler>
    void generate(Sampler&& sample) {
        for (double& v : data_) v = sample();
    }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    bool operator==(const Tensor& other) const {
        return shape_ == other.shape_ && data_ == other.data_;
    }

private:
    static void validate_shape(const Shape& shape) {
        if (shape.empty() || shape.size() > 4)
            throw ShapeError("tensor rank must be 1..4, got " + shape_str(shape));
        for (Index e : shape)
            if (e < 1) throw ShapeError("tensor extents must be >= 1, got " + shape_str(shape));
    }

    Index flat_index(Index n, Index c, Index y, Index x) const {
        return ((n * shape_[1] + c) * shape_[2] + y) * shape_[3] + x;
    }

    Shape shape_;
    std::vector<double> data_;
};

/// Gathers the kh x kw patch centered at (cy, cx) from every channel of
/// a single-sample map, channel-major then row-major, reading positions
/// outside the image as zero. The patch covers rows
/// [cy - kh/2, cy - kh/2 + kh) and the analogous columns. The center
/// must be one a stride-1, `pad`-padded convolution would visit.
inline std::vector<double> im2patch(const Tensor& x, Index cy, Index cx,
                                    Index kh, Index kw, Index pad) {
    if (x.rank() != 4 || x.dim(0) != 1)
        throw ShapeError("im2patch expects a [1,p,H,W] tensor, got " + shape_str(x.shape()));
    if (pad < 0) throw ParamError("im2patch: pad must be >= 0");
    const Index channels = x.dim(1), height = x.dim(2), width = x.dim(3);
    const Index top = cy - kh / 2, left = cx - kw / 2;
    if (top < -pad || left < -pad || top + kh > height + pad || left + kw > width + pad)
        throw BoundsError("im2patch: center outside padded bounds");

    std::vector<double> patch(static_cast<std::size_t>(channels * kh * kw), 0.0);
    std::size_t out = 0;
    for (Index c = 0; c < channels; ++c)
        for (Index dy = 0; dy < kh; ++dy)
            for (Index dx = 0; dx < kw; ++dx, ++out) {
                const Index y = top + dy, xx = left + dx;
                if (y >= 0 && y < height && xx >= 0 && xx < width)
                    patch[out] = x.at(0, c, y, xx);
            }
    return patch;
}

}  // namespace lbcnn
