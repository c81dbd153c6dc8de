#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include <Eigen/Core>

#include "nsbf/error.hpp"

namespace nsbf {

template <typename Scalar>
using Vec = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

using VecD = Vec<double>;

// Uniform grid x_i = i*h on [0, b]; m = 1 (mod 5) so 6-point panels tile it.
class UniformMesh {
public:
    UniformMesh(double b, std::ptrdiff_t m) : b_(b), m_(m)
    {
        if (!(b > 0.0) || !std::isfinite(b))
            throw InvalidMesh("mesh endpoint must be positive and finite");
        if (m < 6)
            throw InvalidMesh("mesh needs at least 6 points, got " + std::to_string(m));
        if (m % 5 != 1)
            throw InvalidMesh("mesh point count must be 1 mod 5, got " + std::to_string(m));
        h_ = b / static_cast<double>(m - 1);
    }

    // Rounds m up to the next admissible count.
    static UniformMesh at_least(double b, std::ptrdiff_t m)
    {
        if (m < 6) m = 6;
        while (m % 5 != 1) ++m;
        return UniformMesh(b, m);
    }

    double b() const { return b_; }
    std::ptrdiff_t m() const { return m_; }
    double h() const { return h_; }

    template <typename Scalar = double>
    Scalar step() const
    {
        return Scalar(b_) / Scalar(static_cast<double>(m_ - 1));
    }

    double x(std::ptrdiff_t i) const
    {
        return i == m_ - 1 ? b_ : static_cast<double>(i) * h_;
    }

    template <typename Scalar = double>
    Vec<Scalar> points() const
    {
        Vec<Scalar> xs(m_);
        const Scalar hs = step<Scalar>();
        for (std::ptrdiff_t i = 0; i < m_; ++i)
            xs[i] = Scalar(static_cast<double>(i)) * hs;
        xs[m_ - 1] = Scalar(b_);
        return xs;
    }

    bool operator==(const UniformMesh& o) const { return b_ == o.b_ && m_ == o.m_; }

private:
    double b_;
    std::ptrdiff_t m_;
    double h_;
};

// Finite samples on a mesh.
template <typename Scalar = double>
class GridFunction {
public:
    GridFunction(const UniformMesh& mesh, Vec<Scalar> values) : mesh_(mesh), values_(std::move(values))
    {
        using std::isfinite;
        if (values_.size() != mesh_.m())
            throw InvalidMesh("grid function length does not match mesh");
        for (std::ptrdiff_t i = 0; i < values_.size(); ++i)
            if (!isfinite(values_[i]))
                throw DomainError("non-finite grid sample at index " + std::to_string(i));
    }

    const UniformMesh& mesh() const { return mesh_; }
    const Vec<Scalar>& values() const { return values_; }
    Scalar operator()(std::ptrdiff_t i) const { return values_[i]; }
    std::ptrdiff_t size() const { return values_.size(); }

private:
    UniformMesh mesh_;
    Vec<Scalar> values_;
};

}  // namespace nsbf
