#pragma once

// Dense vectors, residual maps with evaluation accounting, and the
// closed convex sets the solvers project onto.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace monoeq {

/// Fixed-dimension dense vector of doubles. The dimension is set at
/// construction and never changes; entries are mutable.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim, double value = 0.0) : data_(dim, value) {}
    Vector(std::initializer_list<double> values) : data_(values) {}
    explicit Vector(std::vector<double> values) : data_(std::move(values)) {}

    [[nodiscard]] std::size_t dim() const noexcept { return data_.size(); }

    double& operator[](std::size_t i) noexcept { return data_[i]; }
    double operator[](std::size_t i) const noexcept { return data_[i]; }

    [[nodiscard]] std::span<double> values() noexcept { return data_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return data_; }

    auto begin() noexcept { return data_.begin(); }
    auto end() noexcept { return data_.end(); }
    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<double> data_;
};

/// Inner product, summed left to right. Throws std::invalid_argument on
/// mismatched dimensions.
[[nodiscard]] double dot(const Vector& a, const Vector& b);

/// Euclidean norm, sqrt(dot(a, a)).
[[nodiscard]] double norm2(const Vector& a);

/// x + alpha * d
[[nodiscard]] Vector add_scaled(const Vector& x, double alpha, const Vector& d);

/// a - b
[[nodiscard]] Vector subtract(const Vector& a, const Vector& b);

[[nodiscard]] bool all_finite(const Vector& v) noexcept;

/// Writes F(x) into out; both spans have the map's dimension.
using ResidualKernel = std::function<void(std::span<const double> x, std::span<double> out)>;

/// A residual map F: R^n -> R^n that counts its own evaluations.
///
/// Instances are cheap to create from a kernel and are meant to be owned by
/// a single solver run; the counter is the FVAL reported for that run.
class ResidualMap {
public:
    ResidualMap(std::size_t dim, ResidualKernel kernel);

    [[nodiscard]] Vector evaluate(const Vector& x);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::int64_t eval_count() const noexcept { return eval_count_; }

private:
    std::size_t dim_;
    ResidualKernel kernel_;
    std::int64_t eval_count_ = 0;
};

enum class ConstraintKind { nonneg_orthant, box, whole_space };

/// Closed convex set with an exact Euclidean projection.
class ConstraintSet {
public:
    static ConstraintSet nonneg_orthant();
    static ConstraintSet whole_space();
    /// Throws std::invalid_argument if any lower_i > upper_i or the
    /// dimensions differ.
    static ConstraintSet box(Vector lower, Vector upper);

    [[nodiscard]] ConstraintKind kind() const noexcept { return kind_; }
    [[nodiscard]] Vector project(const Vector& x) const;
    /// NaN entries are never members.
    [[nodiscard]] bool contains(const Vector& x) const;

    [[nodiscard]] const Vector& lower() const noexcept { return lower_; }
    [[nodiscard]] const Vector& upper() const noexcept { return upper_; }

private:
    explicit ConstraintSet(ConstraintKind kind) : kind_(kind) {}

    ConstraintKind kind_;
    Vector lower_;
    Vector upper_;
};

[[nodiscard]] Vector project_nonneg(const Vector& x);
[[nodiscard]] Vector project_box(const Vector& x, const Vector& lower, const Vector& upper);

/// Seeded sampling check of <F(x) - F(y), x - y> >= 0 on pairs drawn in
/// the set. Points are standard-normal draws projected onto the set. A
/// relative slack of 1e-12 * |x - y| * |F(x) - F(y)| absorbs round-off.
/// Each pair costs two evaluations of F.
[[nodiscard]] bool check_monotone(ResidualMap& residual, const ConstraintSet& set,
                                  int samples, std::uint64_t seed);

} // namespace monoeq
