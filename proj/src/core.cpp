#include "monoeq/core.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace monoeq {

namespace {

void require_same_dim(const Vector& a, const Vector& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    }
}

} // namespace

double dot(const Vector& a, const Vector& b) {
    require_same_dim(a, b, "dot");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

Vector add_scaled(const Vector& x, double alpha, const Vector& d) {
    require_same_dim(x, d, "add_scaled");
    Vector out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        out[i] = x[i] + alpha * d[i];
    }
    return out;
}

Vector subtract(const Vector& a, const Vector& b) {
    require_same_dim(a, b, "subtract");
    Vector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

bool all_finite(const Vector& v) noexcept {
    return std::all_of(v.begin(), v.end(), [](double e) { return std::isfinite(e); });
}

ResidualMap::ResidualMap(std::size_t dim, ResidualKernel kernel)
    : dim_(dim), kernel_(std::move(kernel)) {
    if (dim_ == 0) {
        throw std::invalid_argument("ResidualMap: dimension must be positive");
    }
    if (!kernel_) {
        throw std::invalid_argument("ResidualMap: empty kernel");
    }
}

Vector ResidualMap::evaluate(const Vector& x) {
    if (x.dim() != dim_) {
        throw std::invalid_argument("ResidualMap::evaluate: expected dimension " +
                                    std::to_string(dim_) + ", got " +
                                    std::to_string(x.dim()));
    }
    Vector out(dim_);
    kernel_(x.values(), out.values());
    ++eval_count_;
    return out;
}

ConstraintSet ConstraintSet::nonneg_orthant() { return ConstraintSet(ConstraintKind::nonneg_orthant); }

ConstraintSet ConstraintSet::whole_space() { return ConstraintSet(ConstraintKind::whole_space); }

ConstraintSet ConstraintSet::box(Vector lower, Vector upper) {
    require_same_dim(lower, upper, "ConstraintSet::box");
    for (std::size_t i = 0; i < lower.dim(); ++i) {
        if (!(lower[i] <= upper[i])) {
            throw std::invalid_argument("ConstraintSet::box: lower[" + std::to_string(i) +
                                        "] > upper[" + std::to_string(i) + "]");
        }
    }
    ConstraintSet set(ConstraintKind::box);
    set.lower_ = std::move(lower);
    set.upper_ = std::move(upper);
    return set;
}

Vector ConstraintSet::project(const Vector& x) const {
    switch (kind_) {
    case ConstraintKind::nonneg_orthant: return project_nonneg(x);
    case ConstraintKind::box: return project_box(x, lower_, upper_);
    case ConstraintKind::whole_space: return x;
    }
    return x;
}

bool ConstraintSet::contains(const Vector& x) const {
    switch (kind_) {
    case ConstraintKind::nonneg_orthant:
        return std::all_of(x.begin(), x.end(), [](double e) { return e >= 0.0; });
    case ConstraintKind::box:
        require_same_dim(x, lower_, "ConstraintSet::contains");
        for (std::size_t i = 0; i < x.dim(); ++i) {
            if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
        }
        return true;
    case ConstraintKind::whole_space:
        return std::none_of(x.begin(), x.end(), [](double e) { return std::isnan(e); });
    }
    return false;
}

Vector project_nonneg(const Vector& x) {
    Vector out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        // NaN passes through unchanged.
        out[i] = x[i] < 0.0 ? 0.0 : x[i];
    }
    return out;
}

Vector project_box(const Vector& x, const Vector& lower, const Vector& upper) {
    require_same_dim(lower, upper, "project_box");
    require_same_dim(x, lower, "project_box");
    Vector out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (!(lower[i] <= upper[i])) {
            throw std::invalid_argument("project_box: inverted bounds at index " +
                                        std::to_string(i));
        }
        double v = x[i];
        if (v < lower[i]) v = lower[i];
        if (v > upper[i]) v = upper[i];
        out[i] = v;
    }
    return out;
}

bool check_monotone(ResidualMap& residual, const ConstraintSet& set, int samples,
                    std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("check_monotone: samples must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const std::size_t n = residual.dim();
    auto draw = [&] {
        Vector p(n);
        for (auto& e : p) e = normal(rng);
        return set.project(p);
    };

    for (int s = 0; s < samples; ++s) {
        const Vector x = draw();
        const Vector y = draw();
        const Vector dF = subtract(residual.evaluate(x), residual.evaluate(y));
        const Vector dx = subtract(x, y);
        const double slack = 1e-12 * norm2(dx) * norm2(dF);
        if (!(dot(dF, dx) >= -slack)) return false;
    }
    return true;
}

} // namespace monoeq
