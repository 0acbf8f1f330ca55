#include "monoeq/baselines.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace monoeq {

double classic_delta(const Vector& s, const Vector& y) {
    const double ss = dot(s, s);
    if (ss == 0.0) return 1.0;
    return dot(s, y) / ss;
}

DiagonalScaling classic_delta_scaling(const Vector& s, const Vector& y, const SolverConfig& cfg) {
    if (s.dim() != y.dim()) {
        throw std::invalid_argument("classic_delta_scaling: dimension mismatch");
    }
    const double delta = classic_delta(s, y);
    DiagonalScaling out{Vector(s.dim(), 1.0)};
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (s[i] == 0.0) continue;
        double ratio = y[i] / s[i];
        if (!(ratio > 0.0)) ratio = delta;
        // A nonpositive (or NaN) delta lands on the lower clip.
        out.lambda[i] = ratio > 0.0 ? std::max(std::min(ratio, cfg.u), cfg.ell) : cfg.ell;
    }
    return out;
}

UpdateRules make_rules(const VariantSpec& spec) {
    UpdateRules rules;
    rules.use_beta = spec.beta_rule == BetaRule::prp_modified;
    if (spec.scaling_rule == ScalingRule::identity) {
        rules.scaling = [](const Vector& s, const Vector&, const Vector&, const Vector&,
                           const SolverConfig&) { return DiagonalScaling::identity(s.dim()); };
    } else if (spec.safeguard_rule == SafeguardRule::classic_delta) {
        rules.scaling = [](const Vector& s, const Vector& y, const Vector&, const Vector&,
                           const SolverConfig& cfg) { return classic_delta_scaling(s, y, cfg); };
    } else {
        rules.scaling = safeguarded_scaling;
    }
    return rules;
}

VariantSolver make_variant(const VariantSpec& spec, const SolverConfig& cfg) {
    cfg.validate();
    return [rules = make_rules(spec), cfg](ResidualMap& residual, const ConstraintSet& set,
                                           const Vector& x0) {
        DppmSolver solver(residual, set, x0, cfg, rules);
        return solver.run();
    };
}

const std::vector<VariantSpec>& known_variants() {
    static const std::vector<VariantSpec> variants{
        {"dppm", BetaRule::prp_modified, SafeguardRule::case_i_ii, ScalingRule::diagonal},
        {"dppm-beta0", BetaRule::zero, SafeguardRule::case_i_ii, ScalingRule::diagonal},
        {"dppm-classic-delta", BetaRule::prp_modified, SafeguardRule::classic_delta,
         ScalingRule::diagonal},
        {"prp-identity", BetaRule::prp_modified, SafeguardRule::case_i_ii,
         ScalingRule::identity},
    };
    return variants;
}

VariantSpec variant_by_name(std::string_view name) {
    for (const auto& v : known_variants()) {
        if (v.name == name) return v;
    }
    throw std::invalid_argument("unknown solver variant '" + std::string(name) +
                                "' (expected dppm, dppm-beta0, dppm-classic-delta or "
                                "prp-identity)");
}

} // namespace monoeq
