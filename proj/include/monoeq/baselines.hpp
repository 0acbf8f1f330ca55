#pragma once

// Ablations of the diagonal PRP projection method, built from the same
// ingredients with one rule swapped out at a time.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "monoeq/dppm.hpp"

namespace monoeq {

enum class BetaRule { prp_modified, zero };
enum class SafeguardRule { case_i_ii, classic_delta };
enum class ScalingRule { diagonal, identity };

struct VariantSpec {
    std::string name;
    BetaRule beta_rule = BetaRule::prp_modified;
    SafeguardRule safeguard_rule = SafeguardRule::case_i_ii;
    ScalingRule scaling_rule = ScalingRule::diagonal;
};

/// <s, y> / <s, s>; 1 when s is the zero vector.
[[nodiscard]] double classic_delta(const Vector& s, const Vector& y);

/// Spectral scaling where every nonpositive ratio y_i / s_i is replaced by
/// classic_delta before clipping into [ell, u]; s_i == 0 still gives 1.
[[nodiscard]] DiagonalScaling classic_delta_scaling(const Vector& s, const Vector& y,
                                                    const SolverConfig& cfg);

[[nodiscard]] UpdateRules make_rules(const VariantSpec& spec);

using VariantSolver =
    std::function<SolverReport(ResidualMap&, const ConstraintSet&, const Vector& x0)>;

[[nodiscard]] VariantSolver make_variant(const VariantSpec& spec, const SolverConfig& cfg);

/// The four named variants: dppm, dppm-beta0, dppm-classic-delta, prp-identity.
[[nodiscard]] const std::vector<VariantSpec>& known_variants();

/// Throws std::invalid_argument for unknown names.
[[nodiscard]] VariantSpec variant_by_name(std::string_view name);

} // namespace monoeq
