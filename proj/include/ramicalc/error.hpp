#pragma once

#include <stdexcept>
#include <string>

namespace ramicalc {

enum class errc {
    // scalar arithmetic
    division_by_zero,
    zero_to_nonpositive_power,
    zero_input,
    k_out_of_range,
    // piecewise / lambda
    non_monotone_breaks,
    non_increasing_alphas,
    alpha_zero_nonzero,
    domain_mismatch,
    out_of_domain,
    not_in_lambda_p,
    bad_piecewise,
    // groups / ramification
    bad_group_table,
    p_group_violation,
    not_a_subgroup,
    non_normal_subgroup,
    non_monotone_values,
    bad_inertia,
    // series / discs
    empty_support,
    center_outside_disc,
    skeleton_mode_unsupported,
    radius_out_of_range,
    non_integral_separable_degree,
    composition_mismatch,
    // annuli / harmonicity
    multiple_slopes_on_annulus,
    not_aligned,
    no_stable_window,
    not_on_unit_circle,
    non_finite_at_gauss_point,
    non_rational_critical_direction,
    // io
    schema_error,
    empty_data,
    invalid_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::zero_to_nonpositive_power: return "ZeroToNonpositivePower";
        case errc::zero_input: return "ZeroInput";
        case errc::k_out_of_range: return "KOutOfRange";
        case errc::non_monotone_breaks: return "NonMonotoneBreaks";
        case errc::non_increasing_alphas: return "NonIncreasingAlphas";
        case errc::alpha_zero_nonzero: return "AlphaZeroNonzero";
        case errc::domain_mismatch: return "DomainMismatch";
        case errc::out_of_domain: return "OutOfDomain";
        case errc::not_in_lambda_p: return "NotInLambdaP";
        case errc::bad_piecewise: return "BadPiecewise";
        case errc::bad_group_table: return "BadGroupTable";
        case errc::p_group_violation: return "PGroupViolation";
        case errc::not_a_subgroup: return "NotASubgroup";
        case errc::non_normal_subgroup: return "NonNormalSubgroup";
        case errc::non_monotone_values: return "NonMonotoneValues";
        case errc::bad_inertia: return "BadInertia";
        case errc::empty_support: return "EmptySupport";
        case errc::center_outside_disc: return "CenterOutsideDisc";
        case errc::skeleton_mode_unsupported: return "SkeletonModeUnsupported";
        case errc::radius_out_of_range: return "RadiusOutOfRange";
        case errc::non_integral_separable_degree: return "NonIntegralSeparableDegree";
        case errc::composition_mismatch: return "CompositionMismatch";
        case errc::multiple_slopes_on_annulus: return "MultipleSlopesOnAnnulus";
        case errc::not_aligned: return "NotAligned";
        case errc::no_stable_window: return "NoStableWindow";
        case errc::not_on_unit_circle: return "NotOnUnitCircle";
        case errc::non_finite_at_gauss_point: return "NonFiniteAtGaussPoint";
        case errc::non_rational_critical_direction: return "NonRationalCriticalDirection";
        case errc::schema_error: return "SchemaError";
        case errc::empty_data: return "EmptyData";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

}  // namespace ramicalc
