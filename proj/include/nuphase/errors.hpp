#pragma once

#include <stdexcept>
#include <string>

namespace nuphase {

enum class errc {
    // coxeter
    asymmetric_matrix,
    diagonal_not_one,
    off_diagonal_below_two,
    spherical_four_subset,
    // growth
    unsupported_rank,
    k_too_small,
    no_root_in_unit_interval,
    exceptional_nerve,
    // spectral
    radicand_negative,
    // cayley
    mode_unsupported,
    radius_too_large,
    level_tie,
    // cycles
    budget_exceeded,
    not_regular_within_horizon,
    outside_disc,
    // io / cli
    bad_format,
    cache_miss,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::asymmetric_matrix: return "AsymmetricMatrix";
        case errc::diagonal_not_one: return "DiagonalNotOne";
        case errc::off_diagonal_below_two: return "OffDiagonalBelowTwo";
        case errc::spherical_four_subset: return "SphericalFourSubset";
        case errc::unsupported_rank: return "UnsupportedRank";
        case errc::k_too_small: return "KTooSmall";
        case errc::no_root_in_unit_interval: return "NoRootInUnitInterval";
        case errc::exceptional_nerve: return "ExceptionalNerve";
        case errc::radicand_negative: return "RadicandNegative";
        case errc::mode_unsupported: return "ModeUnsupported";
        case errc::radius_too_large: return "RadiusTooLarge";
        case errc::level_tie: return "LevelTie";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::not_regular_within_horizon: return "NotRegularWithinHorizon";
        case errc::outside_disc: return "OutsideDisc";
        case errc::bad_format: return "BadFormat";
        case errc::cache_miss: return "CacheMiss";
    }
    return "UnknownError";
}

/// Library-wide exception carrying a machine-checkable error code.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what_arg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg), code_(code) {}

    errc code() const noexcept { return code_; }

    /// True for resource-budget failures (CLI exit code 3); everything else
    /// is treated as a validation failure (exit code 2).
    bool is_budget() const noexcept {
        return code_ == errc::budget_exceeded || code_ == errc::radius_too_large;
    }

private:
    errc code_;
};

} // namespace nuphase
