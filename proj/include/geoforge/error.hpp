#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geoforge {

enum class Errc {
    invalid_argument,
    not_hyperbolic,
    degenerate_axes,
    invalid_point,
    not_a_strand,
    invalid_levels,
    hypothesis_violated,
    too_few_strands,
    unsorted,
    no_solution_below_cap,
    epsilon_out_of_range,
    not_applicable,
    not_hyperbolic_type,
    trivial_word,
    not_primitive,
    in_cyclic_subgroup,
    tolerance_breach,
    no_cusp,
    level_too_large,
    precision_exhausted,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_hyperbolic: return "NotHyperbolic";
    case Errc::degenerate_axes: return "DegenerateAxes";
    case Errc::invalid_point: return "InvalidPoint";
    case Errc::not_a_strand: return "NotAStrand";
    case Errc::invalid_levels: return "InvalidLevels";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::too_few_strands: return "TooFewStrands";
    case Errc::unsorted: return "Unsorted";
    case Errc::no_solution_below_cap: return "NoSolutionBelowCap";
    case Errc::epsilon_out_of_range: return "EpsilonOutOfRange";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::not_hyperbolic_type: return "NotHyperbolicType";
    case Errc::trivial_word: return "TrivialWord";
    case Errc::not_primitive: return "NotPrimitive";
    case Errc::in_cyclic_subgroup: return "InCyclicSubgroup";
    case Errc::tolerance_breach: return "ToleranceBreach";
    case Errc::no_cusp: return "NoCusp";
    case Errc::level_too_large: return "LevelTooLarge";
    case Errc::precision_exhausted: return "PrecisionExhausted";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace geoforge
