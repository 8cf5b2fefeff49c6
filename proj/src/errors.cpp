#include "kodcalc/errors.hpp"

namespace kodcalc {

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::not_divisible: return "NotDivisible";
    case errc::negative_betti: return "NegativeBetti";
    case errc::not_coprime: return "NotCoprime";
    case errc::bad_parameter: return "BadParameter";
    case errc::rule_unavailable: return "RuleUnavailable";
    case errc::inconsistent_kod: return "InconsistentKod";
    case errc::not_elliptic: return "NotElliptic";
    case errc::already_blown_up: return "AlreadyBlownUp";
    case errc::definite_form_unsupported: return "DefiniteFormUnsupported";
    case errc::genus_mismatch: return "GeometricGenusMismatch";
    case errc::negative_defect: return "NegativeDefect";
    case errc::bad_k: return "BadK";
    case errc::zero_vector: return "ZeroVector";
    case errc::overflow: return "Overflow";
    case errc::coverage_gap: return "CoverageGap";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_family: return "UnknownFamily";
    case errc::arity_error: return "ArityError";
    case errc::type_error: return "TypeError";
    case errc::internal: return "Internal";
    }
    return "Internal";
}

} // namespace kodcalc
