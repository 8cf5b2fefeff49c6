#ifndef KODCALC_ERRORS_HPP
#define KODCALC_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace kodcalc {

// Byte range [begin, end) into a source text.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class errc {
    not_divisible,
    negative_betti,
    not_coprime,
    bad_parameter,
    rule_unavailable,
    inconsistent_kod,
    not_elliptic,
    already_blown_up,
    definite_form_unsupported,
    genus_mismatch,
    negative_defect,
    bad_k,
    zero_vector,
    overflow,
    coverage_gap,
    syntax_error,
    unknown_family,
    arity_error,
    type_error,
    internal,
};

// Stable name for an error code ("NotCoprime", "SyntaxError", ...).
const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    error(errc code, const std::string& message, SourceSpan span)
        : std::runtime_error(message), code_(code), span_(span) {}

    errc code() const noexcept { return code_; }
    const std::optional<SourceSpan>& span() const noexcept { return span_; }

    error with_span(SourceSpan span) const { return error(code_, what(), span); }

private:
    errc code_;
    std::optional<SourceSpan> span_;
};

} // namespace kodcalc

#endif
