#ifndef KODCALC_TEST_ORACLES_HPP
#define KODCALC_TEST_ORACLES_HPP

// Test-only oracles. These deliberately avoid the library's code paths: the
// binomials come from the Pascal recurrence, the curve counts from a direct
// Riemann-Roch evaluation, the product triple from a fresh transcription.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracles {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = i; j >= 1; --j)
            row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(k)];
}

// h0 of the m-th canonical power on a genus-g curve: degree d = m(2g - 2);
// for g >= 2, m >= 2 the degree exceeds 2g - 2, so h1 = 0 and h0 = d - g + 1.
inline std::int64_t curve_canonical_sections(std::int64_t g, std::int64_t m) {
    if (g < 0 || m < 1) throw std::invalid_argument("bad oracle arguments");
    if (g == 0) return 0;          // negative degree
    if (g == 1) return 1;          // trivial bundle
    if (m == 1) return g;          // h0(K) = g
    return m * (2 * g - 2) - g + 1;
}

inline std::int64_t sextic_binomial_difference(std::int64_t m) {
    return binomial(2 * m + 3, 3) - binomial(2 * m - 3, 3);
}

inline std::int64_t horikawa_two_term(std::int64_t m) {
    return (m + 1) * (4 * m + 1) + (m - 2) * (4 * m - 5);
}

struct Triple {
    std::int64_t c1_cubed;
    std::int64_t c1c2;
    std::int64_t c3;

    friend bool operator==(const Triple&, const Triple&) = default;
};

inline Triple product_triple(std::int64_t a, std::int64_t b, std::int64_t g) {
    return Triple{(6 - 6 * g) * a, (2 - 2 * g) * (a + b), (2 - 2 * g) * b};
}

} // namespace oracles

#endif
