#pragma once

#include <stdexcept>

#include "pedparts/series.hpp"

namespace pedparts {

/// Generating function of ped partitions (no even part repeated), built as
/// the product (-q^2;q^2)_inf / (q;q^2)_inf.
inline Series gf_ped(int order) {
    return pochhammer({-1, 2, 2, std::nullopt}, order) *
           pochhammer({+1, 1, 2, std::nullopt}, order).inverse();
}

/// Generating function of 4-regular partitions (no part divisible by 4),
/// built independently of gf_ped as (q^4;q^4)_inf / (q;q)_inf.
inline Series gf_4regular(int order) {
    return pochhammer({+1, 4, 4, std::nullopt}, order) *
           pochhammer({+1, 1, 1, std::nullopt}, order).inverse();
}

/// Generating function of 4-regular partitions with every part >= 2:
/// (q^4;q^4)_inf / (q^2;q)_inf.
inline Series gf_4regular_gt1(int order) {
    return pochhammer({+1, 4, 4, std::nullopt}, order) *
           pochhammer({+1, 2, 1, std::nullopt}, order).inverse();
}

namespace detail {

// c * q^exponent, silently truncated to zero past the order.
inline Series monomial_or_zero(std::int64_t c, int exponent, int order) {
    return exponent <= order ? Series::monomial(c, exponent, order) : Series(order);
}

// Materializes  sum_n (-q^2;q^2)_n * q^{slope*n + intercept} / (q;q^2)_{n + denom_extra}.
// The summand's lowest-degree term is q^{slope*n + intercept} because both the
// numerator product and the inverted denominator have constant term 1, so the
// sum stops at the first n whose monomial degree exceeds the order.
inline Series de_class_sum(int order, int slope, int intercept, int denom_extra) {
    Series total(order);
    for (long long n = 0;; ++n) {
        const long long degree = slope * n + intercept;
        if (degree > order) break;
        const Series term = pochhammer({-1, 2, 2, n}, order) *
                            Series::monomial(1, static_cast<int>(degree), order) *
                            pochhammer({+1, 1, 2, n + denom_extra}, order).inverse();
        total = total + term;
    }
    return total;
}

}  // namespace detail

/// sum_n (-q^2;q^2)_n q^{2n+1} / (q;q^2)_{n+1}: partitions with no repeated
/// even part whose largest part is odd.
inline Series gf_de1(int order) { return detail::de_class_sum(order, 2, 1, 1); }

/// sum_n (-q^2;q^2)_n q^{4n+2} / (q;q^2)_{n+1}: as DE1, largest part
/// appearing at least twice.
inline Series gf_de2(int order) { return detail::de_class_sum(order, 4, 2, 1); }

/// sum_n (-q^2;q^2)_n q^{2n+1} / (q;q^2)_n: as DE1, largest part appearing
/// exactly once.
inline Series gf_de3(int order) { return detail::de_class_sum(order, 2, 1, 0); }

enum class TheoremId { T1, T2, T3 };

struct TheoremSides {
    Series lhs;
    Series rhs;
};

/// Assembles both sides of a theorem from caller-supplied components, so a
/// perturbed component can be pushed through the identical construction.
///   T1: lhs = (1+q)   * de_component, rhs = regular_component - 1
///   T2: lhs = (1+q^3) * de_component, rhs = regular_component - 1
///   T3: lhs = (1+q^3) * de_component, rhs = q^2 * regular_component - q^2 + q
/// The de component is gf_de1/gf_de2/gf_de3; the regular component is
/// gf_4regular for T1/T3 and gf_4regular_gt1 for T2.
inline TheoremSides theorem_sides_from(TheoremId id, const Series& de_component,
                                       const Series& regular_component) {
    const int order = de_component.order();
    const Series one = Series::constant(1, order);
    switch (id) {
        case TheoremId::T1:
            return {(one + detail::monomial_or_zero(1, 1, order)) * de_component,
                    regular_component - one};
        case TheoremId::T2:
            return {(one + detail::monomial_or_zero(1, 3, order)) * de_component,
                    regular_component - one};
        case TheoremId::T3:
            return {(one + detail::monomial_or_zero(1, 3, order)) * de_component,
                    detail::monomial_or_zero(1, 2, order) * regular_component -
                        detail::monomial_or_zero(1, 2, order) +
                        detail::monomial_or_zero(1, 1, order)};
    }
    throw std::invalid_argument("theorem_sides_from: unknown theorem");
}

/// Both sides of a theorem, each built literally from its own product/sum
/// form; no algebra is shared between the two sides.
inline TheoremSides theorem_sides(TheoremId id, int order) {
    switch (id) {
        case TheoremId::T1:
            return theorem_sides_from(id, gf_de1(order), gf_4regular(order));
        case TheoremId::T2:
            return theorem_sides_from(id, gf_de2(order), gf_4regular_gt1(order));
        case TheoremId::T3:
            return theorem_sides_from(id, gf_de3(order), gf_4regular(order));
    }
    throw std::invalid_argument("theorem_sides: unknown theorem");
}

}  // namespace pedparts
