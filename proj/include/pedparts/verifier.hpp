#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pedparts/bijections.hpp"
#include "pedparts/generating_functions.hpp"
#include "pedparts/identity_report.hpp"
#include "pedparts/partition.hpp"
#include "pedparts/series.hpp"

namespace pedparts {

inline constexpr std::int64_t kDefaultEnumBound = 40;
inline constexpr std::int64_t kDefaultSeriesBound = 200;

/// The named series a fault can corrupt.
enum class SeriesKind { PED, FOUR_REGULAR, FOUR_REGULAR_GT1, DE1, DE2, DE3 };

/// Test hook: adds delta to one coefficient of the named series wherever the
/// verifier consumes it.
struct SeriesFault {
    SeriesKind target;
    int index = 0;
    std::int64_t delta = 1;
};

struct FaultSpec {
    std::optional<SeriesFault> series;
    std::optional<BijectionFault> bijection;
};

inline bool is_compatible(IdentityId id, Method m) noexcept {
    switch (m) {
        case Method::ENUMERATION:
            return id == IdentityId::EQ_1_1 || id == IdentityId::LEMMA_2_1 ||
                   id == IdentityId::LEMMA_2_2 || id == IdentityId::LEMMA_2_3;
        case Method::SERIES:
            return id == IdentityId::EQ_1_1 || id == IdentityId::T1 || id == IdentityId::T2 ||
                   id == IdentityId::T3;
        case Method::BIJECTION:
            return id == IdentityId::LEMMA_2_1 || id == IdentityId::LEMMA_2_2;
        case Method::CROSS:
            return id == IdentityId::EQ_1_1 || id == IdentityId::GF_DE1 ||
                   id == IdentityId::GF_DE2 || id == IdentityId::GF_DE3;
    }
    return false;
}

namespace detail {

inline Series built_series(SeriesKind kind, int order, const FaultSpec& fault) {
    Series s = [&] {
        switch (kind) {
            case SeriesKind::PED: return gf_ped(order);
            case SeriesKind::FOUR_REGULAR: return gf_4regular(order);
            case SeriesKind::FOUR_REGULAR_GT1: return gf_4regular_gt1(order);
            case SeriesKind::DE1: return gf_de1(order);
            case SeriesKind::DE2: return gf_de2(order);
            case SeriesKind::DE3: return gf_de3(order);
        }
        throw std::invalid_argument("built_series: unknown kind");
    }();
    if (fault.series && fault.series->target == kind && fault.series->index >= 0 &&
        fault.series->index <= order)
        s = s.with_coeff(fault.series->index, s.coeff(fault.series->index) + fault.series->delta);
    return s;
}

// counts[n][class_index(c)] for 0 <= n <= max_n; one enumeration sweep per n.
using CountTable = std::vector<std::array<std::uint64_t, 6>>;

inline CountTable make_count_table(std::int64_t max_n) {
    CountTable table;
    table.reserve(static_cast<std::size_t>(max_n) + 1);
    for (std::int64_t n = 0; n <= max_n; ++n) table.push_back(count_all_classes(n));
    return table;
}

inline std::int64_t count_at(const CountTable& t, std::int64_t n, PartitionClass c) {
    if (n < 0) return 0;
    return static_cast<std::int64_t>(t[static_cast<std::size_t>(n)][class_index(c)]);
}

inline Witness numeric_witness(std::int64_t n, std::int64_t lhs, std::int64_t rhs,
                               std::string detail) {
    Witness w;
    w.n = n;
    w.lhs = lhs;
    w.rhs = rhs;
    w.detail = std::move(detail);
    return w;
}

inline IdentityReport verify_by_enumeration(IdentityId id, std::int64_t bound) {
    IdentityReport report{id, Method::ENUMERATION, 1, bound, std::nullopt};
    switch (id) {
        case IdentityId::EQ_1_1: {
            report.range_lo = 0;
            const CountTable t = make_count_table(bound);
            for (std::int64_t n = 0; n <= bound; ++n) {
                const auto lhs = count_at(t, n, PartitionClass::PED);
                const auto rhs = count_at(t, n, PartitionClass::FOUR_REGULAR);
                if (lhs != rhs) {
                    report.witness = numeric_witness(n, lhs, rhs, "ped(n) != 4regular(n)");
                    return report;
                }
            }
            return report;
        }
        case IdentityId::LEMMA_2_1: {
            const CountTable t = make_count_table(bound);
            for (std::int64_t n = 1; n <= bound; ++n) {
                const auto lhs = count_at(t, n, PartitionClass::DE1) +
                                 count_at(t, n - 1, PartitionClass::DE1);
                const auto rhs = count_at(t, n, PartitionClass::PED);
                if (lhs != rhs) {
                    report.witness = numeric_witness(n, lhs, rhs, "DE1(n)+DE1(n-1) != ped(n)");
                    return report;
                }
            }
            return report;
        }
        case IdentityId::LEMMA_2_2: {
            const CountTable t = make_count_table(bound + 2);
            for (std::int64_t n = 1; n <= bound; ++n) {
                const auto lhs = count_at(t, n + 2, PartitionClass::DE3) +
                                 count_at(t, n - 1, PartitionClass::DE3);
                const auto rhs = count_at(t, n, PartitionClass::PED);
                if (lhs != rhs) {
                    report.witness = numeric_witness(n, lhs, rhs, "DE3(n+2)+DE3(n-1) != ped(n)");
                    return report;
                }
            }
            return report;
        }
        case IdentityId::LEMMA_2_3: {
            // Each link of the displayed chain is checked on its own so a
            // failure names the link that broke.
            report.range_lo = 3;
            const CountTable t = make_count_table(bound);
            for (std::int64_t n = 3; n <= bound; ++n) {
                const auto de2_sum = count_at(t, n, PartitionClass::DE2) +
                                     count_at(t, n - 3, PartitionClass::DE2);
                const auto de13_mix =
                    count_at(t, n, PartitionClass::DE1) - count_at(t, n, PartitionClass::DE3) +
                    count_at(t, n - 3, PartitionClass::DE1) -
                    count_at(t, n - 3, PartitionClass::DE3);
                const auto de1_diff = count_at(t, n, PartitionClass::DE1) -
                                      count_at(t, n - 2, PartitionClass::DE1);
                const auto ped_diff = count_at(t, n, PartitionClass::PED) -
                                      count_at(t, n - 1, PartitionClass::PED);
                const auto ped_gt1 = count_at(t, n, PartitionClass::PED_GT1);
                if (de2_sum != de13_mix) {
                    report.witness = numeric_witness(
                        n, de2_sum, de13_mix, "DE2(n)+DE2(n-3) != DE1-DE3 expansion");
                    return report;
                }
                if (de13_mix != de1_diff) {
                    report.witness = numeric_witness(
                        n, de13_mix, de1_diff, "DE1-DE3 expansion != DE1(n)-DE1(n-2)");
                    return report;
                }
                if (de1_diff != ped_diff) {
                    report.witness = numeric_witness(
                        n, de1_diff, ped_diff, "DE1(n)-DE1(n-2) != ped(n)-ped(n-1)");
                    return report;
                }
                if (ped_diff != ped_gt1) {
                    report.witness = numeric_witness(
                        n, ped_diff, ped_gt1, "ped(n)-ped(n-1) != ped_gt1(n)");
                    return report;
                }
            }
            return report;
        }
        default:
            throw std::invalid_argument("verify_by_enumeration: incompatible identity");
    }
}

inline std::optional<Witness> first_coeff_mismatch(const Series& lhs, const Series& rhs,
                                                   std::string detail) {
    for (int k = 0; k <= lhs.order(); ++k) {
        if (lhs.coeff(k) != rhs.coeff(k))
            return numeric_witness(k, lhs.coeff(k), rhs.coeff(k), std::move(detail));
    }
    return std::nullopt;
}

inline IdentityReport verify_by_series(IdentityId id, std::int64_t bound,
                                       const FaultSpec& fault) {
    IdentityReport report{id, Method::SERIES, 0, bound, std::nullopt};
    const int order = static_cast<int>(bound);
    switch (id) {
        case IdentityId::EQ_1_1: {
            const Series lhs = built_series(SeriesKind::PED, order, fault);
            const Series rhs = built_series(SeriesKind::FOUR_REGULAR, order, fault);
            report.witness = first_coeff_mismatch(lhs, rhs, "product forms disagree");
            return report;
        }
        case IdentityId::T1:
        case IdentityId::T2:
        case IdentityId::T3: {
            const TheoremId tid = id == IdentityId::T1   ? TheoremId::T1
                                  : id == IdentityId::T2 ? TheoremId::T2
                                                         : TheoremId::T3;
            const SeriesKind de_kind = id == IdentityId::T1   ? SeriesKind::DE1
                                       : id == IdentityId::T2 ? SeriesKind::DE2
                                                              : SeriesKind::DE3;
            const SeriesKind reg_kind =
                id == IdentityId::T2 ? SeriesKind::FOUR_REGULAR_GT1 : SeriesKind::FOUR_REGULAR;
            const TheoremSides sides = theorem_sides_from(
                tid, built_series(de_kind, order, fault), built_series(reg_kind, order, fault));
            report.witness =
                first_coeff_mismatch(sides.lhs, sides.rhs, "theorem sides disagree");
            return report;
        }
        default:
            throw std::invalid_argument("verify_by_series: incompatible identity");
    }
}

inline IdentityReport verify_by_bijection(IdentityId id, std::int64_t bound,
                                          const FaultSpec& fault) {
    const BijectionId which =
        id == IdentityId::LEMMA_2_1 ? BijectionId::PHI1 : BijectionId::PHI3;
    IdentityReport report{id, Method::BIJECTION, 1, bound, std::nullopt};
    for (std::int64_t n = 1; n <= bound; ++n) {
        const IdentityReport layer = verify_bijection_layer(
            n, which, fault.bijection ? &*fault.bijection : nullptr);
        if (!layer.passed()) {
            report.witness = layer.witness;
            return report;
        }
    }
    return report;
}

inline IdentityReport verify_by_cross(IdentityId id, std::int64_t bound,
                                      const FaultSpec& fault) {
    IdentityReport report{id, Method::CROSS, 0, bound, std::nullopt};
    const int order = static_cast<int>(bound);
    const auto [kind, cls] = [&]() -> std::pair<SeriesKind, PartitionClass> {
        switch (id) {
            case IdentityId::EQ_1_1: return {SeriesKind::PED, PartitionClass::PED};
            case IdentityId::GF_DE1: return {SeriesKind::DE1, PartitionClass::DE1};
            case IdentityId::GF_DE2: return {SeriesKind::DE2, PartitionClass::DE2};
            case IdentityId::GF_DE3: return {SeriesKind::DE3, PartitionClass::DE3};
            default:
                throw std::invalid_argument("verify_by_cross: incompatible identity");
        }
    }();
    const Series series = built_series(kind, order, fault);
    const CountTable table = make_count_table(bound);
    for (std::int64_t n = 0; n <= bound; ++n) {
        const std::int64_t coeff = series.coeff(static_cast<int>(n));
        const std::int64_t count = count_at(table, n, cls);
        if (coeff != count) {
            report.witness =
                numeric_witness(n, coeff, count, "series coefficient != enumeration count");
            return report;
        }
    }
    return report;
}

}  // namespace detail

/// Runs one (identity, method) check for all n (or coefficients) up to bound.
/// Throws std::invalid_argument for incompatible pairs or bound < 1.
inline IdentityReport verify_identity(IdentityId id, std::int64_t bound, Method method,
                                      const FaultSpec& fault = {}) {
    if (bound < 1) throw std::invalid_argument("verify_identity: bound must be >= 1");
    if (!is_compatible(id, method))
        throw std::invalid_argument(std::string("verify_identity: method ") +
                                    std::string(to_string(method)) + " does not apply to " +
                                    std::string(to_string(id)));
    switch (method) {
        case Method::ENUMERATION: return detail::verify_by_enumeration(id, bound);
        case Method::SERIES: return detail::verify_by_series(id, bound, fault);
        case Method::BIJECTION: return detail::verify_by_bijection(id, bound, fault);
        case Method::CROSS: return detail::verify_by_cross(id, bound, fault);
    }
    throw std::invalid_argument("verify_identity: unknown method");
}

inline constexpr std::array<IdentityId, 10> kAllIdentities = {
    IdentityId::EQ_1_1,    IdentityId::T1,        IdentityId::T2,        IdentityId::T3,
    IdentityId::LEMMA_2_1, IdentityId::LEMMA_2_2, IdentityId::LEMMA_2_3, IdentityId::GF_DE1,
    IdentityId::GF_DE2,    IdentityId::GF_DE3,
};

inline constexpr std::array<Method, 4> kAllMethods = {Method::ENUMERATION, Method::SERIES,
                                                      Method::BIJECTION, Method::CROSS};

/// Every compatible (identity, method) pair in a fixed order: identities as
/// declared, methods in ENUMERATION, SERIES, BIJECTION, CROSS order. SERIES
/// checks run to bound_series; everything touching enumeration runs to
/// bound_enum. 14 reports in total.
inline std::vector<IdentityReport> verify_all(std::int64_t bound_enum, std::int64_t bound_series,
                                              const FaultSpec& fault = {}) {
    if (bound_enum < 1 || bound_series < 1)
        throw std::invalid_argument("verify_all: bounds must be >= 1");
    std::vector<IdentityReport> reports;
    for (IdentityId id : kAllIdentities) {
        for (Method m : kAllMethods) {
            if (!is_compatible(id, m)) continue;
            const std::int64_t bound = m == Method::SERIES ? bound_series : bound_enum;
            reports.push_back(verify_identity(id, bound, m, fault));
        }
    }
    return reports;
}

inline std::string_view to_string(SeriesKind k) noexcept {
    switch (k) {
        case SeriesKind::PED: return "ped";
        case SeriesKind::FOUR_REGULAR: return "4regular";
        case SeriesKind::FOUR_REGULAR_GT1: return "4regular-gt1";
        case SeriesKind::DE1: return "de1";
        case SeriesKind::DE2: return "de2";
        case SeriesKind::DE3: return "de3";
    }
    return "?";
}

inline std::optional<SeriesKind> parse_series_kind(std::string_view name) {
    for (SeriesKind k : {SeriesKind::PED, SeriesKind::FOUR_REGULAR, SeriesKind::FOUR_REGULAR_GT1,
                         SeriesKind::DE1, SeriesKind::DE2, SeriesKind::DE3}) {
        if (name == to_string(k)) return k;
    }
    return std::nullopt;
}

}  // namespace pedparts
