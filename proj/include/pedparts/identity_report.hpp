#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pedparts/partition.hpp"

namespace pedparts {

/// The identities this artifact can check.
enum class IdentityId {
    EQ_1_1,     // ped(n) = number of 4-regular partitions of n
    T1,         // (1+q)   * gf_de1 = gf_4regular - 1
    T2,         // (1+q^3) * gf_de2 = gf_4regular_gt1 - 1
    T3,         // (1+q^3) * gf_de3 = q^2 * gf_4regular - q^2 + q
    LEMMA_2_1,  // DE1(n) + DE1(n-1) = ped(n)           (bijection phi1/psi1)
    LEMMA_2_2,  // DE3(n+2) + DE3(n-1) = ped(n)         (bijection phi3/psi3)
    LEMMA_2_3,  // DE2(n) + DE2(n-3) = ped_{>1}(n)      (counting chain)
    GF_DE1,     // coefficient n of gf_de1 = |DE1(n)|
    GF_DE2,
    GF_DE3,
};

enum class Method { ENUMERATION, SERIES, BIJECTION, CROSS };

/// First counterexample of a failed check. A report passes iff it has none.
struct Witness {
    std::int64_t n = 0;                    // failing coefficient index, weight, or layer
    std::optional<std::int64_t> lhs;       // the two unequal values, when numeric
    std::optional<std::int64_t> rhs;
    std::optional<Partition> partition;    // counterexample partition, for bijection checks
    std::string detail;                    // which check broke

    std::string to_string() const {
        std::string out = "n=" + std::to_string(n);
        if (lhs) out += " lhs=" + std::to_string(*lhs);
        if (rhs) out += " rhs=" + std::to_string(*rhs);
        if (partition) out += " partition=" + partition->to_string();
        if (!detail.empty()) out += " (" + detail + ")";
        return out;
    }
};

struct IdentityReport {
    IdentityId identity;
    Method method;
    std::int64_t range_lo = 0;  // inclusive; hi < lo means the range was empty
    std::int64_t range_hi = 0;
    std::optional<Witness> witness;  // absent == pass

    bool passed() const noexcept { return !witness.has_value(); }
};

inline std::string_view to_string(IdentityId id) noexcept {
    switch (id) {
        case IdentityId::EQ_1_1: return "EQ_1_1";
        case IdentityId::T1: return "T1";
        case IdentityId::T2: return "T2";
        case IdentityId::T3: return "T3";
        case IdentityId::LEMMA_2_1: return "LEMMA_2_1";
        case IdentityId::LEMMA_2_2: return "LEMMA_2_2";
        case IdentityId::LEMMA_2_3: return "LEMMA_2_3";
        case IdentityId::GF_DE1: return "GF_DE1";
        case IdentityId::GF_DE2: return "GF_DE2";
        case IdentityId::GF_DE3: return "GF_DE3";
    }
    return "?";
}

inline std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::ENUMERATION: return "ENUMERATION";
        case Method::SERIES: return "SERIES";
        case Method::BIJECTION: return "BIJECTION";
        case Method::CROSS: return "CROSS";
    }
    return "?";
}

inline std::optional<IdentityId> parse_identity(std::string_view name) {
    for (IdentityId id : {IdentityId::EQ_1_1, IdentityId::T1, IdentityId::T2, IdentityId::T3,
                          IdentityId::LEMMA_2_1, IdentityId::LEMMA_2_2, IdentityId::LEMMA_2_3,
                          IdentityId::GF_DE1, IdentityId::GF_DE2, IdentityId::GF_DE3}) {
        if (name == to_string(id)) return id;
    }
    return std::nullopt;
}

}  // namespace pedparts
