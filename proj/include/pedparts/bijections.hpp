#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pedparts/identity_report.hpp"
#include "pedparts/partition.hpp"

namespace pedparts {

/// Which case of which map produced an image.
enum class CaseTag {
    P1_CASE1,    // phi1, largest part odd: identity, weight n
    P1_CASE2,    // phi1, largest part even: head - 1, weight n-1
    P3_CASE1,    // phi3, largest part odd: head + 2, weight n+2 (first gap >= 2)
    P3_CASE2I,   // phi3, head even, second = head-1: swap and shift, weight n+2 (first gap = 1)
    P3_CASE2II,  // phi3, head even, second < head-1: head - 1, weight n-1
    PSI1_CASE1,  // psi1, weight n: identity
    PSI1_CASE2,  // psi1, weight n-1: head + 1
    PSI3_CASE1,  // psi3, weight n+2, first gap >= 2: head - 2
    PSI3_CASE2,  // psi3, weight n+2, first gap = 1: un-swap, second head - 2
    PSI3_CASE3,  // psi3, weight n-1: head + 1
};

/// Image of a bijection together with the case that produced it.
struct MappedPartition {
    Partition image;
    CaseTag case_tag;
    std::int64_t target_weight;
};

namespace detail {

inline void require_ped_nonempty(const Partition& lambda, const char* who) {
    if (lambda.empty())
        throw std::domain_error(std::string(who) + ": the empty partition is not mapped");
    if (!is_member(lambda, PartitionClass::PED))
        throw std::domain_error(std::string(who) + ": input is not a ped partition: " +
                                lambda.to_string());
}

inline std::vector<int> parts_copy(const Partition& p) {
    return std::vector<int>(p.parts().begin(), p.parts().end());
}

// Second part, with 0 standing in when there is only one part.
inline int second_or_zero(const Partition& p) noexcept {
    return p.size() > 1 ? p.parts()[1] : 0;
}

}  // namespace detail

/// Sends a nonempty ped partition of n to a DE1 partition of n (largest part
/// already odd: identity) or of n-1 (largest part even: decrement it; the
/// result stays canonical because an even largest part cannot repeat).
inline MappedPartition phi1(const Partition& lambda) {
    detail::require_ped_nonempty(lambda, "phi1");
    if (lambda.largest() % 2 == 1)
        return {lambda, CaseTag::P1_CASE1, lambda.weight()};
    auto parts = detail::parts_copy(lambda);
    parts[0] -= 1;
    return {Partition(std::move(parts)), CaseTag::P1_CASE2, lambda.weight() - 1};
}

/// Inverse of phi1 toward target weight n: identity on weight n, head + 1 on
/// weight n-1 (the new even head occurs once, so the ped condition holds).
inline MappedPartition psi1(const Partition& mu, std::int64_t n) {
    if (n < 1) throw std::domain_error("psi1: target weight must be >= 1");
    if (!is_member(mu, PartitionClass::DE1))
        throw std::domain_error("psi1: input is not a DE1 partition: " + mu.to_string());
    if (mu.weight() == n) return {mu, CaseTag::PSI1_CASE1, n};
    if (mu.weight() != n - 1)
        throw std::domain_error("psi1: weight " + std::to_string(mu.weight()) +
                                " is neither n nor n-1 for n=" + std::to_string(n));
    auto parts = detail::parts_copy(mu);
    parts[0] += 1;
    return {Partition(std::move(parts)), CaseTag::PSI1_CASE2, n};
}

/// Sends a nonempty ped partition of n to a DE3 partition of n+2 or n-1.
/// Odd head: head + 2 (first gap becomes >= 2). Even head with second part
/// exactly head-1: the odd second part moves in front, + 2 (first gap 1).
/// Even head otherwise: head - 1, now odd and unique.
inline MappedPartition phi3(const Partition& lambda) {
    detail::require_ped_nonempty(lambda, "phi3");
    const int head = lambda.largest();
    const int second = detail::second_or_zero(lambda);
    auto parts = detail::parts_copy(lambda);
    if (head % 2 == 1) {
        parts[0] += 2;
        return {Partition(std::move(parts)), CaseTag::P3_CASE1, lambda.weight() + 2};
    }
    if (second == head - 1) {
        parts[0] = second + 2;
        parts[1] = head;
        return {Partition(std::move(parts)), CaseTag::P3_CASE2I, lambda.weight() + 2};
    }
    parts[0] -= 1;
    return {Partition(std::move(parts)), CaseTag::P3_CASE2II, lambda.weight() - 1};
}

/// Inverse of phi3 toward target weight n, split by weight and first gap.
inline MappedPartition psi3(const Partition& mu, std::int64_t n) {
    if (n < 1) throw std::domain_error("psi3: target weight must be >= 1");
    if (!is_member(mu, PartitionClass::DE3))
        throw std::domain_error("psi3: input is not a DE3 partition: " + mu.to_string());
    const int head = mu.largest();
    const int second = detail::second_or_zero(mu);
    auto parts = detail::parts_copy(mu);
    if (mu.weight() == n + 2) {
        if (head - second >= 2) {
            // head is odd, so head - 2 >= 1 for every weight-(n+2) input with
            // n >= 1; a zero part here would mean a corrupted preimage.
            if (head - 2 < 1)
                throw std::logic_error("psi3: case 1 would produce an empty head for " +
                                       mu.to_string());
            parts[0] -= 2;
            return {Partition(std::move(parts)), CaseTag::PSI3_CASE1, n};
        }
        // first gap is exactly 1: head-2 = second-1 < second, and any third
        // part is at most second-1 since the even value second cannot repeat
        parts[0] = second;
        parts[1] = head - 2;
        return {Partition(std::move(parts)), CaseTag::PSI3_CASE2, n};
    }
    if (mu.weight() != n - 1)
        throw std::domain_error("psi3: weight " + std::to_string(mu.weight()) +
                                " is neither n+2 nor n-1 for n=" + std::to_string(n));
    parts[0] += 1;
    return {Partition(std::move(parts)), CaseTag::PSI3_CASE3, n};
}

enum class BijectionId { PHI1, PHI3 };

/// Test hook: while verifying layer `layer`, the preimage at `position`
/// (enumeration order of the ped partitions of that layer) is mapped through
/// the wrong case branch.
struct BijectionFault {
    BijectionId which;
    std::int64_t layer = 0;
    std::int64_t position = 0;
};

namespace detail {

// Deliberately applies the wrong branch of phi1/phi3; only reachable through
// a BijectionFault.
inline MappedPartition apply_flipped_case(const Partition& lambda, BijectionId which) {
    auto parts = parts_copy(lambda);
    const int head = lambda.largest();
    if (which == BijectionId::PHI1) {
        if (head % 2 == 1) {
            parts[0] -= 1;
            if (parts[0] == 0) parts.erase(parts.begin());
            return {Partition(std::move(parts)), CaseTag::P1_CASE2, lambda.weight() - 1};
        }
        return {lambda, CaseTag::P1_CASE1, lambda.weight()};
    }
    if (head % 2 == 1) {
        parts[0] -= 1;
        if (parts[0] == 0) parts.erase(parts.begin());
        return {Partition(std::move(parts)), CaseTag::P3_CASE2II, lambda.weight() - 1};
    }
    parts[0] += 2;
    return {Partition(std::move(parts)), CaseTag::P3_CASE1, lambda.weight() + 2};
}

inline CaseTag expected_forward_tag(const Partition& lambda, BijectionId which) {
    const int head = lambda.largest();
    if (which == BijectionId::PHI1)
        return head % 2 == 1 ? CaseTag::P1_CASE1 : CaseTag::P1_CASE2;
    if (head % 2 == 1) return CaseTag::P3_CASE1;
    return second_or_zero(lambda) == head - 1 ? CaseTag::P3_CASE2I : CaseTag::P3_CASE2II;
}

}  // namespace detail

/// Runs the full bijection protocol for one layer n:
///   (a) every image lands in the stated class and weight,
///   (b) the case tag matches the defining condition of its case,
///   (c) phi3 images satisfy the per-case first-gap condition,
///   (d) images are pairwise distinct,
///   (e) psi(phi(lambda)) == lambda for every ped partition of n,
///   (f) the image set equals the full target union (explicit set compare),
///   (g) phi(psi(mu)) == mu for every mu in the target union.
/// Failures are reported, not thrown; the witness is the first counterexample
/// in enumeration order.
inline IdentityReport verify_bijection_layer(std::int64_t n, BijectionId which,
                                             const BijectionFault* fault = nullptr) {
    IdentityReport report{which == BijectionId::PHI1 ? IdentityId::LEMMA_2_1
                                                     : IdentityId::LEMMA_2_2,
                          Method::BIJECTION, n, n, std::nullopt};
    if (n < 1) throw std::invalid_argument("verify_bijection_layer: n must be >= 1");

    const PartitionClass target_class =
        which == BijectionId::PHI1 ? PartitionClass::DE1 : PartitionClass::DE3;
    const std::int64_t weight_hi = which == BijectionId::PHI1 ? n : n + 2;
    const std::int64_t weight_lo = n - 1;

    const auto fail = [&](std::int64_t at, const Partition& p, std::string what) {
        Witness w;
        w.n = at;
        w.partition = p;
        w.detail = std::move(what);
        report.witness = std::move(w);
    };

    const auto preimages = enumerate_class(n, PartitionClass::PED);
    std::set<Partition> images;
    for (std::size_t i = 0; i < preimages.size(); ++i) {
        const Partition& lambda = preimages[i];
        const bool faulted = fault && fault->which == which && fault->layer == n &&
                             fault->position == static_cast<std::int64_t>(i);
        const MappedPartition mapped =
            faulted ? detail::apply_flipped_case(lambda, which)
                    : (which == BijectionId::PHI1 ? phi1(lambda) : phi3(lambda));

        if (mapped.case_tag != detail::expected_forward_tag(lambda, which)) {
            fail(n, lambda, "case tag does not match the defining condition");
            return report;
        }
        if (mapped.image.weight() != mapped.target_weight ||
            (mapped.target_weight != weight_lo && mapped.target_weight != weight_hi)) {
            fail(n, lambda, "image weight " + std::to_string(mapped.image.weight()) +
                                " outside the target layers");
            return report;
        }
        if (!is_member(mapped.image, target_class)) {
            fail(n, lambda, "image " + mapped.image.to_string() + " is not in " +
                                std::string(to_string(target_class)));
            return report;
        }
        if (which == BijectionId::PHI3) {
            const int gap = mapped.image.largest() - detail::second_or_zero(mapped.image);
            if (mapped.case_tag == CaseTag::P3_CASE1 && gap < 2) {
                fail(n, lambda, "case 1 image must have first gap >= 2");
                return report;
            }
            if (mapped.case_tag == CaseTag::P3_CASE2I && gap != 1) {
                fail(n, lambda, "case 2(i) image must have first gap 1");
                return report;
            }
        }
        const MappedPartition back = which == BijectionId::PHI1 ? psi1(mapped.image, n)
                                                                : psi3(mapped.image, n);
        if (back.image != lambda) {
            fail(n, lambda, "psi(phi(lambda)) = " + back.image.to_string() + " != lambda");
            return report;
        }
        if (!images.insert(mapped.image).second) {
            fail(n, lambda, "image " + mapped.image.to_string() + " already produced");
            return report;
        }
    }

    std::vector<Partition> targets = enumerate_class(weight_hi, target_class);
    if (weight_lo >= 0) {
        auto lower = enumerate_class(weight_lo, target_class);
        targets.insert(targets.end(), lower.begin(), lower.end());
    }
    if (targets.size() != images.size()) {
        Witness w;
        w.n = n;
        w.lhs = static_cast<std::int64_t>(images.size());
        w.rhs = static_cast<std::int64_t>(targets.size());
        w.detail = "image count differs from target union size";
        report.witness = std::move(w);
        return report;
    }
    for (const Partition& mu : targets) {
        if (!images.contains(mu)) {
            fail(n, mu, "target " + mu.to_string() + " has no preimage");
            return report;
        }
        const MappedPartition pre = which == BijectionId::PHI1 ? psi1(mu, n) : psi3(mu, n);
        const MappedPartition round =
            which == BijectionId::PHI1 ? phi1(pre.image) : phi3(pre.image);
        if (round.image != mu) {
            fail(n, mu, "phi(psi(mu)) = " + round.image.to_string() + " != mu");
            return report;
        }
    }
    return report;
}

inline std::string_view to_string(CaseTag tag) noexcept {
    switch (tag) {
        case CaseTag::P1_CASE1: return "P1_CASE1";
        case CaseTag::P1_CASE2: return "P1_CASE2";
        case CaseTag::P3_CASE1: return "P3_CASE1";
        case CaseTag::P3_CASE2I: return "P3_CASE2I";
        case CaseTag::P3_CASE2II: return "P3_CASE2II";
        case CaseTag::PSI1_CASE1: return "PSI1_CASE1";
        case CaseTag::PSI1_CASE2: return "PSI1_CASE2";
        case CaseTag::PSI3_CASE1: return "PSI3_CASE1";
        case CaseTag::PSI3_CASE2: return "PSI3_CASE2";
        case CaseTag::PSI3_CASE3: return "PSI3_CASE3";
    }
    return "?";
}

}  // namespace pedparts
