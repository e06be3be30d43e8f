#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pedparts {

/// A partition in canonical form: parts non-increasing, every part >= 1.
/// The empty partition (weight 0) is a valid value. Immutable after
/// construction; the constructor canonicalizes whatever order it is given.
class Partition {
public:
    Partition() = default;

    /// Sorts the parts non-increasing and computes the weight.
    /// Throws std::invalid_argument if any entry is <= 0.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p <= 0)
                throw std::invalid_argument("Partition: every part must be >= 1, got " +
                                            std::to_string(p));
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        for (int p : parts_) weight_ += p;
    }

    std::span<const int> parts() const noexcept { return parts_; }
    std::int64_t weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }
    int part(std::size_t i) const { return parts_.at(i); }

    /// Largest part; throws std::domain_error on the empty partition.
    int largest() const {
        if (parts_.empty()) throw std::domain_error("Partition: empty partition has no largest part");
        return parts_.front();
    }

    /// Multiplicity of the largest part (0 for the empty partition).
    int largest_multiplicity() const noexcept {
        if (parts_.empty()) return 0;
        int m = 0;
        for (int p : parts_) {
            if (p != parts_.front()) break;
            ++m;
        }
        return m;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                      b.parts_.begin(), b.parts_.end());
    }

    /// "5+4+1" for (5,4,1); "0" for the empty partition.
    std::string to_string(char sep = '+') const {
        if (parts_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += sep;
            out += std::to_string(parts_[i]);
        }
        return out;
    }

private:
    std::vector<int> parts_;
    std::int64_t weight_ = 0;
};

/// Canonical constructor used throughout: accepts parts in any order.
inline Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }

/// The six restricted classes.
enum class PartitionClass { PED, FOUR_REGULAR, DE1, DE2, DE3, PED_GT1 };

inline constexpr std::array<PartitionClass, 6> kAllClasses = {
    PartitionClass::PED,      PartitionClass::FOUR_REGULAR, PartitionClass::DE1,
    PartitionClass::DE2,      PartitionClass::DE3,          PartitionClass::PED_GT1,
};

inline constexpr std::size_t class_index(PartitionClass c) noexcept {
    return static_cast<std::size_t>(c);
}

namespace detail {

// Parts are assumed canonical (non-increasing), so a repeated value is
// always adjacent.
inline bool no_even_part_repeated(std::span<const int> parts) noexcept {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] == parts[i - 1] && parts[i] % 2 == 0) return false;
    return true;
}

inline bool largest_is_odd(std::span<const int> parts) noexcept {
    return !parts.empty() && parts.front() % 2 == 1;
}

inline int largest_multiplicity(std::span<const int> parts) noexcept {
    if (parts.empty()) return 0;
    int m = 0;
    for (int p : parts) {
        if (p != parts.front()) break;
        ++m;
    }
    return m;
}

}  // namespace detail

/// Membership test on a canonical (non-increasing) part sequence.
/// The empty partition belongs to PED, FOUR_REGULAR and PED_GT1 but not to
/// DE1/DE2/DE3, which all require a largest part.
inline bool is_member(std::span<const int> parts, PartitionClass c) noexcept {
    switch (c) {
        case PartitionClass::PED:
            return detail::no_even_part_repeated(parts);
        case PartitionClass::FOUR_REGULAR:
            return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 4 != 0; });
        case PartitionClass::DE1:
            return detail::largest_is_odd(parts) && detail::no_even_part_repeated(parts);
        case PartitionClass::DE2:
            return detail::largest_is_odd(parts) && detail::no_even_part_repeated(parts) &&
                   detail::largest_multiplicity(parts) >= 2;
        case PartitionClass::DE3:
            return detail::largest_is_odd(parts) && detail::no_even_part_repeated(parts) &&
                   detail::largest_multiplicity(parts) == 1;
        case PartitionClass::PED_GT1:
            return detail::no_even_part_repeated(parts) &&
                   std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 2; });
    }
    return false;
}

inline bool is_member(const Partition& lambda, PartitionClass c) noexcept {
    return is_member(lambda.parts(), c);
}

namespace detail {

template <typename Visit>
void emit_partitions(int remaining, int max_part, std::vector<int>& prefix, Visit& visit) {
    if (remaining == 0) {
        visit(std::span<const int>(prefix));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, prefix, visit);
        prefix.pop_back();
    }
}

inline int checked_small_n(std::int64_t n, const char* who) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be >= 0");
    // Enumeration beyond this is unreachable in practice (p(n) explodes long
    // before), but the guard keeps the int narrowing well defined.
    if (n > 1'000'000) throw std::invalid_argument(std::string(who) + ": n out of supported range");
    return static_cast<int>(n);
}

}  // namespace detail

/// Visits every partition of n exactly once, in decreasing lexicographic
/// order: (n), (n-1,1), ..., (1,...,1). For n = 0 visits only the empty
/// partition. The span passed to the callback is valid only for the call.
template <typename Visit>
void for_each_partition(std::int64_t n, Visit&& visit) {
    const int small_n = detail::checked_small_n(n, "for_each_partition");
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(small_n));
    detail::emit_partitions(small_n, small_n, prefix, visit);
}

/// All partitions of n, in the enumeration order of for_each_partition.
inline std::vector<Partition> enumerate_all(std::int64_t n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const int> parts) {
        out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    });
    return out;
}

/// Members of class c with weight n, in enumeration order.
inline std::vector<Partition> enumerate_class(std::int64_t n, PartitionClass c) {
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const int> parts) {
        if (is_member(parts, c)) out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    });
    return out;
}

/// |enumerate_class(n, c)|, by streaming over the full enumeration.
inline std::uint64_t count_class(std::int64_t n, PartitionClass c) {
    std::uint64_t count = 0;
    for_each_partition(n, [&](std::span<const int> parts) {
        if (is_member(parts, c)) ++count;
    });
    return count;
}

/// Counts for all six classes in one sweep over the partitions of n,
/// indexed by class_index().
inline std::array<std::uint64_t, 6> count_all_classes(std::int64_t n) {
    std::array<std::uint64_t, 6> counts{};
    for_each_partition(n, [&](std::span<const int> parts) {
        const bool ped = detail::no_even_part_repeated(parts);
        if (ped) {
            ++counts[class_index(PartitionClass::PED)];
            if (detail::largest_is_odd(parts)) {
                ++counts[class_index(PartitionClass::DE1)];
                if (detail::largest_multiplicity(parts) == 1)
                    ++counts[class_index(PartitionClass::DE3)];
                else
                    ++counts[class_index(PartitionClass::DE2)];
            }
            if (parts.empty() || parts.back() >= 2)
                ++counts[class_index(PartitionClass::PED_GT1)];
        }
        if (std::all_of(parts.begin(), parts.end(), [](int p) { return p % 4 != 0; }))
            ++counts[class_index(PartitionClass::FOUR_REGULAR)];
    });
    return counts;
}

inline std::string_view to_string(PartitionClass c) noexcept {
    switch (c) {
        case PartitionClass::PED: return "PED";
        case PartitionClass::FOUR_REGULAR: return "FOUR_REGULAR";
        case PartitionClass::DE1: return "DE1";
        case PartitionClass::DE2: return "DE2";
        case PartitionClass::DE3: return "DE3";
        case PartitionClass::PED_GT1: return "PED_GT1";
    }
    return "?";
}

}  // namespace pedparts
