#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pedparts {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflow in multiplication");
    return r;
}

}  // namespace detail

/// A formal power series over the integers, truncated at q^order. All
/// arithmetic is exact 64-bit with overflow checks; wraparound is never
/// silent. Values are immutable: every operation returns a new series.
class Series {
public:
    /// The zero series of the given truncation order.
    explicit Series(int order) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1, 0) {}

    static Series constant(std::int64_t c, int order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c * q^exponent. Throws if the exponent exceeds the truncation order.
    static Series monomial(std::int64_t c, int exponent, int order) {
        Series s(order);
        if (exponent < 0 || exponent > order)
            throw std::invalid_argument("Series::monomial: exponent " + std::to_string(exponent) +
                                        " outside [0, " + std::to_string(order) + "]");
        s.coeffs_[static_cast<std::size_t>(exponent)] = c;
        return s;
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    std::int64_t coeff(int k) const {
        if (k < 0 || k > order())
            throw std::out_of_range("Series::coeff: index " + std::to_string(k) +
                                    " outside [0, " + std::to_string(order()) + "]");
        return coeffs_[static_cast<std::size_t>(k)];
    }

    std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

    /// Copy with one coefficient replaced; the verifier's fault hook.
    Series with_coeff(int k, std::int64_t value) const {
        Series s = *this;
        if (k < 0 || k > order())
            throw std::out_of_range("Series::with_coeff: index out of range");
        s.coeffs_[static_cast<std::size_t>(k)] = value;
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        require_same_order(a, b, "+");
        Series out(a.order());
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
            out.coeffs_[k] = detail::checked_add(a.coeffs_[k], b.coeffs_[k]);
        return out;
    }

    friend Series operator-(const Series& a, const Series& b) {
        require_same_order(a, b, "-");
        Series out(a.order());
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
            out.coeffs_[k] = detail::checked_sub(a.coeffs_[k], b.coeffs_[k]);
        return out;
    }

    friend Series operator-(const Series& a) { return Series::constant(0, a.order()) - a; }

    /// Cauchy product truncated at the common order.
    friend Series operator*(const Series& a, const Series& b) {
        require_same_order(a, b, "*");
        Series out(a.order());
        const std::size_t n = a.coeffs_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::int64_t ai = a.coeffs_[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j < n - i; ++j) {
                if (b.coeffs_[j] == 0) continue;
                out.coeffs_[i + j] =
                    detail::checked_add(out.coeffs_[i + j], detail::checked_mul(ai, b.coeffs_[j]));
            }
        }
        return out;
    }

    /// Multiplicative inverse modulo q^{order+1}. Requires constant term
    /// +1 or -1, which keeps every coefficient an integer:
    ///   b_0 = 1/a_0,  b_k = -(1/a_0) * sum_{j=1..k} a_j b_{k-j}.
    Series inverse() const {
        if (coeffs_[0] != 1 && coeffs_[0] != -1)
            throw std::domain_error("Series::inverse: constant term must be +1 or -1, got " +
                                    std::to_string(coeffs_[0]));
        const std::int64_t a0 = coeffs_[0];
        Series out(order());
        out.coeffs_[0] = a0;
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            std::int64_t acc = 0;
            for (std::size_t j = 1; j <= k; ++j)
                acc = detail::checked_add(acc, detail::checked_mul(coeffs_[j], out.coeffs_[k - j]));
            out.coeffs_[k] = detail::checked_mul(-a0, acc);
        }
        return out;
    }

    friend bool operator==(const Series&, const Series&) = default;

private:
    struct raw_t {};
    Series(std::vector<std::int64_t> coeffs, raw_t) : coeffs_(std::move(coeffs)) {}

    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("Series: order must be >= 0");
        return order;
    }

    static void require_same_order(const Series& a, const Series& b, const char* op) {
        if (a.order() != b.order())
            throw std::invalid_argument(std::string("Series: operator") + op +
                                        " needs equal truncation orders (" +
                                        std::to_string(a.order()) + " vs " +
                                        std::to_string(b.order()) + ")");
    }

    friend Series pochhammer(const struct PochhammerSpec& spec, int order);

    std::vector<std::int64_t> coeffs_;
};

/// The product prod_{j=0}^{length-1} (1 - sign * q^{offset + j*step}),
/// truncated at q^order. length == nullopt means the infinite product;
/// factors whose exponent exceeds the order are identically 1 and skipped.
struct PochhammerSpec {
    int sign;                         // the +/- inside (+-q^offset; q^step): +1 or -1
    int offset;                       // >= 1, so every factor has unit constant term
    int step;                         // >= 1
    std::optional<long long> length;  // factor count; nullopt = infinite
};

inline Series pochhammer(const PochhammerSpec& spec, int order) {
    if (order < 0) throw std::invalid_argument("pochhammer: order must be >= 0");
    if (spec.sign != 1 && spec.sign != -1)
        throw std::invalid_argument("pochhammer: sign must be +1 or -1");
    if (spec.offset < 1) throw std::invalid_argument("pochhammer: offset must be >= 1");
    if (spec.step < 1) throw std::invalid_argument("pochhammer: step must be >= 1");
    if (spec.length && *spec.length < 0)
        throw std::invalid_argument("pochhammer: length must be >= 0");

    // Multiplying by (1 - s*q^e) only shifts and subtracts, so each factor is
    // O(order) instead of a full convolution. Descending index order makes the
    // in-place update read only not-yet-written entries.
    std::vector<std::int64_t> acc(static_cast<std::size_t>(order) + 1, 0);
    acc[0] = 1;
    for (long long j = 0;; ++j) {
        if (spec.length && j >= *spec.length) break;
        const long long exponent = spec.offset + j * static_cast<long long>(spec.step);
        if (exponent > order) break;
        const auto e = static_cast<std::size_t>(exponent);
        for (std::size_t k = acc.size(); k-- > e;)
            acc[k] = detail::checked_add(acc[k],
                                         detail::checked_mul(-spec.sign, acc[k - e]));
    }
    return Series(std::move(acc), Series::raw_t{});
}

}  // namespace pedparts
