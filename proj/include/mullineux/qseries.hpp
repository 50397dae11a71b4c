#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mullineux {

/// Truncated power series Σ_{n≤N} c_n q^n with exact int64 coefficients.
/// Binary operations truncate to the smaller N; overflow throws.
class Series1 {
public:
    explicit Series1(int truncation);
    Series1(int truncation, std::vector<std::int64_t> coeffs);

    static Series1 one(int truncation);

    int truncation() const { return truncation_; }
    std::span<const std::int64_t> coeffs() const { return coeffs_; }
    /// c_n, or 0 beyond the truncation.
    std::int64_t operator[](int n) const;

    Series1 truncated(int truncation) const;

    /// In-place multiply by (1 + sign·q^d).
    void multiply_binomial(int sign, int degree);
    /// In-place divide by (1 + sign·q^d).
    void divide_binomial(int sign, int degree);

    Series1& operator+=(const Series1& other);
    Series1& operator-=(const Series1& other);
    Series1& operator*=(const Series1& other);

    /// Exact division; the divisor's constant term must be ±1.
    Series1 divided_by(const Series1& divisor) const;
    /// Nonnegative exponents multiply; negative ones invert first.
    Series1 pow(int exponent) const;
    /// q → -q.
    Series1 negate_q() const;
    /// q → q^k.
    Series1 dilate(int k) const;

    friend bool operator==(const Series1&, const Series1&) = default;

private:
    int truncation_;
    std::vector<std::int64_t> coeffs_;
};

Series1 operator+(Series1 a, const Series1& b);
Series1 operator-(Series1 a, const Series1& b);
Series1 operator*(Series1 a, const Series1& b);
Series1 operator/(const Series1& a, const Series1& b);

/// Two-variable series Σ c(w,n) x^w q^n with q-degree at most N. The
/// x-degree is stored up to N as well.
class Series2 {
public:
    explicit Series2(int truncation);

    static Series2 one(int truncation);
    /// B(q) as a series with x-degree 0.
    static Series2 from_q_series(const Series1& b);

    int truncation() const { return truncation_; }
    std::int64_t coeff(int w, int n) const;
    void set(int w, int n, std::int64_t value);

    /// In-place multiply by (1 + sign·x^w q^n); requires n ≥ 1.
    void multiply_binomial(int sign, int w, int n);
    /// In-place divide by (1 + sign·x^w q^n); requires n ≥ 1.
    void divide_binomial(int sign, int w, int n);

    Series2& operator*=(const Series2& other);

    /// x = 1.
    Series1 at_x_equals_one() const;

    struct Term {
        int w;
        int n;
        std::int64_t c;
        friend bool operator==(const Term&, const Term&) = default;
    };
    /// Nonzero terms sorted by (n, w).
    std::vector<Term> terms() const;

    friend bool operator==(const Series2&, const Series2&) = default;

private:
    int truncation_;
    std::vector<std::int64_t> grid_; // (w, n) at w * (N+1) + n
};

/// Π_{k≥0} (1 + sign·q^{a+kb}) truncated at N. sign = +1 gives χ-style
/// factors, sign = -1 the usual (q^a; q^b)_∞.
Series1 pochhammer(int sign, int offset, int step, int truncation);

/// Π_{k≥0} (1 + sign·x^{wa + k·wb} q^{a + k·b}), requires a, b ≥ 1.
Series2 pochhammer2(int sign, int x_offset, int offset, int x_step, int step, int truncation);

/// (-q; q²)_∞: distinct odd parts.
Series1 chi(int truncation);

/// Generating function of Mullineux fixed points: χ(q)/χ(q^e) for odd e,
/// χ(q)/χ(-q^e) for even e.
Series1 mf_series(int e, int truncation);

/// MF_e(-q), obtained from mf_series by q → -q.
Series1 mf_alternating(int e, int truncation);
/// Π_{k≥1} (1 + q^{ek}) / (1 + q^k), computed directly.
Series1 mf_alternating_product(int e, int truncation);

/// Self-conjugate e-cores.
Series1 sc_series(int e, int truncation);

/// 1/((q²;q²)^{e/2} (q;q²)), e even.
Series1 f_series(int e, int truncation);
/// 1/(q;q)^{(e-1)/2}, e odd.
Series1 g_series(int e, int truncation);

/// Fixed points of weight w in n from the closed forms; 0 when n < e·w,
/// and 0 for odd e with odd w.
std::int64_t mf_by_weight(int e, int w, int n);

/// MF_e(x, q) from its closed product.
Series2 mf_two_var(int e, int truncation);
/// MF_e(x, q) assembled as A(q^e x)·SC_e(q) (e even, A = f_e) or
/// A(q^{2e} x²)·SC_e(q) (e odd, A = g_e).
Series2 mf_two_var_reindexed(int e, int truncation);

/// Σ_w a_w x^{stride·w} q^{e·stride·w} · B(q).
Series2 reindex_product(const Series1& a, const Series1& b, int e, int stride, int truncation);

} // namespace mullineux
