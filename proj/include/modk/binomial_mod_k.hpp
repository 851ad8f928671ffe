#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "modk/errors.hpp"

namespace modk {

// P(Bin(n,p) = t (mod k)) and the uniformity bound |P - 1/k| <= e^{-a_k np(1-p)}.
//
// Two independent routes are provided: a dynamic program over (trial,
// residue), exact in rational arithmetic whenever p is a small-denominator
// rational, and the roots-of-unity filter evaluated in complex arithmetic.
// The DP is the oracle; the filter is checked against it.

struct BinModKQuery {
    long long n = 0;
    double p = 0.0;
    int k = 2;
    int t = 0;
};

namespace detail {

inline void validate(const BinModKQuery& q) {
    if (q.n < 0)
        throw input_error("binom_mod_k: n must be non-negative");
    if (q.p < 0.0 || q.p > 1.0)
        throw input_error("binom_mod_k: p must lie in [0,1]");
    if (q.k < 2)
        throw input_error("binom_mod_k: k must be at least 2");
    if (q.t < 0 || q.t >= q.k)
        throw input_error("binom_mod_k: t must lie in 0..k-1");
}

// Integer-exponent complex power by repeated squaring; avoids the exp/log
// path (and its 0^n edge cases) of std::pow.
inline std::complex<double> cpow_int(std::complex<double> base, long long e) {
    std::complex<double> acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// log2 of a positive big integer, accurate to ~1e-15 relative.
inline double log2_big(const boost::multiprecision::cpp_int& x) {
    using boost::multiprecision::cpp_int;
    const std::size_t bits = msb(x); // floor(log2 x)
    if (bits <= 62)
        return std::log2(static_cast<double>(x.convert_to<std::uint64_t>()));
    const cpp_int top = x >> static_cast<unsigned>(bits - 62);
    return std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) +
           static_cast<double>(bits - 62);
}

// num/den as double for den of arbitrary size, via 80-bit scaling.
inline double big_ratio(const boost::multiprecision::cpp_int& num,
                        const boost::multiprecision::cpp_int& den) {
    using boost::multiprecision::cpp_int;
    if (num == 0)
        return 0.0;
    const cpp_int scaled = (num << 80) / den;
    return std::ldexp(scaled.convert_to<double>(), -80);
}

} // namespace detail

// Smallest denominator d <= max_den with p ~ round(p*d)/d, if any.
inline std::optional<std::pair<std::int64_t, std::int64_t>>
detect_small_rational(double p, std::int64_t max_den = 64) {
    for (std::int64_t d = 1; d <= max_den; ++d) {
        const double scaled = p * static_cast<double>(d);
        const double rounded = std::nearbyint(scaled);
        if (std::abs(scaled - rounded) < 1e-9 * static_cast<double>(d) &&
            rounded >= 0.0 && rounded <= static_cast<double>(d))
            return std::make_pair(static_cast<std::int64_t>(rounded), d);
    }
    return std::nullopt;
}

// Incremental DP over the trial count: after m steps, state is the
// distribution of Bin(m,p) over residues mod k. In exact mode p = num/den
// and the state holds integer numerators over the implicit denominator
// den^m, so every probability is exact.
class BinomialResidueDP {
public:
    using big = boost::multiprecision::cpp_int;

    BinomialResidueDP(std::int64_t num, std::int64_t den, int k)
        : k_(k), num_(num), den_(den), exact_(true) {
        if (k < 2)
            throw input_error("BinomialResidueDP: k must be at least 2");
        if (den <= 0 || num < 0 || num > den)
            throw input_error("BinomialResidueDP: need 0 <= num/den <= 1");
        exact_state_.assign(static_cast<std::size_t>(k), big(0));
        exact_state_[0] = 1;
        exact_den_ = 1;
    }

    BinomialResidueDP(double p, int k) : k_(k), p_(p) {
        if (k < 2)
            throw input_error("BinomialResidueDP: k must be at least 2");
        if (p < 0.0 || p > 1.0)
            throw input_error("BinomialResidueDP: p must lie in [0,1]");
        if (auto frac = detect_small_rational(p)) {
            *this = BinomialResidueDP(frac->first, frac->second, k);
            return;
        }
        exact_ = false;
        float_state_.assign(static_cast<std::size_t>(k), 0.0);
        float_state_[0] = 1.0;
    }

    bool exact() const { return exact_; }
    long long trials() const { return trials_; }
    int modulus() const { return k_; }

    void step() {
        if (exact_) {
            std::vector<big> next(static_cast<std::size_t>(k_));
            for (int t = 0; t < k_; ++t) {
                const int prev = (t + k_ - 1) % k_;
                next[static_cast<std::size_t>(t)] =
                    exact_state_[static_cast<std::size_t>(t)] * (den_ - num_) +
                    exact_state_[static_cast<std::size_t>(prev)] * num_;
            }
            exact_state_ = std::move(next);
            exact_den_ *= den_;
        } else {
            std::vector<double> next(static_cast<std::size_t>(k_));
            for (int t = 0; t < k_; ++t) {
                const int prev = (t + k_ - 1) % k_;
                next[static_cast<std::size_t>(t)] =
                    float_state_[static_cast<std::size_t>(t)] * (1.0 - p_) +
                    float_state_[static_cast<std::size_t>(prev)] * p_;
            }
            float_state_ = std::move(next);
        }
        ++trials_;
    }

    void step_to(long long n) {
        if (n < trials_)
            throw input_error("BinomialResidueDP: cannot step backwards");
        while (trials_ < n)
            step();
    }

    double prob(int t) const {
        if (t < 0 || t >= k_)
            throw input_error("BinomialResidueDP: t out of range");
        if (exact_)
            return detail::big_ratio(exact_state_[static_cast<std::size_t>(t)],
                                     exact_den_);
        return float_state_[static_cast<std::size_t>(t)];
    }

    // Exact numerator of P(residue = t) over denominator den^trials.
    const big& exact_numerator(int t) const {
        if (!exact_)
            throw input_error("BinomialResidueDP: not in exact mode");
        return exact_state_.at(static_cast<std::size_t>(t));
    }

    const big& exact_denominator() const {
        if (!exact_)
            throw input_error("BinomialResidueDP: not in exact mode");
        return exact_den_;
    }

    // log2 |P(residue = t) - 1/k|, -infinity when exactly uniform. Computed
    // without ever leaving integer arithmetic, so it stays meaningful when
    // the deviation is far below double underflow.
    double log2_deviation_from_uniform(int t) const {
        if (!exact_)
            throw input_error("BinomialResidueDP: exact mode required");
        const big diff = k_ * exact_state_.at(static_cast<std::size_t>(t)) - exact_den_;
        if (diff == 0)
            return -std::numeric_limits<double>::infinity();
        return detail::log2_big(abs(diff)) - std::log2(static_cast<double>(k_)) -
               detail::log2_big(exact_den_);
    }

private:
    int k_ = 2;
    long long trials_ = 0;
    // exact mode
    std::int64_t num_ = 0, den_ = 1;
    bool exact_ = false;
    std::vector<big> exact_state_;
    big exact_den_ = 1;
    // float mode
    double p_ = 0.0;
    std::vector<double> float_state_;
};

// Exact P(Bin(n,p) = t (mod k)) via the residue DP. This is the oracle the
// roots-of-unity route is tested against.
inline double binom_mod_k_exact(const BinModKQuery& q) {
    detail::validate(q);
    BinomialResidueDP dp(q.p, q.k);
    dp.step_to(q.n);
    return dp.prob(q.t);
}

// Roots-of-unity filter: (1/k) sum_j alpha^{-jt} (1 + (alpha^j - 1) p)^n
// with alpha a primitive kth root of unity. The sum is analytically real; an
// imaginary residue above 1e-9 reports numerical instability.
inline double binom_mod_k_roots(const BinModKQuery& q) {
    detail::validate(q);
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> sum(0.0, 0.0);
    for (int j = 0; j < q.k; ++j) {
        const double theta = two_pi * static_cast<double>(j) / static_cast<double>(q.k);
        const std::complex<double> alpha_j(std::cos(theta), std::sin(theta));
        const std::complex<double> alpha_minus_jt(
            std::cos(theta * static_cast<double>(q.t)),
            -std::sin(theta * static_cast<double>(q.t)));
        const std::complex<double> base =
            std::complex<double>(1.0, 0.0) + (alpha_j - 1.0) * q.p;
        sum += alpha_minus_jt * detail::cpow_int(base, q.n);
    }
    sum /= static_cast<double>(q.k);
    if (std::abs(sum.imag()) > 1e-9)
        throw numerical_error("binom_mod_k_roots: imaginary residue " +
                              std::to_string(sum.imag()));
    return sum.real();
}

// a_k = 1 - cos(2*pi/k): the decay rate extracted from the filter's worst
// nontrivial root; a_2 = 2.
inline double binom_mod_k_rate(int k) {
    if (k < 2)
        throw input_error("binom_mod_k_rate: k must be at least 2");
    return 1.0 - std::cos(6.283185307179586476925286766559 / static_cast<double>(k));
}

// e^{-a_k n p (1-p)}, the bound on |P(Bin(n,p) = t (mod k)) - 1/k|.
inline double binom_mod_k_bound(const BinModKQuery& q) {
    detail::validate(q);
    return std::exp(-binom_mod_k_rate(q.k) * static_cast<double>(q.n) * q.p *
                    (1.0 - q.p));
}

} // namespace modk
