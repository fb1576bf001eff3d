#ifndef JOINRIG_FIELD_HPP
#define JOINRIG_FIELD_HPP

// Exact scalar types: a prime field F_p and arbitrary-precision rationals.
// Both model the ExactField concept used by every matrix routine.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace joinrig {

using Rng = std::mt19937_64;

template <class F>
concept ExactField = std::regular<F> && requires(F a, F b, Rng& rng, std::int64_t k) {
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.inverse() } -> std::same_as<F>;
    { a.to_string() } -> std::same_as<std::string>;
    { F::from_int(k) } -> std::same_as<F>;
    { F::random(rng) } -> std::same_as<F>;
    { F::name() } -> std::convertible_to<std::string_view>;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in exact field") {}
};

/// Element of F_p for an odd prime p < 2^63.
///
/// The default modulus is the Mersenne prime 2^61 - 1. Products are formed in
/// 128-bit arithmetic, so every operation is exact.
template <std::uint64_t P = (std::uint64_t{1} << 61) - 1>
class ModPrime {
    static_assert(P % 2 == 1 && P > 2, "modulus must be an odd prime");
    static_assert(P < (std::uint64_t{1} << 63));

public:
    static constexpr std::uint64_t modulus = P;

    constexpr ModPrime() = default;

    static constexpr ModPrime from_int(std::int64_t k) {
        auto r = k % static_cast<std::int64_t>(P);
        if (r < 0)
            r += static_cast<std::int64_t>(P);
        return raw(static_cast<std::uint64_t>(r));
    }

    static constexpr ModPrime from_residue(std::uint64_t r) { return raw(r % P); }

    static ModPrime random(Rng& rng) {
        std::uniform_int_distribution<std::uint64_t> dist(0, P - 1);
        return raw(dist(rng));
    }

    static constexpr std::string_view name() { return "prime"; }

    [[nodiscard]] constexpr std::uint64_t residue() const { return v_; }
    [[nodiscard]] constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr ModPrime operator+(ModPrime a, ModPrime b) {
        auto s = a.v_ + b.v_;
        return raw(s >= P ? s - P : s);
    }
    friend constexpr ModPrime operator-(ModPrime a, ModPrime b) {
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_);
    }
    friend constexpr ModPrime operator*(ModPrime a, ModPrime b) {
        auto wide = static_cast<unsigned __int128>(a.v_) * b.v_;
        if constexpr (P == (std::uint64_t{1} << 61) - 1) {
            // Mersenne folding: 2^61 = 1 (mod P)
            auto lo = static_cast<std::uint64_t>(wide) & P;
            auto hi = static_cast<std::uint64_t>(wide >> 61);
            auto s = lo + hi;
            return raw(s >= P ? s - P : s);
        } else {
            return raw(static_cast<std::uint64_t>(wide % P));
        }
    }
    friend ModPrime operator/(ModPrime a, ModPrime b) { return a * b.inverse(); }
    constexpr ModPrime operator-() const { return raw(v_ == 0 ? 0 : P - v_); }

    ModPrime& operator+=(ModPrime o) { return *this = *this + o; }
    ModPrime& operator-=(ModPrime o) { return *this = *this - o; }
    ModPrime& operator*=(ModPrime o) { return *this = *this * o; }
    ModPrime& operator/=(ModPrime o) { return *this = *this / o; }

    friend constexpr bool operator==(ModPrime, ModPrime) = default;

    [[nodiscard]] ModPrime inverse() const {
        if (v_ == 0)
            throw DivisionByZero();
        // extended Euclid on signed 128-bit values
        __int128 t = 0, new_t = 1;
        __int128 r = P, new_r = v_;
        while (new_r != 0) {
            auto q = r / new_r;
            auto tmp_t = t - q * new_t;
            t = new_t;
            new_t = tmp_t;
            auto tmp_r = r - q * new_r;
            r = new_r;
            new_r = tmp_r;
        }
        if (t < 0)
            t += P;
        return raw(static_cast<std::uint64_t>(t));
    }

    [[nodiscard]] std::string to_string() const { return std::to_string(v_); }

private:
    static constexpr ModPrime raw(std::uint64_t v) {
        ModPrime m;
        m.v_ = v;
        return m;
    }

    std::uint64_t v_ = 0;
};

using Fp = ModPrime<>;

/// Exact rational number with arbitrary-precision numerator and denominator.
class Rational {
public:
    using value_type = boost::multiprecision::cpp_rational;

    Rational() = default;
    explicit Rational(value_type v) : v_(std::move(v)) {}
    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0)
            throw DivisionByZero();
        v_ = value_type(num, den);
    }

    static Rational from_int(std::int64_t k) { return Rational(value_type(k)); }

    /// Uniform integer in [1, 2^20].
    static Rational random(Rng& rng) {
        std::uniform_int_distribution<std::int64_t> dist(1, std::int64_t{1} << 20);
        return from_int(dist(rng));
    }

    static constexpr std::string_view name() { return "rational"; }

    [[nodiscard]] bool is_zero() const { return v_.is_zero(); }
    [[nodiscard]] const value_type& value() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw DivisionByZero();
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

    [[nodiscard]] Rational inverse() const {
        if (is_zero())
            throw DivisionByZero();
        return Rational(value_type(1) / v_);
    }

    /// "num/den" in lowest terms; integers keep the "/1" suffix.
    [[nodiscard]] std::string to_string() const {
        return boost::multiprecision::numerator(v_).str() + "/" +
               boost::multiprecision::denominator(v_).str();
    }

private:
    value_type v_{0};
};

static_assert(ExactField<Fp>);
static_assert(ExactField<Rational>);

template <ExactField F>
F field_zero() {
    return F::from_int(0);
}

template <ExactField F>
F field_one() {
    return F::from_int(1);
}

/// Embeds num/den into F. Throws DivisionByZero when den vanishes in F.
template <ExactField F>
F from_fraction(std::int64_t num, std::int64_t den) {
    return F::from_int(num) / F::from_int(den);
}

template <ExactField F>
F random_scalar(Rng& rng) {
    return F::random(rng);
}

} // namespace joinrig

#endif
