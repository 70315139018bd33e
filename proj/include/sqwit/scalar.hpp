#pragma once

#include <variant>

#include "sqwit/rational.hpp"

namespace sqwit {

enum class Backend { Exact, Float };

/// Dual-backend number used at the CLI boundary. Formula kernels are
/// templates over Rational or double; Scalar carries parsed user input to
/// whichever instantiation runs. Mixing backends in arithmetic is an error.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    explicit Scalar(Rational r) : value_(std::move(r)) {}
    explicit Scalar(double x) : value_(x) {}

    Backend backend() const {
        return std::holds_alternative<Rational>(value_) ? Backend::Exact : Backend::Float;
    }
    bool is_exact() const { return backend() == Backend::Exact; }

    // float backend is IEEE double: 53 mantissa bits
    static constexpr int float_precision_bits = 53;

    const Rational& rational() const {
        if (!is_exact()) throw UnsupportedBackend("Scalar: float value used where exact required");
        return std::get<Rational>(value_);
    }
    double as_double() const {
        return is_exact() ? std::get<Rational>(value_).get_d() : std::get<double>(value_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return apply(a, b, [](auto x, auto y) { return x + y; }); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return apply(a, b, [](auto x, auto y) { return x - y; }); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return apply(a, b, [](auto x, auto y) { return x * y; }); }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw DomainError("Scalar: division by zero");
        return apply(a, b, [](auto x, auto y) { return x / y; });
    }

    bool is_zero() const {
        return is_exact() ? std::get<Rational>(value_) == 0 : std::get<double>(value_) == 0.0;
    }

    std::string str() const {
        if (is_exact()) return std::get<Rational>(value_).get_str();
        return std::to_string(std::get<double>(value_));
    }

private:
    template <class F>
    static Scalar apply(const Scalar& a, const Scalar& b, F&& f) {
        if (a.backend() != b.backend())
            throw MixedBackend("Scalar: mixed exact/float arithmetic");
        if (a.is_exact()) return Scalar(Rational(f(std::get<Rational>(a.value_), std::get<Rational>(b.value_))));
        return Scalar(f(std::get<double>(a.value_), std::get<double>(b.value_)));
    }

    std::variant<Rational, double> value_;
};

/// Parses per the CLI convention: "p/q" and integers are exact, decimals are
/// exact too unless force_float is set.
inline Scalar parse_scalar(const std::string& text, bool force_float) {
    if (force_float) return Scalar(std::stod(text));
    return Scalar(parse_rational(text));
}

} // namespace sqwit
