#pragma once

#include "sqwit/rational.hpp"

namespace sqwit {

/// First-order jet a0 + a1*eps (eps^2 = 0). Used to evaluate weights at
/// removable singularities: perturb the offending parameter, track the first
/// order, and take the ratio of the two linear terms at the end.
template <class T>
struct Jet {
    T a0, a1;

    Jet() : a0(0), a1(0) {}
    Jet(T c) : a0(std::move(c)), a1(0) {}
    Jet(T c0, T c1) : a0(std::move(c0)), a1(std::move(c1)) {}

    friend Jet operator+(const Jet& x, const Jet& y) { return {T(x.a0 + y.a0), T(x.a1 + y.a1)}; }
    friend Jet operator-(const Jet& x, const Jet& y) { return {T(x.a0 - y.a0), T(x.a1 - y.a1)}; }
    friend Jet operator-(const Jet& x) { return {T(-x.a0), T(-x.a1)}; }
    friend Jet operator*(const Jet& x, const Jet& y) {
        return {T(x.a0 * y.a0), T(x.a0 * y.a1 + x.a1 * y.a0)};
    }
    friend Jet operator/(const Jet& x, const Jet& y) {
        if (y.a0 == T(0)) throw PoleError("jet: division by an order-eps quantity");
        T inv0 = T(T(1) / y.a0);
        return {T(x.a0 * inv0), T((x.a1 * y.a0 - x.a0 * y.a1) * inv0 * inv0)};
    }
    Jet& operator+=(const Jet& y) { return *this = *this + y; }
    Jet& operator-=(const Jet& y) { return *this = *this - y; }
    Jet& operator*=(const Jet& y) { return *this = *this * y; }
    Jet& operator/=(const Jet& y) { return *this = *this / y; }

    friend bool operator==(const Jet& x, const Jet& y) { return x.a0 == y.a0 && x.a1 == y.a1; }
    friend bool operator!=(const Jet& x, const Jet& y) { return !(x == y); }
};

} // namespace sqwit
