#pragma once

// Hamilton quaternions over an exact commutative scalar ring.

#include "cyclo.hpp"
#include "errors.hpp"

#include <string>

namespace joq {

/**
 * Quaternion r + i*I + j*J + k*K with I^2 = J^2 = K^2 = -1, IJ = K = -JI.
 * The scalar type S must be a commutative ring with exact ==; multiplication
 * of quaternions themselves does not commute.
 */
template <class S>
struct Quaternion {
    S r{}, i{}, j{}, k{};

    Quaternion operator-() const { return {-r, -i, -j, -k}; }

    Quaternion operator+(const Quaternion& o) const {
        return {r + o.r, i + o.i, j + o.j, k + o.k};
    }

    Quaternion operator-(const Quaternion& o) const {
        return {r - o.r, i - o.i, j - o.j, k - o.k};
    }

    Quaternion operator*(const Quaternion& o) const {
        return {r * o.r - i * o.i - j * o.j - k * o.k,
                r * o.i + i * o.r + j * o.k - k * o.j,
                r * o.j - i * o.k + j * o.r + k * o.i,
                r * o.k + i * o.j - j * o.i + k * o.r};
    }

    bool operator==(const Quaternion& o) const {
        return r == o.r && i == o.i && j == o.j && k == o.k;
    }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    /// Conjugate: negates the three vector components.
    Quaternion conj() const { return {r, -i, -j, -k}; }

    bool is_zero() const { return r.is_zero() && i.is_zero() && j.is_zero() && k.is_zero(); }

    template <class F>
    auto map(F f) const -> Quaternion<decltype(f(r))> {
        return {f(r), f(i), f(j), f(k)};
    }
};

/**
 * Norm q * conj(q). The vector components of the product must cancel; a
 * survivor means quaternion arithmetic itself is broken.
 */
template <class S>
S quat_norm(const Quaternion<S>& q) {
    Quaternion<S> p = q * q.conj();
    if (!p.i.is_zero() || !p.j.is_zero() || !p.k.is_zero())
        throw internal_error("vector part of q * conj(q) did not vanish");
    return p.r;
}

template <class S>
Quaternion<S> scalar_mul(const S& s, const Quaternion<S>& q) {
    return {s * q.r, s * q.i, s * q.j, s * q.k};
}

template <class S>
Quaternion<S> scalar_mul(const Quaternion<S>& q, const S& s) {
    return {q.r * s, q.i * s, q.j * s, q.k * s};
}

inline std::string component_text(const Rational& s) { return s.to_string(); }

inline std::string component_text(const Cyclo& s) {
    return s.is_rational() ? s.to_string() : "(" + s.to_string() + ")";
}

/// Canonical text "r + i*I + j*J + k*K". Zero components are omitted (an
/// all-zero value prints "0") and negative components fold their sign.
template <class S>
std::string to_string(const Quaternion<S>& q) {
    std::string out;
    if (!q.r.is_zero() || q.is_zero()) out = component_text(q.r);
    const S* comps[] = {&q.i, &q.j, &q.k};
    const char* units[] = {"I", "J", "K"};
    for (int u = 0; u < 3; ++u) {
        if (comps[u]->is_zero()) continue;
        std::string t = component_text(*comps[u]) + "*" + units[u];
        if (out.empty())
            out = std::move(t);
        else if (t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

using RQuat = Quaternion<Rational>;
using CQuat = Quaternion<Cyclo>;

/// Embeds a rational quaternion into the cyclotomic ring.
inline CQuat to_cyclo(const RQuat& q) {
    return q.map([](const Rational& s) { return Cyclo(s); });
}

/**
 * Extracts the rational quaternion from one whose omega parts must have
 * cancelled. A surviving omega coefficient violates a proved identity, so it
 * reports as an internal error rather than a domain error.
 */
inline RQuat rationalize(const CQuat& q, const char* context) {
    auto take = [&](const Cyclo& s) {
        if (!s.is_rational())
            throw internal_error(std::string(context) + ": omega component survived: " + s.to_string());
        return s.coeff_one();
    };
    return q.map(take);
}

} // namespace joq
