/*
   Copyright 2026 the ffcf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFCF_POLY_HPP
#define FFCF_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffcf/field.hpp"

namespace ffcf {

/**
 * Element of R = F_q[Y], dense ascending coefficients, always trimmed.
 *
 * The zero polynomial has an empty coefficient vector; its degree is the
 * distinguished -infinity (degree() returns nullopt), so that
 * v_inf(P) = -deg P extends to v_inf(0) = +infinity by convention.
 */
class Poly {
   public:
    Poly() = default;
    explicit Poly(const FieldCtx* F) : F_(F) {}
    Poly(const FieldCtx* F, std::vector<Fq> coeffs) : F_(F), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const FieldCtx* F) { return Poly(F); }
    static Poly constant(Fq a);
    static Poly one(const FieldCtx* F) { return constant(F->one()); }
    /// The variable Y.
    static Poly y(const FieldCtx* F);
    /// Builds from packed coefficient values, ascending degree.
    static Poly from_values(const FieldCtx* F, const std::vector<uint64_t>& vals);

    const FieldCtx* ctx() const noexcept { return F_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    /// Degree; nullopt encodes deg(0) = -infinity.
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return int(c_.size()) - 1;
    }
    /// Degree of a nonzero polynomial.
    int deg() const {
        assert(!c_.empty());
        return int(c_.size()) - 1;
    }

    Fq lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    Fq coeff(int i) const {
        if (i < 0 || size_t(i) >= c_.size()) return Fq(0, F_);
        return c_[size_t(i)];
    }
    const std::vector<Fq>& coeffs() const noexcept { return c_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(Fq s) const;

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly monic() const;
    Poly derivative() const;
    Poly shifted(int k) const;  // multiply by Y^k, k >= 0

    /// Deterministic total order (degree, then coefficients from the top).
    static int compare(const Poly& a, const Poly& b);
    friend bool operator<(const Poly& a, const Poly& b) { return compare(a, b) < 0; }

    std::string str() const;

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const FieldCtx* F_ = nullptr;
    std::vector<Fq> c_;
};

struct DivModResult {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws DivisionByZero.
DivModResult poly_divmod(const Poly& a, const Poly& b);

/// Exact division; throws InvalidArgument if the remainder is nonzero.
Poly poly_exact_div(const Poly& a, const Poly& b);

/// Monic gcd. Throws BothZero when both inputs vanish.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Rabin irreducibility test over F_q. Requires deg P >= 1 (ConstantInput).
bool poly_is_irreducible(const Poly& P);

struct SquarefreeSplit {
    Poly s;   // monic squarefree
    Poly m;   // monic
    Fq unit;  // u with D = u * s * m^2
};

/// Splits D = u * S * m^2 with S monic squarefree, m monic, u a unit.
/// Throws ZeroInput on D = 0.
SquarefreeSplit poly_squarefree_split(const Poly& D);

/// Parses the comma-separated ascending coefficient literal, e.g. "1,0,1".
Poly parse_poly(const FieldCtx* F, const std::string& text);

}  // namespace ffcf

#endif  // FFCF_POLY_HPP
