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

#ifndef FFCF_LAURENT_HPP
#define FFCF_LAURENT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffcf/poly.hpp"

namespace ffcf {

/// Precision sentinel: every coefficient is known (exact value).
inline constexpr long long kPrecExact = (1LL << 62);

/**
 * Truncated element of K^ = F_q((Y^-1)), written f = sum_{k >= v} c_k Y^{-k}.
 *
 * `prec` is the exclusive upper index up to which coefficients are known;
 * operations return the largest provable precision and never fabricate
 * coefficients. A window [v, prec) is stored in full; prec == kPrecExact
 * means the series is exact (all further coefficients are zero).
 *
 * A series with no known nonzero coefficient is "zero to precision"; the
 * exact zero is the one with infinite precision.
 */
class Laurent {
   public:
    Laurent() = default;

    /// Zero known up to (exclusive) index `prec`.
    static Laurent zero_to(const FieldCtx* F, long long prec);
    /// The exact zero series.
    static Laurent zero(const FieldCtx* F) { return zero_to(F, kPrecExact); }
    /// Exact embedding of a polynomial (v = -deg P).
    static Laurent from_poly(const Poly& P);
    static Laurent from_coeffs(const FieldCtx* F, long long v, std::vector<Fq> coeffs,
                               long long prec);
    /// Monomial c * Y^{-k}.
    static Laurent monomial(Fq c, long long k);

    const FieldCtx* ctx() const noexcept { return F_; }
    long long prec() const noexcept { return prec_; }
    bool is_exact() const noexcept { return prec_ == kPrecExact; }
    /// No nonzero coefficient is known (zero at least to prec).
    bool is_zero_to_prec() const noexcept { return c_.empty(); }
    bool is_exact_zero() const noexcept { return c_.empty() && is_exact(); }

    /// v_inf; nullopt encodes +infinity (exact zero). Throws
    /// InsufficientPrecision when only "zero to finite precision" is known.
    std::optional<long long> vinf() const;

    /// First stored index (valid when not zero-to-prec).
    long long lead_index() const {
        assert(!c_.empty());
        return v_;
    }
    Fq lead_coeff() const {
        assert(!c_.empty());
        return c_.front();
    }

    /// Coefficient at index k; requires k < prec.
    Fq coeff(long long k) const;
    bool knows(long long k) const noexcept { return k < prec_; }
    /// One past the last stored index (coefficients beyond are zero when
    /// the series is exact).
    long long end_index() const noexcept { return v_ + (long long)c_.size(); }

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator*(Fq s) const;

    /// Restricts the known window to indices < p.
    Laurent truncated(long long p) const;

    std::string str() const;

   private:
    void normalize();

    const FieldCtx* F_ = nullptr;
    long long v_ = 0;       // index of first stored coefficient
    std::vector<Fq> c_;     // coefficients of Y^{-(v_+i)}
    long long prec_ = kPrecExact;
};

/// v_inf(f); nullopt is +infinity. Total on exact series; throws
/// InsufficientPrecision when f is only zero-to-finite-precision.
std::optional<long long> lau_vinf(const Laurent& f);

/// Multiplicative inverse. `want` bounds the coefficient count when the
/// input is exact; inexact inputs yield the largest provable precision.
/// Throws ZeroDivisor when no nonzero coefficient is known.
Laurent lau_inv(const Laurent& f, long long want = 64);

/// Canonical square root: the branch whose leading coefficient is the
/// canonical fq_sqrt of the input's leading coefficient. Throws
/// OddValuation / NonSquareLeadingCoeff.
Laurent lau_sqrt(const Laurent& f, long long want = 64);

struct IntFrac {
    Poly integral;
    Laurent fractional;
};

/// Splits f = [f] + {f} with [f] in R and v_inf({f}) >= 1.
/// Requires prec >= 1 (InsufficientPrecision).
IntFrac lau_int_frac(const Laurent& f);

/// True when a and b agree on every index both know.
bool lau_agree(const Laurent& a, const Laurent& b);

}  // namespace ffcf

#endif  // FFCF_LAURENT_HPP
