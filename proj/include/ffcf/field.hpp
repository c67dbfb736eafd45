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

#ifndef FFCF_FIELD_HPP
#define FFCF_FIELD_HPP

#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffcf/error.hpp"

namespace ffcf {

class FieldCtx;
class Fq;

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/**
 * The coefficient field F_q with q = p^e, p an odd prime.
 *
 * Elements are stored in a packed encoding: the residue itself for e = 1,
 * and c_0 + c_1*p + ... + c_{e-1}*p^{e-1} for an extension element written
 * in the basis 1, t, ..., t^{e-1} modulo the (monic, irreducible) modulus.
 * The packed value doubles as the canonical total order on elements, which
 * fixes the branch of square roots.
 *
 * Contexts are immutable and shared; all Fq/Poly values hold a plain
 * pointer to their context, which must outlive them.
 */
class FieldCtx {
   public:
    /// Builds F_p (e = 1, no modulus) or F_{p^e} (modulus required, monic
    /// irreducible of degree e over F_p, coefficients ascending).
    static FieldCtxPtr make(uint32_t p, uint32_t e = 1,
                            const std::vector<uint32_t>& modulus = {});

    uint32_t p() const noexcept { return p_; }
    uint32_t e() const noexcept { return e_; }
    uint64_t q() const noexcept { return q_; }
    const std::vector<uint32_t>& modulus() const noexcept { return mod_; }

    // Packed-value arithmetic.
    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t inv(uint64_t a) const;  // throws division_by_zero on 0
    uint64_t pow(uint64_t a, uint64_t n) const;

    /// Canonical square root: the root with the smaller packed value, or
    /// nullopt for a non-square. Total on all inputs.
    std::optional<uint64_t> sqrt(uint64_t a) const;

    bool is_square(uint64_t a) const;

    Fq elem(uint64_t packed) const;
    /// Embeds an integer scalar through F_p (reduces mod p, signed ok).
    Fq scalar(int64_t n) const;
    Fq zero() const;
    Fq one() const;

   private:
    FieldCtx(uint32_t p, uint32_t e, std::vector<uint32_t> mod, uint64_t q)
        : p_(p), e_(e), q_(q), mod_(std::move(mod)) {}

    void decode(uint64_t v, uint32_t* digits) const;
    uint64_t encode(const uint32_t* digits) const;

    uint32_t p_;
    uint32_t e_;
    uint64_t q_;
    std::vector<uint32_t> mod_;  // size e_+1 when e_ > 1, else empty
};

/// Element of F_q; a packed value plus its context.
class Fq {
   public:
    Fq() = default;  // null element, usable only as a placeholder
    Fq(uint64_t v, const FieldCtx* F) : v_(v), F_(F) {}

    uint64_t value() const noexcept { return v_; }
    const FieldCtx* ctx() const noexcept { return F_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    Fq operator-() const { return Fq(F_->neg(v_), F_); }
    Fq inverse() const { return Fq(F_->inv(v_), F_); }

    friend Fq operator+(Fq a, Fq b) {
        assert(a.F_ == b.F_);
        return Fq(a.F_->add(a.v_, b.v_), a.F_);
    }
    friend Fq operator-(Fq a, Fq b) {
        assert(a.F_ == b.F_);
        return Fq(a.F_->sub(a.v_, b.v_), a.F_);
    }
    friend Fq operator*(Fq a, Fq b) {
        assert(a.F_ == b.F_);
        return Fq(a.F_->mul(a.v_, b.v_), a.F_);
    }
    friend Fq operator/(Fq a, Fq b) {
        assert(a.F_ == b.F_);
        return Fq(a.F_->mul(a.v_, b.F_->inv(b.v_)), a.F_);
    }

    friend bool operator==(Fq a, Fq b) { return a.v_ == b.v_ && a.F_ == b.F_; }
    friend bool operator!=(Fq a, Fq b) { return !(a == b); }
    /// Canonical total order (packed value); used to fix sqrt branches.
    friend bool operator<(Fq a, Fq b) { return a.v_ < b.v_; }

   private:
    uint64_t v_ = 0;
    const FieldCtx* F_ = nullptr;
};

/// Canonical square root of x, or nullopt if x is a non-square.
std::optional<Fq> fq_sqrt(Fq x);

bool is_prime_u64(uint64_t n) noexcept;

}  // namespace ffcf

#endif  // FFCF_FIELD_HPP
