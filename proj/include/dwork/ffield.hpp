#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace dwork {

// Nonzero elements are dlog indices in [0, Q-1); zero is kZero.
using FqElem = std::uint32_t;
inline constexpr FqElem kZero = 0xFFFFFFFFu;
inline constexpr std::uint64_t kFieldCap = 1ull << 26;

// Encodings write an element c_0 + c_1 x + ... as sum c_i p^i, so prime field
// constants encode as themselves.
class FieldTable {
public:
    std::uint32_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint32_t size() const { return q_; }
    std::uint32_t order() const { return q_ - 1; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::uint32_t generator() const { return exp_.size() > 1 ? exp_[1] : 1; }

    std::uint32_t to_enc(FqElem a) const { return a == kZero ? 0 : exp_[a]; }
    FqElem from_enc(std::uint32_t e) const { return log_[e]; }
    FqElem from_int(std::int64_t c) const;
    FqElem one() const { return 0; }

    FqElem mul(FqElem a, FqElem b) const {
        if (a == kZero || b == kZero) return kZero;
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<FqElem>(s >= order() ? s - order() : s);
    }
    FqElem inv(FqElem a) const;
    FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
    FqElem pow(FqElem a, std::int64_t e) const;
    FqElem add(FqElem a, FqElem b) const {
        if (a == kZero) return b;
        if (b == kZero) return a;
        std::uint32_t k = b >= a ? b - a : b + order() - a;
        FqElem z = zech_[k];
        return z == kZero ? kZero : mul(a, z);
    }
    FqElem neg(FqElem a) const { return a == kZero ? kZero : mul(a, minus_one_); }
    FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
    std::uint32_t add_enc(std::uint32_t a, std::uint32_t b) const;
    // Multiplicative order of a nonzero element.
    std::uint64_t elem_order(FqElem a) const;

    bool operator==(const FieldTable& o) const {
        return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_ && exp_ == o.exp_;
    }

private:
    friend FieldTable build_field(std::uint32_t p, std::uint32_t r);
    std::uint32_t p_ = 0, r_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<FqElem> log_;
    std::vector<FqElem> zech_;
    FqElem minus_one_ = 0;
};

FieldTable build_field(std::uint32_t p, std::uint32_t r);
// Memoized build_field.
std::shared_ptr<const FieldTable> field(std::uint32_t p, std::uint32_t r);

// zeta0^k for k = 0..n-1, zeta0 the least encoded element of exact order n.
std::vector<FqElem> nth_roots(const FieldTable& F, std::uint32_t n);

// Field homomorphism small -> big, realised on dlogs as t -> t * scale.
struct Embedding {
    std::uint64_t scale;
    FqElem operator()(FqElem x, const FieldTable& big) const;
};
Embedding make_embedding(const FieldTable& small, const FieldTable& big);
FqElem embed(FqElem x, const FieldTable& small, const FieldTable& big);

FqElem coset_root(const FieldTable& F, std::uint32_t n, FqElem zeta);

}  // namespace dwork
