#pragma once

#include <cstdint>
#include <iosfwd>

#include <Eigen/Core>

#include "hhint/errors.hpp"

namespace hhint {

bool is_prime(uint32_t n);

// Throws BadModulusError unless p is a prime in [2, 2^15).
void require_prime(uint32_t p);

// Element of a prime field F_p with the modulus carried at runtime.
//
// A default-constructed element, or one built from a bare integer, is
// "neutral": it has no modulus yet (mod() == 0) and behaves as an integer
// literal. Eigen materialises Scalar(0) and Scalar(1) internally, so neutral
// elements must combine transparently with modular ones: the first nonzero
// modulus met in an expression wins, and two distinct nonzero moduli throw
// MixedModulusError. Values are kept reduced to [0, p) once a modulus is
// attached.
class Fp {
  public:
    Fp() : val_(0), mod_(0) {}
    Fp(long long v) : val_(static_cast<int64_t>(v)), mod_(0) {}  // NOLINT: implicit for Eigen literals
    Fp(long long v, uint32_t p) {
        require_prime(p);
        mod_ = p;
        val_ = reduce(v, p);
    }

    uint32_t mod() const { return mod_; }
    // Canonical value: in [0, p) when modular; the raw literal when neutral.
    int64_t value() const { return val_; }

    bool is_zero() const { return val_ == 0; }

    // Same residue, with the other operand's modulus attached if ours is unset.
    Fp matched(uint32_t p) const {
        if (mod_ == p || p == 0) return *this;
        if (mod_ != 0) throw MixedModulusError(mod_, p);
        return Fp::raw(reduce(val_, p), p);
    }

    Fp operator-() const {
        if (mod_ == 0) return Fp(-val_);
        return Fp::raw(val_ == 0 ? 0 : mod_ - static_cast<uint32_t>(val_), mod_);
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        uint32_t p = joint_mod(a, b);
        if (p == 0) return Fp(a.val_ + b.val_);
        return Fp::raw(static_cast<uint32_t>((a.matched(p).val_ + b.matched(p).val_) % p), p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
    friend Fp operator*(const Fp& a, const Fp& b) {
        uint32_t p = joint_mod(a, b);
        if (p == 0) return Fp(a.val_ * b.val_);
        uint64_t prod = static_cast<uint64_t>(a.matched(p).val_) *
                        static_cast<uint64_t>(b.matched(p).val_);
        return Fp::raw(static_cast<uint32_t>(prod % p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        uint32_t p = joint_mod(a, b);
        if (p == 0) return a.val_ == b.val_;
        return a.matched(p).val_ == b.matched(p).val_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    // Multiplicative inverse by the extended Euclidean algorithm.
    Fp inverse() const {
        if (mod_ == 0 && (val_ == 1 || val_ == -1)) return *this;
        if (mod_ == 0 || val_ == 0) throw DivisionByZeroError();
        int64_t t = 0, new_t = 1;
        int64_t r = mod_, new_r = val_;
        while (new_r != 0) {
            int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        return Fp::raw(reduce(t, mod_), mod_);
    }

    Fp pow(uint64_t e) const {
        Fp acc = mod_ ? Fp::raw(1 % mod_, mod_) : Fp(1);
        Fp base = *this;
        for (; e != 0; e >>= 1) {
            if (e & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    // Trusted constructor: v must already lie in [0, p); no primality check.
    static Fp raw(uint32_t v, uint32_t p) {
        Fp x;
        x.val_ = v;
        x.mod_ = p;
        return x;
    }

  private:
    static uint32_t reduce(int64_t v, uint32_t p) {
        int64_t r = v % static_cast<int64_t>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }
    static uint32_t joint_mod(const Fp& a, const Fp& b) {
        if (a.mod_ != 0 && b.mod_ != 0 && a.mod_ != b.mod_)
            throw MixedModulusError(a.mod_, b.mod_);
        return a.mod_ != 0 ? a.mod_ : b.mod_;
    }

    int64_t val_;
    uint32_t mod_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

inline Fp abs(const Fp& x) { return x; }

using FMatrix = Eigen::Matrix<Fp, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using FVector = Eigen::Matrix<Fp, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

// Factories tagging every entry (zeros included) with the modulus, so the
// modulus of a matrix can always be recovered from any entry.
FMatrix fzeros(Index rows, Index cols, uint32_t p);
FMatrix fidentity(Index n, uint32_t p);
FVector fzvec(Index n, uint32_t p);
FVector funit(Index n, Index i, uint32_t p);

// First modulus found among the entries; 0 if all entries are neutral.
uint32_t modulus_of(const FMatrix& m);
uint32_t modulus_of(const FVector& v);

// Test/readability helper: build from integer literals over F_p.
FMatrix fmat(uint32_t p, std::initializer_list<std::initializer_list<long long>> rows);
FVector fvec(uint32_t p, std::initializer_list<long long> entries);

bool is_zero(const FMatrix& m);
bool is_zero(const FVector& v);

}  // namespace hhint

namespace Eigen {

template <>
struct NumTraits<hhint::Fp> {
    typedef hhint::Fp Real;
    typedef hhint::Fp NonInteger;
    typedef hhint::Fp Nested;
    typedef hhint::Fp Literal;

    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8,
    };

    static inline hhint::Fp epsilon() { return hhint::Fp(0); }
    static inline hhint::Fp dummy_precision() { return hhint::Fp(0); }
    static inline int digits10() { return 5; }
};

}  // namespace Eigen
