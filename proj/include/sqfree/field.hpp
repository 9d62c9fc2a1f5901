#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "sqfree/errors.hpp"

namespace sqfree {

// Canonical element encoding. Prime fields store the residue; extension
// fields pack the base-p coefficient vector c0 + c1*p + c2*p^2 + ...
using Elem = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Arithmetic in GF(q) for a prime power q = p^e <= 2^16.
//
// Multiplication, inversion and powering go through discrete-log/antilog
// tables of size q built once at construction, so the inner loops of the
// matrix and search kernels are branch-light table lookups. Addition is
// digitwise mod p (a plain XOR when p = 2). Construction is deterministic:
// the modulus is the lexicographically smallest monic irreducible polynomial
// of degree e over F_p (coefficients compared low-degree-first), and xi is
// the smallest-encoded element generating the multiplicative group.
//
// Field objects are immutable after construction; every operation is const
// and safe to call concurrently.
class Field {
  public:
    static FieldPtr make(unsigned q);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned q() const { return q_; }

    // Coefficients of the defining irreducible polynomial, lowest degree
    // first, leading 1 included. Empty for prime fields.
    const std::vector<Elem>& modulus() const { return modulus_; }

    // Designated primitive element.
    Elem xi() const { return xi_; }

    Elem add(unsigned a, unsigned b) const {
        if (e_ == 1) return static_cast<Elem>((a + b) % p_);
        if (p_ == 2) return static_cast<Elem>(a ^ b);
        return add_digits(a, b);
    }

    Elem neg(unsigned a) const {
        if (e_ == 1) return static_cast<Elem>((p_ - a) % p_);
        if (p_ == 2) return static_cast<Elem>(a);
        return neg_digits(a);
    }

    Elem sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

    Elem mul(unsigned a, unsigned b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Elem inv(unsigned a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }

    Elem div(unsigned a, unsigned b) const { return mul(a, inv(b)); }

    // a^n with negative n routed through the inverse; 0^0 = 1.
    Elem pow(unsigned a, long long n) const;

    // Discrete log base xi of a nonzero element.
    unsigned log(unsigned a) const {
        if (a == 0) throw DivisionByZero("log of zero");
        return log_[a];
    }

    // xi^i for any i >= 0.
    Elem xi_pow(unsigned long long i) const { return exp_[i % (q_ - 1)]; }

    // Multiplicative order of a nonzero element.
    unsigned order(unsigned a) const;

    bool same_as(const Field& other) const { return q_ == other.q_; }

  private:
    Field() = default;

    Elem add_digits(unsigned a, unsigned b) const;
    Elem neg_digits(unsigned a) const;

    unsigned p_ = 0;
    unsigned e_ = 0;
    unsigned q_ = 0;
    std::vector<Elem> modulus_;
    Elem xi_ = 0;
    std::vector<Elem> exp_;  // size 2(q-1): xi^i for i in [0, 2q-3], wrap-free
    std::vector<Elem> log_;  // size q; log_[0] unused
};

// A single element tagged with its field, for code that wants checked
// operator syntax instead of raw-encoding calls on Field.
struct FieldElement {
    const Field* field = nullptr;
    Elem value = 0;

    FieldElement() = default;
    FieldElement(const Field& f, unsigned v) : field(&f), value(static_cast<Elem>(v)) {
        if (v >= f.q()) throw BadArgs("element encoding out of range");
    }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check(a, b);
        return {*a.field, a.field->add(a.value, b.value)};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        check(a, b);
        return {*a.field, a.field->sub(a.value, b.value)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check(a, b);
        return {*a.field, a.field->mul(a.value, b.value)};
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        check(a, b);
        return {*a.field, a.field->div(a.value, b.value)};
    }
    FieldElement operator-() const { return {*field, field->neg(value)}; }
    FieldElement inverse() const { return {*field, field->inv(value)}; }
    FieldElement pow(long long n) const { return {*field, field->pow(value, n)}; }

    friend bool operator==(FieldElement a, FieldElement b) {
        check(a, b);
        return a.value == b.value;
    }

  private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (!a.field || !b.field || !a.field->same_as(*b.field))
            throw SpecMismatch("operands belong to different fields");
    }
};

}  // namespace sqfree
