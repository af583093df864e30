#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "congmon/error.hpp"

namespace congmon {

// The three exact coefficient fields. The field is a runtime tag, not a
// template parameter: mixed-field arithmetic is an error, never a coercion.
enum class FieldKind { Q, QI, FP };

struct FieldTag {
    FieldKind kind = FieldKind::Q;
    std::uint32_t p = 0; // modulus, FP only

    bool operator==(const FieldTag&) const = default;

    static FieldTag rationals() { return {FieldKind::Q, 0}; }
    static FieldTag gaussian_rationals() { return {FieldKind::QI, 0}; }
    static FieldTag prime_field(std::uint32_t p);

    bool is_char_two() const { return kind == FieldKind::FP && p == 2; }
    std::string name() const; // "q" | "qi" | "fp:<p>"
    static FieldTag from_name(const std::string& s);
};

// One element of the tagged field. Rationals are kept in lowest terms with
// positive denominator (mpq_class canonicalizes); F_p residues live in [0, p).
class Scalar {
public:
    Scalar() = default; // 0 over Q
    explicit Scalar(const FieldTag& tag) : tag_(tag) {}

    static Scalar zero(const FieldTag& tag) { return Scalar(tag); }
    static Scalar one(const FieldTag& tag);
    static Scalar integer(long v, const FieldTag& tag);
    static Scalar rational(const mpq_class& v, const FieldTag& tag);
    static Scalar gaussian(const mpq_class& re, const mpq_class& im);
    static Scalar i(const FieldTag& tag); // square root of -1; QI or FP with p = 1 mod 4
    static Scalar residue(std::uint64_t v, std::uint32_t p);

    const FieldTag& tag() const { return tag_; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws precondition_error on 0
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar conj() const; // identity on Q and FP

    // Q/QI accessors (precondition: matching kind).
    const mpq_class& re() const;
    const mpq_class& im() const;
    std::uint32_t fp_value() const;

    // Canonical text form: lowest terms, no "+0i", no "1/1"; Gaussian
    // entries follow the grammar RAT | RAT "+" RAT "i" | RAT "i".
    std::string str() const;
    static Scalar parse(const std::string& s, const FieldTag& tag);

private:
    void check_same(const Scalar& o) const;

    FieldTag tag_{};
    mpq_class re_{0}, im_{0}; // Q / QI payload
    std::uint32_t r_ = 0;     // FP payload
};

} // namespace congmon
