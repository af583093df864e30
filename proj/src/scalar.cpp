#include "congmon/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace congmon {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// x^e mod p by square-and-multiply; p < 2^31 so products fit in 64 bits.
std::uint32_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint32_t p) {
    std::uint64_t acc = 1 % p;
    x %= p;
    while (e) {
        if (e & 1) acc = acc * x % p;
        x = x * x % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

} // namespace

FieldTag FieldTag::prime_field(std::uint32_t p) {
    require(p < (1u << 31) && is_prime_u32(p), "F_p modulus must be prime and < 2^31");
    return {FieldKind::FP, p};
}

std::string FieldTag::name() const {
    switch (kind) {
        case FieldKind::Q: return "q";
        case FieldKind::QI: return "qi";
        case FieldKind::FP: return "fp:" + std::to_string(p);
    }
    return "?";
}

FieldTag FieldTag::from_name(const std::string& s) {
    if (s == "q") return rationals();
    if (s == "qi") return gaussian_rationals();
    if (s.rfind("fp:", 0) == 0) {
        const std::string num = s.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad field name: " + s);
        unsigned long p = std::strtoul(num.c_str(), nullptr, 10);
        if (p >= (1ul << 31) || !is_prime_u32(static_cast<std::uint32_t>(p)))
            throw parse_error("field modulus must be prime and < 2^31: " + s);
        return prime_field(static_cast<std::uint32_t>(p));
    }
    throw parse_error("unknown field name: " + s);
}

Scalar Scalar::one(const FieldTag& tag) {
    Scalar s(tag);
    if (tag.kind == FieldKind::FP)
        s.r_ = 1 % tag.p;
    else
        s.re_ = 1;
    return s;
}

Scalar Scalar::integer(long v, const FieldTag& tag) {
    Scalar s(tag);
    if (tag.kind == FieldKind::FP) {
        long m = v % static_cast<long>(tag.p);
        if (m < 0) m += tag.p;
        s.r_ = static_cast<std::uint32_t>(m);
    } else {
        s.re_ = v;
    }
    return s;
}

Scalar Scalar::rational(const mpq_class& v, const FieldTag& tag) {
    require(tag.kind != FieldKind::FP, "rational payload needs Q or QI field");
    Scalar s(tag);
    s.re_ = v;
    s.re_.canonicalize();
    return s;
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
    Scalar s(FieldTag::gaussian_rationals());
    s.re_ = re;
    s.im_ = im;
    s.re_.canonicalize();
    s.im_.canonicalize();
    return s;
}

Scalar Scalar::i(const FieldTag& tag) {
    if (tag.kind == FieldKind::QI) return gaussian(0, 1);
    if (tag.kind == FieldKind::FP && tag.p % 4 == 1) {
        // A quadratic nonresidue g gives i = g^((p-1)/4).
        for (std::uint32_t g = 2;; ++g) {
            if (pow_mod(g, (tag.p - 1) / 2, tag.p) == tag.p - 1)
                return residue(pow_mod(g, (tag.p - 1) / 4, tag.p), tag.p);
        }
    }
    throw precondition_error("field has no designated square root of -1: " + tag.name());
}

Scalar Scalar::residue(std::uint64_t v, std::uint32_t p) {
    Scalar s(FieldTag::prime_field(p));
    s.r_ = static_cast<std::uint32_t>(v % p);
    return s;
}

bool Scalar::is_zero() const {
    if (tag_.kind == FieldKind::FP) return r_ == 0;
    return re_ == 0 && im_ == 0;
}

bool Scalar::is_one() const {
    if (tag_.kind == FieldKind::FP) return r_ == 1 % tag_.p;
    return re_ == 1 && im_ == 0;
}

void Scalar::check_same(const Scalar& o) const {
    require(tag_ == o.tag_, "field mismatch: " + tag_.name() + " vs " + o.tag_.name());
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    if (tag_.kind == FieldKind::FP) return r_ == o.r_;
    return re_ == o.re_ && im_ == o.im_;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(tag_);
    if (tag_.kind == FieldKind::FP) {
        s.r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % tag_.p);
    } else {
        s.re_ = re_ + o.re_;
        s.im_ = im_ + o.im_;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar s(tag_);
    if (tag_.kind == FieldKind::FP) {
        s.r_ = r_ == 0 ? 0 : tag_.p - r_;
    } else {
        s.re_ = -re_;
        s.im_ = -im_;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(tag_);
    if (tag_.kind == FieldKind::FP) {
        s.r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % tag_.p);
    } else {
        s.re_ = re_ * o.re_ - im_ * o.im_;
        s.im_ = re_ * o.im_ + im_ * o.re_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    require(!is_zero(), "division by zero");
    Scalar s(tag_);
    if (tag_.kind == FieldKind::FP) {
        s.r_ = pow_mod(r_, tag_.p - 2, tag_.p); // Fermat
    } else if (tag_.kind == FieldKind::Q || im_ == 0) {
        s.re_ = 1 / re_;
    } else {
        const mpq_class norm = re_ * re_ + im_ * im_;
        s.re_ = re_ / norm;
        s.im_ = -im_ / norm;
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::conj() const {
    Scalar s = *this;
    s.im_ = -s.im_;
    return s;
}

const mpq_class& Scalar::re() const {
    require(tag_.kind != FieldKind::FP, "re() on F_p scalar");
    return re_;
}

const mpq_class& Scalar::im() const {
    require(tag_.kind != FieldKind::FP, "im() on F_p scalar");
    return im_;
}

std::uint32_t Scalar::fp_value() const {
    require(tag_.kind == FieldKind::FP, "fp_value() on non-F_p scalar");
    return r_;
}

namespace {

std::string rat_str(const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

// RAT = ["-"] digits ["/" digits]; consumes from pos, returns the fraction.
mpq_class parse_rat(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    std::size_t d0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d0) throw parse_error("expected digits in scalar '" + s + "'");
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t d1 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == d1) throw parse_error("expected denominator in scalar '" + s + "'");
    }
    mpq_class q(s.substr(start, pos - start));
    if (q.get_den() == 0) throw parse_error("zero denominator in scalar '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace

std::string Scalar::str() const {
    if (tag_.kind == FieldKind::FP) return std::to_string(r_);
    if (im_ == 0) return rat_str(re_);
    if (re_ == 0) return rat_str(im_) + "i";
    return rat_str(re_) + "+" + rat_str(im_) + "i";
}

Scalar Scalar::parse(const std::string& s, const FieldTag& tag) {
    if (s.empty()) throw parse_error("empty scalar");
    if (tag.kind == FieldKind::FP) {
        if (s.find_first_not_of("0123456789-") != std::string::npos)
            throw parse_error("bad F_p entry '" + s + "'");
        long v = std::strtol(s.c_str(), nullptr, 10);
        return integer(v, tag);
    }
    std::size_t pos = 0;
    mpq_class first = parse_rat(s, pos);
    if (pos == s.size()) return rational(first, tag);
    if (s[pos] == 'i' && pos + 1 == s.size()) {
        require(tag.kind == FieldKind::QI, "imaginary entry in a rational-field matrix");
        return gaussian(0, first);
    }
    // RAT "+" RAT "i" (canonical; the second RAT may carry its own sign) or
    // the human form RAT "-" RAT "i", where the '-' is read as that sign.
    if (s[pos] == '+')
        ++pos;
    else if (s[pos] != '-')
        throw parse_error("bad scalar '" + s + "'");
    mpq_class second = parse_rat(s, pos);
    if (pos + 1 != s.size() || s[pos] != 'i') throw parse_error("bad scalar '" + s + "'");
    require(tag.kind == FieldKind::QI, "imaginary entry in a rational-field matrix");
    return gaussian(first, second);
}

} // namespace congmon
