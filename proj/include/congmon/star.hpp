#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "congmon/matrix.hpp"

namespace congmon {

// One generator occurrence in the free algebra: family letter ('x', 'y',
// 'z'), 1-based index, and whether it is the transposed copy.
struct FreeLetter {
    char fam = 'x';
    unsigned idx = 1;
    bool t = false;

    auto operator<=>(const FreeLetter&) const = default;
};

using FreeWord = std::vector<FreeLetter>;

// Element of Q<x_1, x_1^t, ...>: sparse map word -> nonzero coefficient.
class FreePoly {
public:
    FreePoly() = default;

    static FreePoly zero() { return FreePoly(); }
    static FreePoly constant(const mpq_class& c);
    static FreePoly generator(char fam, unsigned idx, bool transposed = false);

    FreePoly operator+(const FreePoly& o) const;
    FreePoly operator-(const FreePoly& o) const;
    FreePoly operator*(const FreePoly& o) const;
    FreePoly operator-() const;
    FreePoly scaled(const mpq_class& c) const;
    bool operator==(const FreePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const FreePoly& o) const { return !(*this == o); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // The involution: reverse each word and flip every transpose flag.
    FreePoly transposed() const;

    const std::map<FreeWord, mpq_class>& terms() const { return terms_; }
    std::string str() const;

    // Replace every letter of the given family: fam_i -> repl[i-1],
    // fam_i^t -> repl[i-1] transposed. Indices beyond repl map to zero.
    FreePoly substitute(char fam, const std::vector<FreePoly>& repl) const;

private:
    void add_term(const FreeWord& w, const mpq_class& c);

    std::map<FreeWord, mpq_class> terms_;
};

// The two sign conventions for L: the appendix defines L(x) = x^* - x^t,
// the group-construction proofs use L(x) = x^t - x^*.
enum class StarConvention { appendix, body };
StarConvention star_convention_from_name(const std::string& s);
std::string star_convention_name(StarConvention c);

// x_l^* = sum_{r+s=l} x_s^t x_r^t - sum_{r+s=l} x_s^t x_r^*, memoized;
// fam renames the generator family (star('y', l) is the same polynomial
// in the y letters).
const FreePoly& star(char fam, unsigned l);

// L(fam_l) under the chosen convention.
FreePoly L_of(char fam, unsigned l, StarConvention c);

// z_m = x_m + y_m + sum_{a+b=m} x_a y_b.
FreePoly z_poly(unsigned m);

struct IdentityReport {
    bool equal = false;
    std::string detail; // word-level difference when unequal
};

// Theorem: sum_{a+b=n} z_a^t L(z_b) = x_n^* + y_n^* + sum y_a^t x_b^t
// + sum L(x_a) L(y_b); z_b^* is the formal star recursion with x -> z.
// The printed final term reads L(x_a) L(x_b); repaired_last_term selects
// the corrected mixed product.
IdentityReport verify_star_one(unsigned n, StarConvention c, bool repaired_last_term = true);

enum class StarLemma { rearrangement, star_two, star_three, star_four };
IdentityReport verify_lemma(StarLemma which, unsigned n,
                            StarConvention c = StarConvention::body);

// Evaluate with matrices substituted for the generators: vals['x'][i-1]
// is x_i, transposed letters evaluate to the transpose. All matrices must
// be square of equal size over one field.
Matrix matrix_substitute(const FreePoly& p, const std::map<char, std::vector<Matrix>>& vals,
                         std::size_t dim, const FieldTag& tag);

} // namespace congmon
