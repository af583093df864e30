#include "congmon/star.hpp"

#include <sstream>

#include "congmon/error.hpp"

namespace congmon {

void FreePoly::add_term(const FreeWord& w, const mpq_class& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

FreePoly FreePoly::constant(const mpq_class& c) {
    FreePoly p;
    p.add_term({}, c);
    return p;
}

FreePoly FreePoly::generator(char fam, unsigned idx, bool transposed) {
    require(idx >= 1, "generator index is 1-based");
    FreePoly p;
    p.add_term({FreeLetter{fam, idx, transposed}}, 1);
    return p;
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
    FreePoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
    FreePoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

FreePoly FreePoly::operator-() const {
    FreePoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

FreePoly FreePoly::scaled(const mpq_class& c) const {
    FreePoly r;
    if (c == 0) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

FreePoly FreePoly::operator*(const FreePoly& o) const {
    FreePoly r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            FreeWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

FreePoly FreePoly::transposed() const {
    FreePoly r;
    for (const auto& [w, c] : terms_) {
        FreeWord rev(w.rbegin(), w.rend());
        for (auto& l : rev) l.t = !l.t;
        r.add_term(rev, c);
    }
    return r;
}

FreePoly FreePoly::substitute(char fam, const std::vector<FreePoly>& repl) const {
    FreePoly r;
    for (const auto& [w, c] : terms_) {
        FreePoly prod = FreePoly::constant(c);
        for (const auto& l : w) {
            if (l.fam != fam) {
                prod = prod * FreePoly::generator(l.fam, l.idx, l.t);
            } else if (l.idx > repl.size()) {
                prod = FreePoly::zero();
                break;
            } else {
                prod = prod * (l.t ? repl[l.idx - 1].transposed() : repl[l.idx - 1]);
            }
        }
        r = r + prod;
    }
    return r;
}

std::string FreePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (const auto& l : w) os << "*" << l.fam << l.idx << (l.t ? "^t" : "");
    }
    return os.str();
}

StarConvention star_convention_from_name(const std::string& s) {
    if (s == "appendix") return StarConvention::appendix;
    if (s == "body") return StarConvention::body;
    throw parse_error("unknown star convention: " + s);
}

std::string star_convention_name(StarConvention c) {
    return c == StarConvention::appendix ? "appendix" : "body";
}

const FreePoly& star(char fam, unsigned l) {
    static std::map<std::pair<char, unsigned>, FreePoly> memo;
    auto key = std::make_pair(fam, l);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    require(l >= 1, "star index is 1-based");
    FreePoly s;
    for (unsigned r = 1; r < l; ++r) {
        unsigned ss = l - r;
        FreePoly xst = FreePoly::generator(fam, ss, true);
        s = s + xst * FreePoly::generator(fam, r, true) - xst * star(fam, r);
    }
    return memo.emplace(key, std::move(s)).first->second;
}

FreePoly L_of(char fam, unsigned l, StarConvention c) {
    FreePoly body = FreePoly::generator(fam, l, true) - star(fam, l);
    return c == StarConvention::body ? body : -body;
}

FreePoly z_poly(unsigned m) {
    require(m >= 1, "index is 1-based");
    FreePoly z = FreePoly::generator('x', m) + FreePoly::generator('y', m);
    for (unsigned a = 1; a < m; ++a)
        z = z + FreePoly::generator('x', a) * FreePoly::generator('y', m - a);
    return z;
}

namespace {

IdentityReport report(const FreePoly& lhs, const FreePoly& rhs) {
    IdentityReport r;
    r.equal = lhs == rhs;
    if (!r.equal) r.detail = "lhs - rhs = " + (lhs - rhs).str();
    return r;
}

// L applied under a substituted family (for the z's).
FreePoly L_subst(unsigned l, const std::vector<FreePoly>& zs, StarConvention c) {
    FreePoly body = zs[l - 1].transposed() - star('x', l).substitute('x', zs);
    return c == StarConvention::body ? body : -body;
}

} // namespace

IdentityReport verify_star_one(unsigned n, StarConvention c, bool repaired_last_term) {
    std::vector<FreePoly> zs;
    for (unsigned m = 1; m <= n; ++m) zs.push_back(z_poly(m));
    FreePoly lhs;
    for (unsigned a = 1; a < n; ++a)
        lhs = lhs + zs[a - 1].transposed() * L_subst(n - a, zs, c);
    FreePoly rhs = star('x', n) + star('y', n);
    for (unsigned a = 1; a < n; ++a) {
        unsigned b = n - a;
        rhs = rhs + FreePoly::generator('y', a, true) * FreePoly::generator('x', b, true);
        rhs = rhs + L_of('x', a, c) * L_of(repaired_last_term ? 'y' : 'x', b, c);
    }
    return report(lhs, rhs);
}

IdentityReport verify_lemma(StarLemma which, unsigned n, StarConvention c) {
    auto g = [](char f, unsigned i, bool t = false) { return FreePoly::generator(f, i, t); };
    switch (which) {
        case StarLemma::rearrangement: {
            FreePoly lhs, rhs;
            for (unsigned a = 1; a < n; ++a) {
                unsigned b = n - a;
                FreePoly inner;
                for (unsigned s = 1; s < b; ++s) inner = inner + g('y', s) * g('z', b - s);
                lhs = lhs + g('x', a) * inner;
                FreePoly outer;
                for (unsigned s = 1; s < a; ++s) outer = outer + g('x', s) * g('y', a - s);
                rhs = rhs + outer * g('z', b);
            }
            return report(lhs, rhs);
        }
        case StarLemma::star_two: {
            FreePoly lhs, rhs;
            for (unsigned a = 1; a < n; ++a) {
                unsigned b = n - a;
                lhs = lhs + L_of('x', a, c) * L_of('y', b, c);
                rhs = rhs + g('x', a, true) * L_of('y', b, c);
                FreePoly inner;
                for (unsigned s = 1; s < b; ++s)
                    inner = inner + L_of('x', s, c) * L_of('y', b - s, c);
                rhs = rhs - g('x', a, true) * inner;
            }
            return report(lhs, rhs);
        }
        case StarLemma::star_three: {
            FreePoly first, second;
            for (unsigned a = 1; a < n; ++a) {
                unsigned b = n - a;
                FreePoly ll;
                for (unsigned s = 1; s < b; ++s) ll = ll + L_of('x', s, c) * L_of('y', b - s, c);
                FreePoly yx;
                for (unsigned s = 1; s < a; ++s) yx = yx + g('y', s, true) * g('x', a - s, true);
                first = first + g('y', a, true) * ll - yx * L_of('y', b, c) + yx * ll;
                second = second + g('y', a, true) * star('x', b) - yx * L_of('x', b, c);
            }
            IdentityReport r1 = report(first, FreePoly::zero());
            if (!r1.equal) return r1;
            return report(second, FreePoly::zero());
        }
        case StarLemma::star_four: {
            FreePoly lhs, rhs;
            for (unsigned a = 1; a < n; ++a) {
                unsigned b = n - a;
                FreePoly yx;
                for (unsigned s = 1; s < a; ++s) yx = yx + g('y', s, true) * g('x', a - s, true);
                lhs = lhs + g('y', a, true) * L_of('x', b, c) + yx * L_of('x', b, c);
                rhs = rhs + g('y', a, true) * g('x', b, true);
            }
            return report(lhs, rhs);
        }
    }
    throw precondition_error("unknown lemma");
}

Matrix matrix_substitute(const FreePoly& p, const std::map<char, std::vector<Matrix>>& vals,
                         std::size_t dim, const FieldTag& tag) {
    Matrix acc(dim, dim, tag);
    for (const auto& [w, c] : p.terms()) {
        Matrix prod = Matrix::identity(dim, tag);
        bool dead = false;
        for (const auto& l : w) {
            auto it = vals.find(l.fam);
            if (it == vals.end() || l.idx > it->second.size()) {
                dead = true;
                break;
            }
            const Matrix& m = it->second[l.idx - 1];
            require(m.rows() == dim && m.cols() == dim && m.tag() == tag,
                    "substituted matrices must share size and field");
            prod = prod * (l.t ? m.transpose() : m);
        }
        if (dead) continue;
        acc = acc + prod.scaled(Scalar::rational(c, tag));
    }
    return acc;
}

} // namespace congmon
