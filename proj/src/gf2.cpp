#include "z2skel/gf2.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace z2skel {

GF2Vector::GF2Vector(uint32_t b, int w) : bits(b), width(w) {
    if (w < 0 || w > kMaxRank)
        throw Error("vector width " + std::to_string(w) + " out of range [0," +
                    std::to_string(kMaxRank) + "]");
    if (w < 32 && (b >> w) != 0)
        throw Error("vector bits exceed width " + std::to_string(w));
}

GF2Vector GF2Vector::unit(int i, int w) {
    if (i < 0 || i >= w) throw Error("unit vector index out of range");
    return GF2Vector(1u << i, w);
}

GF2Vector GF2Vector::parse(const std::string& s) {
    if (s.empty() || (int)s.size() > kMaxRank)
        throw Error("bad bitstring \"" + s + "\"");
    uint32_t b = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') b |= 1u << i;
        else if (s[i] != '0') throw Error("bad bitstring \"" + s + "\"");
    }
    return GF2Vector(b, (int)s.size());
}

int GF2Vector::popcount() const { return std::popcount(bits); }

GF2Vector GF2Vector::operator+(const GF2Vector& o) const {
    if (width != o.width) throw Error("dimension mismatch in vector addition");
    return GF2Vector(bits ^ o.bits, width);
}

std::string GF2Vector::str() const {
    std::string s(width, '0');
    for (int i = 0; i < width; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

bool dot(const GF2Vector& a, const GF2Vector& b) {
    if (a.width != b.width) throw Error("dimension mismatch in pairing");
    return std::popcount(a.bits & b.bits) & 1;
}

bool lex_less(const GF2Vector& a, const GF2Vector& b) {
    if (a.width != b.width) return a.width < b.width;
    uint32_t diff = a.bits ^ b.bits;
    if (diff == 0) return false;
    int j = std::countr_zero(diff);  // first differing position, r1 side
    return !a.get(j);
}

bool GF2Subspace::contains(const GF2Vector& v) const {
    if (v.width != width) throw Error("dimension mismatch in subspace membership");
    uint32_t x = v.bits;
    for (uint32_t row : rows) {
        int p = std::countr_zero(row);
        if ((x >> p) & 1u) x ^= row;
    }
    return x == 0;
}

std::vector<GF2Vector> GF2Subspace::basis() const {
    std::vector<GF2Vector> out;
    out.reserve(rows.size());
    for (uint32_t r : rows) out.emplace_back(r, width);
    return out;
}

std::vector<GF2Vector> GF2Subspace::elements() const {
    std::vector<GF2Vector> out;
    size_t r = rows.size();
    out.reserve(size_t{1} << r);
    for (uint32_t mask = 0; mask < (1u << r); ++mask) {
        uint32_t v = 0;
        for (size_t i = 0; i < r; ++i)
            if ((mask >> i) & 1u) v ^= rows[i];
        out.emplace_back(v, width);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

GF2Subspace span(const std::vector<GF2Vector>& vectors, int width) {
    for (const auto& v : vectors)
        if (v.width != width) throw Error("dimension mismatch in span");
    std::vector<uint32_t> rows;
    for (const auto& v : vectors) {
        uint32_t x = v.bits;
        for (uint32_t row : rows) {
            int p = std::countr_zero(row);
            if ((x >> p) & 1u) x ^= row;
        }
        if (x == 0) continue;
        int p = std::countr_zero(x);
        for (uint32_t& row : rows)
            if ((row >> p) & 1u) row ^= x;
        rows.push_back(x);
    }
    std::sort(rows.begin(), rows.end(),
              [](uint32_t a, uint32_t b) { return std::countr_zero(a) < std::countr_zero(b); });
    return GF2Subspace{width, std::move(rows)};
}

bool is_l_independent(const std::vector<GF2Vector>& vectors, int l) {
    if (l < 1) throw Error("independence level must be >= 1");
    int m = (int)vectors.size();
    if (l > m) return true;  // vacuous
    int w = vectors.empty() ? 0 : vectors[0].width;
    // every l-subset must have rank l
    std::vector<int> idx(l);
    for (int i = 0; i < l; ++i) idx[i] = i;
    while (true) {
        std::vector<GF2Vector> sub;
        sub.reserve(l);
        for (int i : idx) sub.push_back(vectors[i]);
        if (span(sub, w).rank() < l) return false;
        int i = l - 1;
        while (i >= 0 && idx[i] == m - l + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

GF2Vector quotient_rep(const GF2Vector& v, const GF2Vector& mod) {
    if (mod.is_zero()) throw Error("quotient_rep: zero modulus");
    GF2Vector w = v + mod;
    return lex_less(w, v) ? w : v;
}

GF2Subspace annihilator(const GF2Subspace& s) {
    int k = s.width;
    // pivot columns of s
    std::vector<int> pivots;
    for (uint32_t r : s.rows) pivots.push_back(std::countr_zero(r));
    std::vector<GF2Vector> gens;
    for (int c = 0; c < k; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
        // free column c: w has 1 at c and at pivot p_i when row_i has a 1 at c
        uint32_t w = 1u << c;
        for (size_t i = 0; i < s.rows.size(); ++i)
            if ((s.rows[i] >> c) & 1u) w |= 1u << pivots[i];
        gens.emplace_back(w, k);
    }
    return span(gens, k);
}

int Monomial::degree() const {
    int d = 0;
    for (int i = 0; i < width; ++i) d += exps[i];
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (width != o.width) throw Error("dimension mismatch in monomial product");
    Monomial r;
    r.width = width;
    for (int i = 0; i < width; ++i) {
        int e = exps[i] + o.exps[i];
        if (e > kMaxExponent) throw Error("exponent capacity exceeded (max 255)");
        r.exps[i] = (uint8_t)e;
    }
    return r;
}

std::string Monomial::str() const {
    std::string s;
    for (int i = 0; i < width; ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += ' ';
        s += "r" + std::to_string(i + 1);
        if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
}

bool monomial_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (int i = 0; i < a.width; ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    return false;
}

GF2Poly GF2Poly::one(int width) {
    Monomial m;
    m.width = width;
    return from_monomials({m}, width);
}

GF2Poly GF2Poly::variable(int i, int width) {
    if (i < 0 || i >= width) throw Error("variable index out of range");
    Monomial m;
    m.width = width;
    m.exps[i] = 1;
    return from_monomials({m}, width);
}

GF2Poly GF2Poly::from_form(const GF2Vector& form) {
    std::vector<Monomial> ms;
    for (int i = 0; i < form.width; ++i) {
        if (!form.get(i)) continue;
        Monomial m;
        m.width = form.width;
        m.exps[i] = 1;
        ms.push_back(m);
    }
    return from_monomials(std::move(ms), form.width);
}

GF2Poly GF2Poly::from_monomials(std::vector<Monomial> ms, int width) {
    for (auto& m : ms) {
        if (m.width != width) throw Error("dimension mismatch in polynomial terms");
    }
    std::sort(ms.begin(), ms.end(), monomial_greater);
    GF2Poly p(width);
    // cancel duplicate pairs (characteristic 2)
    size_t i = 0;
    while (i < ms.size()) {
        size_t j = i;
        while (j < ms.size() && ms[j] == ms[i]) ++j;
        if ((j - i) & 1) p.terms_.push_back(ms[i]);
        i = j;
    }
    return p;
}

bool GF2Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].degree() == 0;
}

int GF2Poly::degree() const { return terms_.empty() ? -1 : terms_.front().degree(); }

GF2Poly GF2Poly::operator+(const GF2Poly& o) const {
    if (width_ != o.width_) throw Error("dimension mismatch in polynomial sum");
    GF2Poly r(width_);
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(),
                                  o.terms_.end(), std::back_inserter(r.terms_),
                                  monomial_greater);
    return r;
}

GF2Poly GF2Poly::operator*(const GF2Poly& o) const {
    if (width_ != o.width_) throw Error("dimension mismatch in polynomial product");
    std::vector<Monomial> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prods.push_back(a * b);
    return from_monomials(std::move(prods), width_);
}

GF2Poly GF2Poly::substitute(int j, const GF2Poly& value) const {
    if (j < 0 || j >= width_) throw Error("substitute: variable index out of range");
    // group by exponent of r_{j+1}, reuse powers
    GF2Poly result(width_);
    std::map<int, GF2Poly> by_exp;
    for (const auto& m : terms_) {
        Monomial rest = m;
        int e = rest.exps[j];
        rest.exps[j] = 0;
        auto it = by_exp.find(e);
        if (it == by_exp.end()) it = by_exp.emplace(e, GF2Poly(width_)).first;
        it->second += from_monomials({rest}, width_);
    }
    GF2Poly power = one(width_);
    int cur = 0;
    for (auto& [e, coeff] : by_exp) {
        while (cur < e) {
            power *= value;
            ++cur;
        }
        result += coeff * power;
    }
    return result;
}

std::string GF2Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += " + ";
        s += terms_[i].str();
    }
    return s;
}

GF2Poly form_product(const std::vector<GF2Vector>& forms, int width) {
    GF2Poly p = GF2Poly::one(width);
    for (const auto& f : forms) {
        if (f.width != width) throw Error("dimension mismatch in form product");
        p *= GF2Poly::from_form(f);
    }
    return p;
}

FormDivision divide_by_form(const GF2Poly& p, const GF2Vector& form) {
    if (form.is_zero()) throw Error("divide_by_form: zero form");
    int w = p.width();
    if (form.width != w) throw Error("dimension mismatch in form division");
    int j = std::countr_zero(form.bits);  // pivot variable
    GF2Poly g = GF2Poly::from_form(GF2Vector(form.bits ^ (1u << j), w));

    // synthetic division of p = sum c_i * rj^i by (rj + g)
    std::map<int, GF2Poly> coeff;  // rj-degree -> coefficient polynomial
    for (const auto& m : p.terms()) {
        Monomial rest = m;
        int e = rest.exps[j];
        rest.exps[j] = 0;
        auto it = coeff.find(e);
        if (it == coeff.end()) it = coeff.emplace(e, GF2Poly(w)).first;
        it->second += GF2Poly::from_monomials({rest}, w);
    }
    int d = coeff.empty() ? 0 : coeff.rbegin()->first;
    auto at = [&](int e) -> GF2Poly {
        auto it = coeff.find(e);
        return it == coeff.end() ? GF2Poly(w) : it->second;
    };

    std::vector<GF2Poly> q(std::max(d, 1), GF2Poly(w));  // q[i] = coeff of rj^i
    GF2Poly rem(w);
    if (d >= 1) {
        q[d - 1] = at(d);
        for (int i = d - 2; i >= 0; --i) q[i] = at(i + 1) + q[i + 1] * g;
        rem = at(0) + q[0] * g;
    } else {
        rem = at(0);
    }

    FormDivision out;
    out.remainder = rem;
    if (!rem.is_zero()) return out;
    GF2Poly quotient(w);
    GF2Poly rj = GF2Poly::variable(j, w);
    GF2Poly power = GF2Poly::one(w);
    for (int i = 0; i < d; ++i) {
        quotient += q[i] * power;
        power *= rj;
    }
    out.quotient = std::move(quotient);
    return out;
}

std::string GF2Fraction::str() const {
    if (denominator.empty()) return numerator.str();
    std::string num = numerator.str();
    if (numerator.terms().size() > 1) num = "(" + num + ")";
    // factored denominator: distinct forms with multiplicities
    std::string den;
    size_t i = 0;
    int distinct = 0;
    while (i < denominator.size()) {
        size_t j = i;
        while (j < denominator.size() && denominator[j] == denominator[i]) ++j;
        GF2Poly f = GF2Poly::from_form(denominator[i]);
        std::string fs = f.str();
        if (f.terms().size() > 1) fs = "(" + fs + ")";
        if (j - i > 1) fs += "^" + std::to_string(j - i);
        if (!den.empty()) den += " ";
        den += fs;
        ++distinct;
        i = j;
    }
    if (distinct > 1) den = "(" + den + ")";
    return num + "/" + den;
}

GF2Fraction make_fraction(GF2Poly num, std::vector<GF2Vector> denom) {
    for (const auto& f : denom)
        if (f.is_zero()) throw Error("fraction denominator contains a zero form");
    if (num.is_zero()) return GF2Fraction{std::move(num), {}};
    std::sort(denom.begin(), denom.end(),
              [](const GF2Vector& a, const GF2Vector& b) { return a.bits < b.bits; });
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < denom.size();) {
            auto d = divide_by_form(num, denom[i]);
            if (d.quotient) {
                num = std::move(*d.quotient);
                denom.erase(denom.begin() + i);
                changed = true;
            } else {
                // skip remaining copies of the same form
                size_t j = i;
                while (j < denom.size() && denom[j] == denom[i]) ++j;
                i = j;
            }
        }
    }
    return GF2Fraction{std::move(num), std::move(denom)};
}

GF2Fraction fraction_sum(
    const std::vector<std::pair<GF2Poly, std::vector<GF2Vector>>>& terms, int width) {
    // common denominator: per-form maximum multiplicity
    std::vector<GF2Vector> forms;  // distinct, sorted
    std::vector<int> common;
    auto count_of = [&](const std::vector<GF2Vector>& d, const GF2Vector& f) {
        int c = 0;
        for (const auto& x : d)
            if (x == f) ++c;
        return c;
    };
    for (const auto& [p, d] : terms) {
        if (p.width() != width) throw Error("dimension mismatch in fraction sum");
        for (const auto& f : d) {
            if (f.is_zero()) throw Error("fraction denominator contains a zero form");
            if (f.width != width) throw Error("dimension mismatch in fraction sum");
            bool seen = false;
            for (const auto& g : forms)
                if (g == f) seen = true;
            if (!seen) {
                forms.push_back(f);
                common.push_back(0);
            }
        }
    }
    std::vector<size_t> order(forms.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return forms[a].bits < forms[b].bits; });
    {
        std::vector<GF2Vector> f2;
        for (size_t i : order) f2.push_back(forms[i]);
        forms = std::move(f2);
    }
    for (size_t i = 0; i < forms.size(); ++i)
        for (const auto& [p, d] : terms) common[i] = std::max(common[i], count_of(d, forms[i]));

    GF2Poly numerator(width);
    for (const auto& [p, d] : terms) {
        std::vector<GF2Vector> multiplier;
        for (size_t i = 0; i < forms.size(); ++i) {
            int extra = common[i] - count_of(d, forms[i]);
            for (int c = 0; c < extra; ++c) multiplier.push_back(forms[i]);
        }
        numerator += p * form_product(multiplier, width);
    }
    std::vector<GF2Vector> denom;
    for (size_t i = 0; i < forms.size(); ++i)
        for (int c = 0; c < common[i]; ++c) denom.push_back(forms[i]);
    return make_fraction(std::move(numerator), std::move(denom));
}

}  // namespace z2skel
