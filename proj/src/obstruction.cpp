#include "z2skel/obstruction.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace z2skel {

namespace {

int weighted_degree(const std::vector<uint8_t>& exps) {
    int d = 0;
    for (size_t i = 0; i < exps.size(); ++i) d += (int)(i + 1) * exps[i];
    return d;
}

bool sym_monomial_less(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
    int da = weighted_degree(a), db = weighted_degree(b);
    if (da != db) return da < db;
    return a < b;
}

std::vector<std::vector<uint8_t>> canonicalize(std::vector<std::vector<uint8_t>> ms) {
    std::sort(ms.begin(), ms.end(), sym_monomial_less);
    std::vector<std::vector<uint8_t>> out;
    size_t i = 0;
    while (i < ms.size()) {
        size_t j = i;
        while (j < ms.size() && ms[j] == ms[i]) ++j;
        if ((j - i) & 1) out.push_back(ms[i]);
        i = j;
    }
    return out;
}

}  // namespace

SymmetricExpr SymmetricExpr::one(int arity) {
    return SymmetricExpr{arity, {std::vector<uint8_t>(arity, 0)}};
}

SymmetricExpr SymmetricExpr::sigma(int i, int arity) {
    if (i < 1 || i > arity) throw Error("sigma index out of range");
    std::vector<uint8_t> m(arity, 0);
    m[i - 1] = 1;
    return SymmetricExpr{arity, {m}};
}

int SymmetricExpr::degree() const {
    int d = -1;
    for (const auto& m : monomials) d = std::max(d, weighted_degree(m));
    return d;
}

std::string SymmetricExpr::str() const {
    if (monomials.empty()) return "0";
    std::string out;
    for (size_t t = 0; t < monomials.size(); ++t) {
        if (t) out += " + ";
        const auto& m = monomials[t];
        std::string part;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!part.empty()) part += "*";
            part += "s" + std::to_string(i + 1);
            if (m[i] > 1) part += "^" + std::to_string(m[i]);
        }
        out += part.empty() ? "1" : part;
    }
    return out;
}

SymmetricExpr SymmetricExpr::parse(const std::string& text, int arity) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    auto parse_int = [&]() -> long {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start) throw Error("f-expression: expected a number at position " +
                                      std::to_string(start));
        return std::stol(text.substr(start, pos - start));
    };
    // factor = sN [^E] | integer
    auto parse_factor = [&]() -> std::vector<std::vector<uint8_t>> {
        skip_ws();
        if (pos < text.size() && (text[pos] == 's' || text[pos] == 'S')) {
            ++pos;
            long i = parse_int();
            if (i < 1 || i > arity)
                throw Error("f-expression: s" + std::to_string(i) + " out of range for n=" +
                            std::to_string(arity));
            long e = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = parse_int();
                if (e < 0 || e > kMaxExponent) throw Error("f-expression: bad exponent");
            }
            if (e == 0) return {std::vector<uint8_t>(arity, 0)};
            std::vector<uint8_t> m(arity, 0);
            m[i - 1] = (uint8_t)e;
            return {m};
        }
        long c = parse_int();
        if (c % 2 == 0) return {};  // even coefficient vanishes
        return {std::vector<uint8_t>(arity, 0)};
    };
    auto parse_term = [&]() -> std::vector<std::vector<uint8_t>> {
        auto acc = parse_factor();
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                auto f = parse_factor();
                if (acc.empty() || f.empty()) {
                    acc.clear();
                    continue;
                }
                std::vector<uint8_t> prod(arity, 0);
                for (int i = 0; i < arity; ++i) {
                    int e = acc[0][i] + f[0][i];
                    if (e > kMaxExponent) throw Error("f-expression: exponent overflow");
                    prod[i] = (uint8_t)e;
                }
                acc = {prod};
            } else {
                break;
            }
        }
        return acc;
    };

    std::vector<std::vector<uint8_t>> all;
    while (true) {
        auto t = parse_term();
        for (auto& m : t) all.push_back(std::move(m));
        skip_ws();
        if (pos < text.size() && text[pos] == '+') {
            ++pos;
            continue;
        }
        break;
    }
    skip_ws();
    if (pos != text.size())
        throw Error("f-expression: unexpected character '" + std::string(1, text[pos]) +
                    "' at position " + std::to_string(pos));
    return SymmetricExpr{arity, canonicalize(std::move(all))};
}

GF2Poly elementary_symmetric(const std::vector<GF2Vector>& forms, int i) {
    int n = (int)forms.size();
    if (i < 0 || i > n) throw Error("elementary_symmetric: index out of range");
    int w = forms.empty() ? 0 : forms[0].width;
    // e[j] after processing t forms = sigma_j of those t forms
    std::vector<GF2Poly> e(i + 1, GF2Poly(w));
    e[0] = GF2Poly::one(w);
    for (int t = 0; t < n; ++t) {
        GF2Poly fp = GF2Poly::from_form(forms[t]);
        for (int j = std::min(i, t + 1); j >= 1; --j) e[j] += e[j - 1] * fp;
    }
    return e[i];
}

GF2Poly eval_symmetric(const SymmetricExpr& f, const std::vector<GF2Vector>& forms) {
    if ((int)forms.size() != f.arity)
        throw Error("eval_symmetric: arity " + std::to_string(f.arity) + " != " +
                    std::to_string(forms.size()) + " forms");
    int w = forms.empty() ? 0 : forms[0].width;
    // highest power of each s_i occurring
    std::vector<int> max_exp(f.arity, 0);
    for (const auto& m : f.monomials)
        for (int i = 0; i < f.arity; ++i) max_exp[i] = std::max<int>(max_exp[i], m[i]);

    std::vector<std::vector<GF2Poly>> powers(f.arity);
    for (int i = 0; i < f.arity; ++i) {
        if (max_exp[i] == 0) continue;
        GF2Poly base = elementary_symmetric(forms, i + 1);
        powers[i].push_back(GF2Poly::one(w));
        for (int e = 1; e <= max_exp[i]; ++e) powers[i].push_back(powers[i].back() * base);
    }
    GF2Poly out(w);
    for (const auto& m : f.monomials) {
        GF2Poly term = GF2Poly::one(w);
        for (int i = 0; i < f.arity; ++i)
            if (m[i]) term *= powers[i][m[i]];
        out += term;
    }
    return out;
}

GF2Fraction localization_sum(const ColoredSkeleton& s, const SymmetricExpr& f) {
    if (f.arity != s.n) throw Error("localization_sum: f arity must equal the valence");
    std::vector<std::pair<GF2Poly, std::vector<GF2Vector>>> terms;
    terms.reserve(s.vertex_count());
    // vertices sharing a color multiset share the numerator
    std::map<std::vector<uint32_t>, GF2Poly> cache;
    for (int p = 0; p < s.vertex_count(); ++p) {
        auto colors = s.star_colors(p);
        std::sort(colors.begin(), colors.end(), lex_less);
        std::vector<uint32_t> key;
        for (const auto& c : colors) key.push_back(c.bits);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, eval_symmetric(f, colors)).first;
        terms.emplace_back(it->second, colors);
    }
    return fraction_sum(terms, s.k);
}

std::vector<std::vector<uint8_t>> symmetric_monomials_up_to(int arity, int max_degree) {
    std::vector<std::vector<uint8_t>> out;
    std::vector<uint8_t> cur(arity, 0);
    // enumerate by remaining budget, variable by variable
    auto rec = [&](auto&& self, int var, int budget) -> void {
        if (var == arity) {
            out.push_back(cur);
            return;
        }
        int w = var + 1;  // weight of s_{var+1}
        for (int e = 0; e * w <= budget && e <= kMaxExponent; ++e) {
            cur[var] = (uint8_t)e;
            self(self, var + 1, budget - e * w);
        }
        cur[var] = 0;
    };
    rec(rec, 0, max_degree);
    std::sort(out.begin(), out.end(), sym_monomial_less);
    return out;
}

std::string RealizabilityVerdict::describe() const {
    switch (kind) {
        case RealizableK1:
            return "realizable (k=1, even vertex count)";
        case NotRealizableK1:
            return "not realizable (k=1, odd vertex count)";
        case Obstructed:
            return "obstructed: f = " + (witness ? witness->str() : std::string("?")) +
                   ", sum = " + (sum ? sum->str() : std::string("?"));
        case NoObstructionUpToDegree:
            return "no obstruction up to degree " + std::to_string(max_degree);
    }
    return "?";
}

RealizabilityVerdict realizability_check(const ColoredSkeleton& s, int max_degree) {
    if (max_degree < 0) max_degree = 2 * s.n;
    RealizabilityVerdict v;
    if (s.k == 1) {
        bool even = s.vertex_count() % 2 == 0;
        v.kind = even ? RealizabilityVerdict::RealizableK1 : RealizabilityVerdict::NotRealizableK1;
        v.sum = localization_sum(s, SymmetricExpr::one(s.n));
        return v;
    }
    for (const auto& m : symmetric_monomials_up_to(s.n, max_degree)) {
        SymmetricExpr f{s.n, {m}};
        GF2Fraction sum = localization_sum(s, f);
        if (!sum.is_polynomial()) {
            v.kind = RealizabilityVerdict::Obstructed;
            v.witness = f;
            v.sum = std::move(sum);
            return v;
        }
    }
    v.kind = RealizabilityVerdict::NoObstructionUpToDegree;
    v.max_degree = max_degree;
    return v;
}

}  // namespace z2skel
