#include "poly.hpp"

#include <algorithm>

namespace psell {

std::string VarLayout::var_name(int v) const {
    if (v < 0 || v >= vars()) throw Error("variable index out of range");
    if (v < n) return "z" + std::to_string(v + 1);
    if (v < 2 * n) return "x" + std::to_string(v - n + 1);
    return v == w() ? "w" : "t";
}

int VarLayout::var_index(const std::string& name) const {
    if (name == "w") return w();
    if (name == "t") return tau();
    if (name.size() >= 2 && (name[0] == 'z' || name[0] == 'x')) {
        int k = 0;
        for (std::size_t p = 1; p < name.size(); ++p) {
            if (name[p] < '0' || name[p] > '9') throw Error("bad variable name: " + name);
            k = k * 10 + (name[p] - '0');
        }
        if (k < 1 || k > n) throw Error("variable index out of range: " + name);
        return name[0] == 'z' ? z(k - 1) : chi(k - 1);
    }
    throw Error("bad variable name: " + name);
}

Monomial::Monomial(std::vector<std::pair<int, unsigned>> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    std::vector<std::pair<int, unsigned>> merged;
    for (const auto& [v, e] : factors_) {
        if (e == 0) continue;
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    factors_ = std::move(merged);
}

Monomial Monomial::var(int v, unsigned e) { return Monomial({{v, e}}); }

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

unsigned Monomial::exponent(int v) const {
    for (const auto& [var, e] : factors_)
        if (var == v) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    std::vector<std::pair<int, unsigned>> out;
    out.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first)
            out.push_back(*a++);
        else if (b->first < a->first)
            out.push_back(*b++);
        else {
            out.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, factors_.end());
    out.insert(out.end(), b, o.factors_.end());
    Monomial m;
    m.factors_ = std::move(out);
    return m;
}

Monomial Monomial::permuted(const std::vector<int>& var_map) const {
    std::vector<std::pair<int, unsigned>> out;
    out.reserve(factors_.size());
    for (const auto& [v, e] : factors_) out.emplace_back(var_map.at(v), e);
    return Monomial(std::move(out));
}

int Monomial::cmp_grlex(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto p = a.factors_.begin();
    auto q = b.factors_.begin();
    while (p != a.factors_.end() || q != b.factors_.end()) {
        int va = p != a.factors_.end() ? p->first : INT32_MAX;
        int vb = q != b.factors_.end() ? q->first : INT32_MAX;
        if (va < vb) return 1;   // a has positive exponent on an earlier var
        if (vb < va) return -1;
        if (p->second != q->second) return p->second > q->second ? 1 : -1;
        ++p;
        ++q;
    }
    return 0;
}

HermPoly::HermPoly(VarLayout layout, const GRat& constant) : layout_(layout) {
    if (!constant.is_zero()) terms_.emplace(Monomial::one(), constant);
}

HermPoly HermPoly::term(VarLayout layout, const GRat& c, const Monomial& m) {
    HermPoly p(layout);
    p.add_term(m, c);
    return p;
}

HermPoly HermPoly::variable(VarLayout layout, int v, unsigned e) {
    if (v < 0 || v >= layout.vars()) throw Error("variable index out of range");
    return term(layout, GRat(1), Monomial::var(v, e));
}

unsigned HermPoly::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

unsigned HermPoly::degree_in(int v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

GRat HermPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GRat(0) : it->second;
}

void HermPoly::add_term(const Monomial& m, const GRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void HermPoly::check_same_layout(const HermPoly& o) const {
    if (layout_ != o.layout_) throw Error("polynomial variable blocks differ");
}

HermPoly HermPoly::operator-() const {
    HermPoly out(layout_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

HermPoly operator+(const HermPoly& a, const HermPoly& b) {
    a.check_same_layout(b);
    HermPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

HermPoly operator-(const HermPoly& a, const HermPoly& b) {
    a.check_same_layout(b);
    HermPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
}

HermPoly operator*(const HermPoly& a, const HermPoly& b) {
    a.check_same_layout(b);
    HermPoly out(a.layout_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

HermPoly HermPoly::scaled(const GRat& c) const {
    HermPoly out(layout_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

HermPoly HermPoly::pow(unsigned e) const {
    HermPoly acc = constant(layout_, GRat(1));
    HermPoly base = *this;
    while (e > 0) {
        if (e & 1U) acc = acc * base;
        base = base * base;
        e >>= 1U;
    }
    return acc;
}

HermPoly HermPoly::bar_swap() const {
    std::vector<int> var_map(layout_.vars());
    for (int i = 0; i < layout_.n; ++i) {
        var_map[layout_.z(i)] = layout_.chi(i);
        var_map[layout_.chi(i)] = layout_.z(i);
    }
    var_map[layout_.w()] = layout_.tau();
    var_map[layout_.tau()] = layout_.w();
    HermPoly out(layout_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.permuted(var_map), c.conj());
    return out;
}

HermPoly HermPoly::substitute_w(const HermPoly& S) const {
    check_same_layout(S);
    if (S.depends_on(layout_.w())) throw Error("substitute_w: substituted value depends on w");
    unsigned wdeg = degree_in(layout_.w());
    // Powers of S computed once.
    std::vector<HermPoly> spow;
    spow.reserve(wdeg + 1);
    spow.push_back(constant(layout_, GRat(1)));
    for (unsigned k = 1; k <= wdeg; ++k) spow.push_back(spow.back() * S);

    HermPoly out(layout_);
    int wv = layout_.w();
    for (const auto& [m, c] : terms_) {
        unsigned k = m.exponent(wv);
        if (k == 0) {
            out.add_term(m, c);
            continue;
        }
        std::vector<std::pair<int, unsigned>> rest;
        for (const auto& [v, e] : m.factors())
            if (v != wv) rest.emplace_back(v, e);
        HermPoly piece = term(layout_, c, Monomial(std::move(rest))) * spow[k];
        out = out + piece;
    }
    return out;
}

std::complex<double> HermPoly::eval(const std::vector<std::complex<double>>& point) const {
    if (static_cast<int>(point.size()) != layout_.vars()) throw Error("eval: wrong point arity");
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t(c.re_double(), c.im_double());
        for (const auto& [v, e] : m.factors()) {
            std::complex<double> p = 1.0;
            std::complex<double> base = point[v];
            for (unsigned k = 0; k < e; ++k) p *= base;
            t *= p;
        }
        acc += t;
    }
    return acc;
}

GRat HermPoly::eval_exact(const std::vector<GRat>& point) const {
    if (static_cast<int>(point.size()) != layout_.vars()) throw Error("eval_exact: wrong point arity");
    GRat acc(0);
    for (const auto& [m, c] : terms_) {
        GRat t = c;
        for (const auto& [v, e] : m.factors()) t *= point[v].pow(e);
        acc += t;
    }
    return acc;
}

std::string HermPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ")";
        for (const auto& [v, e] : m.factors()) {
            out += "*" + layout_.var_name(v);
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

HermPoly HermPoly::parse(VarLayout layout, const std::string& text) {
    HermPoly out(layout);
    if (text == "0") return out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw Error("poly parse: expected '(' at " + std::to_string(pos));
        auto close = text.find(')', pos);
        if (close == std::string::npos) throw Error("poly parse: unbalanced coefficient");
        GRat c = GRat::parse(text.substr(pos + 1, close - pos - 1));
        pos = close + 1;
        std::vector<std::pair<int, unsigned>> factors;
        while (pos < text.size() && text[pos] == '*') {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && text[pos] != '*' && text[pos] != '^' && text[pos] != ' ') ++pos;
            int v = layout.var_index(text.substr(start, pos - start));
            unsigned e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t estart = pos;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
                if (estart == pos) throw Error("poly parse: missing exponent");
                e = static_cast<unsigned>(std::stoul(text.substr(estart, pos - estart)));
            }
            factors.emplace_back(v, e);
        }
        out.add_term(Monomial(std::move(factors)), c);
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != '+') throw Error("poly parse: expected '+' between terms");
            ++pos;
        }
    }
    return out;
}

}  // namespace psell
