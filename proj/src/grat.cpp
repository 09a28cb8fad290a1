#include "grat.hpp"

namespace psell {

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
    if (q.get_den() == 0) throw Error("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

GRat& GRat::operator/=(const GRat& o) {
    mpq_class n = o.norm();
    if (n == 0) throw Error("division by zero GRat");
    // (a+bi)/(c+di) = (a+bi)(c-di)/|c+di|^2
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GRat GRat::inverse() const {
    mpq_class n = norm();
    if (n == 0) throw Error("inverse of zero GRat");
    return GRat(re_ / n, mpq_class(-im_ / n));
}

GRat GRat::pow(unsigned long e) const {
    GRat base = *this;
    GRat acc(1);
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

std::string GRat::str() const {
    std::string out = rational_str(re_);
    if (im_ >= 0) {
        out += "+" + rational_str(im_);
    } else {
        out += "-" + rational_str(mpq_class(-im_));
    }
    out += "*i";
    return out;
}

GRat GRat::parse(const std::string& text) {
    // Expected shape: <rat>(+|-)<rat>*i, where <rat> may itself begin with '-'.
    auto star = text.rfind("*i");
    if (star == std::string::npos || star + 2 != text.size())
        throw Error("bad GRat literal (missing *i): " + text);
    std::string body = text.substr(0, star);
    // Split at the sign separating the real and imaginary parts: the last
    // '+'/'-' that is not the leading sign and not part of "/".
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) throw Error("bad GRat literal: " + text);
    mpq_class re = parse_rational(body.substr(0, split));
    mpq_class im = parse_rational(body.substr(split + 1));
    if (body[split] == '-') im = -im;
    return GRat(re, im);
}

}  // namespace psell
