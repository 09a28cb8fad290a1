#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace psell {

// Raised by operations whose exact preconditions are violated (arity
// mismatches, non-unimodular phases, singular matrices, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

mpq_class parse_rational(const std::string& text);
std::string rational_str(const mpq_class& q);

// Gaussian rational: re + im*i with arbitrary-precision rational parts,
// always kept in lowest terms by mpq_class. Field operations are exact.
class GRat {
public:
    GRat() : re_(0), im_(0) {}
    GRat(long re) : re_(re), im_(0) {}              // NOLINT(google-explicit-constructor)
    GRat(const mpq_class& re) : re_(re), im_(0) {  // NOLINT(google-explicit-constructor)
        re_.canonicalize();
    }
    GRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        // mpq_class never canonicalizes two-argument constructions on its
        // own; the lowest-terms invariant is enforced here.
        re_.canonicalize();
        im_.canonicalize();
    }
    GRat(long re, long im) : re_(re), im_(im) {}

    static GRat i() { return GRat(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GRat conj() const { return GRat(re_, mpq_class(-im_)); }
    // |x|^2, an exact nonnegative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    bool is_unimodular() const { return norm() == 1; }

    GRat operator-() const { return GRat(mpq_class(-re_), mpq_class(-im_)); }

    GRat& operator+=(const GRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GRat& operator-=(const GRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GRat& operator*=(const GRat& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GRat& operator/=(const GRat& o);

    GRat inverse() const;
    GRat pow(unsigned long e) const;

    friend GRat operator+(GRat a, const GRat& b) { return a += b; }
    friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
    friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
    friend GRat operator/(GRat a, const GRat& b) { return a /= b; }
    friend bool operator==(const GRat& a, const GRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

    double re_double() const { return re_.get_d(); }
    double im_double() const { return im_.get_d(); }

    // Canonical text form "re+im*i" / "re-im*i"; both parts always printed.
    std::string str() const;
    static GRat parse(const std::string& text);

private:
    mpq_class re_, im_;
};

// A GRat whose modulus is exactly 1, e.g. (3+4i)/5. Arbitrary e^{i*theta}
// is not representable; this is the exact stand-in for phase factors.
class UnimodularGRat {
public:
    UnimodularGRat() : value_(1) {}
    explicit UnimodularGRat(GRat v) : value_(std::move(v)) {
        if (!value_.is_unimodular()) throw Error("phase is not unimodular: " + value_.str());
    }
    const GRat& value() const { return value_; }
    UnimodularGRat conj() const { return UnimodularGRat(value_.conj()); }
    friend UnimodularGRat operator*(const UnimodularGRat& a, const UnimodularGRat& b) {
        return UnimodularGRat(a.value_ * b.value_);
    }
    friend bool operator==(const UnimodularGRat& a, const UnimodularGRat& b) { return a.value_ == b.value_; }

private:
    GRat value_;
};

}  // namespace psell
