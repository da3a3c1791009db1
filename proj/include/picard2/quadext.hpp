#pragma once

#include <string>

#include "picard2/errors.hpp"
#include "picard2/numeric.hpp"

namespace picard2 {

/// A value a + b*sqrt(d) with a, b rational and d a squarefree radicand.
/// Rational values are canonicalized to b = 0, d = 0. Construction
/// extracts square factors from d (sqrt(8) -> 2*sqrt(2)), so equal
/// values have equal representations. Immutable after construction.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rat a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT: implicit
    QuadExt(Int a) : a_(Rat(std::move(a))), b_(0), d_(0) {}
    QuadExt(long a) : a_(Rat(a)), b_(0), d_(0) {}
    QuadExt(int a) : a_(Rat(a)), b_(0), d_(0) {}

    QuadExt(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        canonicalize();
    }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    const Int& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Rational value; throws if irrational.
    const Rat& as_rational() const {
        if (!is_rational()) throw Error("QuadExt: value is irrational");
        return a_;
    }

    /// Exact sign, decided by rational comparisons only.
    int sign() const {
        if (b_ == 0) return sign_of(a_);
        if (a_ == 0) return sign_of(b_);
        int sa = sign_of(a_), sb = sign_of(b_);
        if (sa == sb) return sa;
        // a and b oppose; compare a^2 against b^2 d.
        Rat a2 = a_ * a_, b2d = b_ * b_ * Rat(d_);
        if (a2 == b2d) return 0;
        return a2 > b2d ? sa : sb;
    }

    QuadExt conjugate() const { return raw(a_, -b_, d_); }
    QuadExt operator-() const { return raw(-a_, -b_, d_); }
    QuadExt abs() const { return sign() < 0 ? -*this : *this; }

    /// Norm a^2 - b^2 d (a rational).
    Rat field_norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        Int d = common_radicand(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        Int d = common_radicand(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Int d = common_radicand(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d), x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw DivisionByZero("QuadExt: division by zero");
        Int d = common_radicand(x, y);
        Rat n = y.field_norm();  // nonzero: d squarefree so a^2 = b^2 d forces a=b=0
        QuadExt num = x * y.conjugate();
        return QuadExt(num.a_ / n, num.b_ / n, d);
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    /// True when the two values can share one radicand.
    static bool compatible(const QuadExt& x, const QuadExt& y) {
        return x.b_ == 0 || y.b_ == 0 || x.d_ == y.d_;
    }

    static Int common_radicand(const QuadExt& x, const QuadExt& y) {
        if (!compatible(x, y))
            throw RadicandMismatch("QuadExt: radicands " + x.d_.str() + " and " + y.d_.str());
        return x.b_ != 0 ? x.d_ : y.d_;
    }

    double approx() const;
    std::string str() const;

private:
    static QuadExt raw(Rat a, Rat b, Int d) {
        QuadExt q;
        q.a_ = std::move(a);
        q.b_ = std::move(b);
        q.d_ = std::move(d);
        if (q.b_ == 0) q.d_ = 0;
        return q;
    }

    void canonicalize() {
        if (b_ == 0) { d_ = 0; return; }
        if (d_ < 0) throw Error("QuadExt: negative radicand");
        if (d_ == 0) { b_ = 0; return; }
        auto [s, f] = squarefree_split(d_);
        b_ *= Rat(s);
        d_ = f;
        if (d_ == 1) { a_ += b_; b_ = 0; d_ = 0; }
        if (b_ == 0) d_ = 0;
    }

    Rat a_, b_;
    Int d_;
};

inline QuadExt sqrt_of(Int d) { return QuadExt(Rat(0), Rat(1), std::move(d)); }

}  // namespace picard2
