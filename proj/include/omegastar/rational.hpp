// rational.hpp
// Exact arbitrary-precision rational, always reduced, denominator > 0.
// A thin value type over GMP's mpq.

#pragma once

#include <gmpxx.h>

#include <string>

#include "omegastar/util.hpp"

namespace omegastar {

class ExactRational {
public:
    ExactRational() : q_(0) {}
    ExactRational(long num, unsigned long den) : q_(num, den) {
        if (den == 0) throw domain_error("ExactRational: zero denominator");
        q_.canonicalize();
    }
    explicit ExactRational(mpq_class q) : q_(std::move(q)) {
        q_.canonicalize();
    }

    static ExactRational zero() { return ExactRational(); }
    static ExactRational one() { return ExactRational(1, 1); }

    ExactRational operator+(const ExactRational& o) const {
        return ExactRational(mpq_class(q_ + o.q_));
    }
    ExactRational operator-(const ExactRational& o) const {
        return ExactRational(mpq_class(q_ - o.q_));
    }
    ExactRational operator*(const ExactRational& o) const {
        return ExactRational(mpq_class(q_ * o.q_));
    }

    bool operator==(const ExactRational& o) const { return q_ == o.q_; }
    bool operator!=(const ExactRational& o) const { return q_ != o.q_; }
    bool operator<(const ExactRational& o) const { return q_ < o.q_; }
    bool operator<=(const ExactRational& o) const { return q_ <= o.q_; }
    bool operator>(const ExactRational& o) const { return q_ > o.q_; }
    bool operator>=(const ExactRational& o) const { return q_ >= o.q_; }

    std::string numerator() const { return q_.get_num().get_str(); }
    std::string denominator() const { return q_.get_den().get_str(); }
    std::string str() const {
        return numerator() + "/" + denominator();
    }
    double to_double() const { return q_.get_d(); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

}  // namespace omegastar
