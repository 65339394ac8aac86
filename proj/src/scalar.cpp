#include "liealg/scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace liealg {

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (im_ == 0 && o.im_ == 0) { re_ /= o.re_; return *this; }
    Rational n = o.norm2();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r); im_ = std::move(i);
    return *this;
}

static std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string Scalar::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string im_part;
    if (im_ == 1) im_part = "i";
    else if (im_ == -1) im_part = "-i";
    else im_part = rat_str(im_) + "i";
    if (re_ == 0) return im_part;
    if (im_ > 0) return rat_str(re_) + "+" + im_part;
    return rat_str(re_) + im_part;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    }
}

} // namespace liealg
