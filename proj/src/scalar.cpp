#include "bilie/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace bilie {

bool GaussRat::is_integer() const
{
    return is_real() && re_.get_den() == 1;
}

GaussRat& GaussRat::operator+=(const GaussRat& o)
{
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o)
{
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
    if (o.is_real()) {
        re_ /= o.re_;
        if (sgn(im_) != 0) im_ /= o.re_;
        return *this;
    }
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::size_t GaussRat::bit_length() const
{
    std::size_t b = mpz_sizeinbase(re_.get_num_mpz_t(), 2);
    b = std::max(b, mpz_sizeinbase(re_.get_den_mpz_t(), 2));
    b = std::max(b, mpz_sizeinbase(im_.get_num_mpz_t(), 2));
    b = std::max(b, mpz_sizeinbase(im_.get_den_mpz_t(), 2));
    return b;
}

std::string GaussRat::str() const
{
    if (is_real()) return re_.get_str();
    std::string s;
    if (sgn(re_) != 0) s = re_.get_str();
    if (im_ == 1)
        s += s.empty() ? "i" : "+i";
    else if (im_ == -1)
        s += "-i";
    else {
        std::string t = im_.get_str();
        if (!s.empty() && t[0] != '-') s += "+";
        s += t + "i";
    }
    return s;
}

namespace {

mpq_class parse_rational(const std::string& s)
{
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    std::string t = s[0] == '+' ? s.substr(1) : s;
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        // decimal literal, converted exactly
        bool neg = !t.empty() && t[0] == '-';
        std::string digits = t.substr(neg ? 1 : 0);
        dot = digits.find('.');
        std::string ip = digits.substr(0, dot);
        std::string fp = digits.substr(dot + 1);
        std::string all = ip + fp;
        mpz_class num(all.empty() ? "0" : all, 10);
        mpz_class den = 1;
        for (std::size_t k = 0; k < fp.size(); ++k) den *= 10;
        mpq_class q(num, den);
        q.canonicalize();
        return neg ? mpq_class(-q) : q;
    }
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return q;
}

} // namespace

GaussRat GaussRat::parse(const std::string& in)
{
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.back() != 'i') return GaussRat(parse_rational(s));
    s.pop_back();
    // split at the last sign that is not in leading position
    std::size_t cut = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if (s[k] == '+' || s[k] == '-') {
            cut = k;
            break;
        }
    if (cut == std::string::npos) return GaussRat(0, parse_rational(s));
    return GaussRat(parse_rational(s.substr(0, cut)), parse_rational(s.substr(cut)));
}

std::size_t GaussRat::hash() const
{
    std::hash<std::string> h;
    return h(str());
}

std::ostream& operator<<(std::ostream& os, const GaussRat& x)
{
    return os << x.str();
}

GaussRat imag_unit()
{
    return GaussRat(mpq_class(0), mpq_class(1));
}

namespace {

bool sqrt_rational(const mpq_class& q, mpq_class& out)
{
    if (sgn(q) < 0) return false;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = mpq_class(rn, rd);
    out.canonicalize();
    return true;
}

} // namespace

bool exact_sqrt(const GaussRat& x, GaussRat& out)
{
    if (x.is_real()) {
        mpq_class r;
        if (sqrt_rational(x.re(), r)) {
            out = GaussRat(r);
            return true;
        }
        if (sqrt_rational(-x.re(), r)) {
            out = GaussRat(0, r);
            return true;
        }
        return false;
    }
    // (a+bi)^2 = x: a^2 = (re + |x|)/2, b = im/(2a)
    mpq_class norm2 = x.re() * x.re() + x.im() * x.im();
    mpq_class absx;
    if (!sqrt_rational(norm2, absx)) return false;
    mpq_class a2 = (x.re() + absx) / 2, a;
    if (!sqrt_rational(a2, a) || sgn(a) == 0) return false;
    mpq_class b = x.im() / (2 * a);
    out = GaussRat(a, b);
    return true;
}

} // namespace bilie
