#include "cantorlab/rational.hpp"

#include "cantorlab/errors.hpp"

namespace cantorlab {

Rational::Rational(const BigInt& n, const BigInt& d) : q_(n) {
    if (sgn(d) == 0) throw MalformedSpec("rational with zero denominator");
    q_ /= mpq_class(d);
    q_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw MalformedSpec("division by zero rational");
    return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        // Exact decimal: a.b -> (a*10^k + b) / 10^k.
        std::string intpart = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        bool negative = !intpart.empty() && intpart[0] == '-';
        if (negative) intpart = intpart.substr(1);
        if (intpart.empty()) intpart = "0";
        for (char c : intpart + frac)
            if (c < '0' || c > '9') throw ParseError("bad decimal: " + text);
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt n = BigInt(intpart) * scale + BigInt(frac.empty() ? "0" : frac);
        if (negative) n = -n;
        return Rational(n, scale);
    }
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational: " + text);
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw MalformedSpec("0 to negative power");
        return Rational(0);
    }
    bool inv = e < 0;
    unsigned long ue = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), ue);
    return inv ? Rational(d, n) : Rational(n, d);
}

Rational Rational::pow2(long e) {
    mpz_class one = 1;
    if (e >= 0) {
        mpz_class n = one << static_cast<unsigned long>(e);
        return Rational(n, 1);
    }
    mpz_class d = one << static_cast<unsigned long>(-e);
    return Rational(1, d);
}

Rational Rational::floor_dyadic(unsigned bits) const {
    mpz_class scaled_num = q_.get_num() << bits;
    mpz_class t;
    mpz_fdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), q_.get_den().get_mpz_t());
    mpz_class den = mpz_class(1) << bits;
    return Rational(t, den);
}

Rational Rational::ceil_dyadic(unsigned bits) const {
    mpz_class scaled_num = q_.get_num() << bits;
    mpz_class t;
    mpz_cdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), q_.get_den().get_mpz_t());
    mpz_class den = mpz_class(1) << bits;
    return Rational(t, den);
}

BigInt Rational::floor() const {
    mpz_class t;
    mpz_fdiv_q(t.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return t;
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace cantorlab
