#include "spclass/numbers.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <limits>

namespace spc {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    std::string s = text;
    bool neg = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(pos, slash - pos));
        Int den(s.substr(slash + 1));
        if (den.is_zero()) throw parse_error("zero denominator: " + text);
        Rat r(num, den);
        return neg ? Rat(-r) : r;
    }
    auto dot = s.find('.');
    Int ipart = 0, fpart = 0;
    Int scale = 1;
    std::string digits = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (digits.empty() && dot == std::string::npos) throw parse_error("bad rational: " + text);
    for (char c : digits) {
        if (c < '0' || c > '9') throw parse_error("bad rational: " + text);
        ipart = ipart * 10 + (c - '0');
    }
    if (dot != std::string::npos) {
        for (std::size_t i = dot + 1; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw parse_error("bad rational: " + text);
            fpart = fpart * 10 + (c - '0');
            scale *= 10;
        }
    }
    Rat r = Rat(ipart) + Rat(fpart, scale);
    return neg ? Rat(-r) : r;
}

std::string to_string(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

bool is_perfect_square(const Int& n, Int* root) {
    if (n.sign() < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

std::pair<Int, Int> extract_square(const Int& n) {
    if (n.sign() < 0) throw math_error("extract_square of negative value");
    if (n.is_zero()) return {0, 1};
    if (n <= Int(std::numeric_limits<long long>::max())) {
        long long s = 1, f = n.convert_to<long long>();
        for (long long p = 2; p * p <= f; ++p) {
            long long pp = p * p;
            while (f % pp == 0) {
                f /= pp;
                s *= p;
            }
        }
        return {Int(s), Int(f)};
    }
    Int s = 1, f = n;
    for (Int p = 2; p * p <= f; ++p) {
        Int pp = p * p;
        while (f % pp == 0) {
            f /= pp;
            s *= p;
        }
        // Keeps trial division short once the remaining part is a prime square.
        if (p > 4096) {
            Int r;
            if (is_perfect_square(f, &r)) {
                s *= r;
                f = 1;
            }
            break;
        }
    }
    Int r;
    if (f > 1 && is_perfect_square(f, &r)) {
        s *= r;
        f = 1;
    }
    return {s, f};
}

Quad::Quad(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (b_.is_zero()) {
        d_ = 0;
        return;
    }
    if (d_.sign() <= 0) throw math_error("nonpositive radicand");
    auto [s, f] = extract_square(d_);
    if (f == 1) {
        a_ += b_ * Rat(s);
        b_ = 0;
        d_ = 0;
    } else {
        b_ *= Rat(s);
        d_ = f;
    }
}

const Rat& Quad::as_rational() const {
    if (!is_rational()) throw math_error("irrational value where a rational was required");
    return a_;
}

int Quad::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    int sa = a_.sign(), sb = b_.sign();
    if (sa == sb) return sa;
    // a and b*sqrt(d) compete: compare a^2 with b^2 d.
    Rat lhs = a_ * a_;
    Rat rhs = b_ * b_ * Rat(d_);
    int cmp = (lhs > rhs) - (lhs < rhs);
    if (cmp == 0) return 0;  // cannot happen for squarefree d > 1, kept for safety
    return cmp > 0 ? sa : sb;
}

void Quad::merge_radicand(const Quad& o, Quad& tmp) const {
    if (!b_.is_zero() && !o.b_.is_zero() && d_ != o.d_)
        throw math_error("mixing incompatible radicands " + d_.str() + " and " + o.d_.str());
    tmp.d_ = b_.is_zero() ? o.d_ : d_;
}

Quad& Quad::operator+=(const Quad& o) {
    merge_radicand(o, *this);
    a_ += o.a_;
    b_ += o.b_;
    if (b_.is_zero()) d_ = 0;
    return *this;
}

Quad& Quad::operator-=(const Quad& o) {
    merge_radicand(o, *this);
    a_ -= o.a_;
    b_ -= o.b_;
    if (b_.is_zero()) d_ = 0;
    return *this;
}

Quad& Quad::operator*=(const Quad& o) {
    merge_radicand(o, *this);
    Rat na = a_ * o.a_ + b_ * o.b_ * Rat(d_);
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    if (b_.is_zero()) d_ = 0;
    return *this;
}

Quad& Quad::operator/=(const Quad& o) {
    if (o.is_zero()) throw math_error("division by zero");
    merge_radicand(o, *this);
    // 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d)
    Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * Rat(d_);
    Quad conj(o.a_ / norm, -o.b_ / norm, d_.is_zero() ? o.d_ : d_);
    return *this *= conj;
}

double Quad::to_double() const {
    double v = a_.convert_to<double>();
    if (!b_.is_zero()) v += b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
    return v;
}

std::string Quad::str() const {
    if (is_rational()) return to_string(a_);
    std::string s = to_string(a_);
    s += b_.sign() >= 0 ? "+" : "-";
    Rat ab = b_.sign() >= 0 ? b_ : Rat(-b_);
    s += to_string(ab) + "*sqrt(" + d_.str() + ")";
    return s;
}

std::optional<std::pair<Quad, Quad>> Quad::quadratic_roots(const Rat& A, const Rat& B,
                                                           const Rat& C) {
    if (A.is_zero()) throw math_error("quadratic_roots with A = 0");
    Rat disc = B * B - 4 * A * C;
    if (disc.sign() < 0) return std::nullopt;
    // sqrt(p/q) = sqrt(p q)/q
    Int p = numerator(disc), q = denominator(disc);
    auto [s, f] = extract_square(p * q);
    Rat root_rat(s, q);  // rational factor of sqrt(disc)
    Quad sq = (f == 1) ? Quad(root_rat) : Quad(Rat(0), root_rat, f);
    Quad half(Rat(1, 2) / A);
    Quad r1 = (Quad(-B) - sq) * half;
    Quad r2 = (Quad(-B) + sq) * half;
    if (A.sign() < 0) std::swap(r1, r2);
    return std::make_pair(r1, r2);
}

}  // namespace spc
