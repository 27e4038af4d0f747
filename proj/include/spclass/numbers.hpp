#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace spc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct dimension_error : math_error {
    using math_error::math_error;
};
struct level_error : math_error {
    using math_error::math_error;
};
struct degenerate_form_error : math_error {
    using math_error::math_error;
};
struct not_a_weight_error : math_error {
    using math_error::math_error;
};
struct parse_error : math_error {
    using math_error::math_error;
};

inline int sign_of(const Rat& x) { return x.sign(); }
inline int sign_of(const Int& x) { return x.sign(); }

Rat parse_rational(const std::string& text);
std::string to_string(const Rat& x);

// Strips square factors: returns (s, f) with n = s^2 * f, f squarefree.
std::pair<Int, Int> extract_square(const Int& n);

bool is_perfect_square(const Int& n, Int* root = nullptr);

// Element of a real quadratic extension: a + b*sqrt(d) with d > 1 squarefree.
// Rational values carry d == 0.  Mixing two genuinely different radicands is
// a logic error; it cannot arise when all values stem from one candidate.
class Quad {
public:
    Quad() : a_(0), b_(0), d_(0) {}
    Quad(Rat a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
    Quad(long long a) : a_(a), b_(0), d_(0) {}       // NOLINT(google-explicit-constructor)
    Quad(Rat a, Rat b, Int d);

    bool is_rational() const { return b_.is_zero(); }
    const Rat& rat_part() const { return a_; }
    const Rat& surd_part() const { return b_; }
    const Int& radicand() const { return d_; }
    // Requires is_rational().
    const Rat& as_rational() const;

    int sign() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    Quad operator-() const { return Quad(-a_, -b_, d_); }
    Quad& operator+=(const Quad& o);
    Quad& operator-=(const Quad& o);
    Quad& operator*=(const Quad& o);
    Quad& operator/=(const Quad& o);

    friend Quad operator+(Quad x, const Quad& y) { return x += y; }
    friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
    friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
    friend Quad operator/(Quad x, const Quad& y) { return x /= y; }

    friend bool operator==(const Quad& x, const Quad& y) { return (x - y).is_zero(); }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
    friend bool operator<(const Quad& x, const Quad& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Quad& x, const Quad& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const Quad& x, const Quad& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const Quad& x, const Quad& y) { return (x - y).sign() >= 0; }

    double to_double() const;
    std::string str() const;

    // Real roots of A x^2 + B x + C = 0 (A != 0), smaller root first.
    // nullopt when the discriminant is negative.
    static std::optional<std::pair<Quad, Quad>> quadratic_roots(const Rat& A, const Rat& B,
                                                                const Rat& C);

private:
    void merge_radicand(const Quad& o, Quad& tmp) const;
    Rat a_, b_;
    Int d_;
};

}  // namespace spc
