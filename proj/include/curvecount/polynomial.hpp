#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

#include "curvecount/errors.hpp"

namespace curvecount {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense univariate polynomial in the curve degree d, exact rational
// coefficients, stored low-to-high.  Canonical form: no trailing zero
// coefficients; the zero polynomial is the empty vector.  Degrees stay small
// (single digits) throughout the engine, so dense storage is the right shape.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);

    static Polynomial constant(Rat v);
    static Polynomial variable();  // the indeterminate d
    // Low-to-high integer coefficients: ints({-6, 2}) is 2d - 6.
    static Polynomial ints(std::initializer_list<long long> coeffs);

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
    Rat at(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    bool integer_coefficients() const;

    bool operator==(const Polynomial&) const = default;

    std::string str() const;  // human-readable, e.g. "2d^2 - 9d + 18"

private:
    std::vector<Rat> c_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const Polynomial& a);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Rat& k);

// Horner evaluation at an exact rational point.
Rat poly_eval(const Polynomial& p, const Rat& d0);
// Evaluation at an integer point when the result must be an integer.
Int poly_eval_int(const Polynomial& p, const Int& d0);

// Divide every coefficient by the nonzero integer k.  With require_integer
// (the default) the result must again have integer coefficients, otherwise
// NonExactDivision is thrown; k = 0 always throws NonExactDivision.
Polynomial poly_div_exact(const Polynomial& p, const Int& k,
                          bool require_integer = true);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return poly_add(a, b); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return poly_sub(a, b); }
inline Polynomial operator-(const Polynomial& a) { return poly_neg(a); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

// "5", "-3" or "-3/2"; parse errors surface as SchemaError.
std::string rat_str(const Rat& r);
Rat rat_from_string(const std::string& s);

// JSON form: low-to-high array of coefficient strings, integers written
// without a denominator.  The zero polynomial is the empty array.
std::vector<std::string> poly_to_strings(const Polynomial& p);
Polynomial poly_from_strings(const std::vector<std::string>& coeffs);

}  // namespace curvecount
