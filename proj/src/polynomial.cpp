#include "curvecount/polynomial.hpp"

#include <sstream>

namespace curvecount {

namespace {

void canonicalize(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    canonicalize(c_);
}

Polynomial Polynomial::constant(Rat v) {
    return Polynomial(std::vector<Rat>{std::move(v)});
}

Polynomial Polynomial::variable() {
    return Polynomial(std::vector<Rat>{Rat(0), Rat(1)});
}

Polynomial Polynomial::ints(std::initializer_list<long long> coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

bool Polynomial::integer_coefficients() const {
    for (const Rat& r : c_)
        if (boost::multiprecision::denominator(r) != 1) return false;
    return true;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.at(i) + b.at(i);
    return Polynomial(std::move(c));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    return poly_add(a, poly_neg(b));
}

Polynomial poly_neg(const Polynomial& a) {
    std::vector<Rat> c = a.coeffs();
    for (Rat& r : c) r = -r;
    return Polynomial(std::move(c));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Polynomial(std::move(c));
}

Polynomial poly_scale(const Polynomial& a, const Rat& k) {
    if (k == 0) return Polynomial();
    std::vector<Rat> c = a.coeffs();
    for (Rat& r : c) r *= k;
    return Polynomial(std::move(c));
}

Rat poly_eval(const Polynomial& p, const Rat& d0) {
    Rat acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * d0 + *it;
    return acc;
}

Int poly_eval_int(const Polynomial& p, const Int& d0) {
    Rat v = poly_eval(p, Rat(d0));
    if (boost::multiprecision::denominator(v) != 1)
        throw NonExactDivision("polynomial value at d=" + d0.str() +
                               " is not an integer: " + rat_str(v));
    return boost::multiprecision::numerator(v);
}

Polynomial poly_div_exact(const Polynomial& p, const Int& k, bool require_integer) {
    if (k == 0) throw NonExactDivision("division of a polynomial by zero");
    std::vector<Rat> c = p.coeffs();
    for (Rat& r : c) {
        r /= Rat(k);
        if (require_integer && boost::multiprecision::denominator(r) != 1)
            throw NonExactDivision("coefficient " + rat_str(r * Rat(k)) +
                                   " of " + p.str() + " is not divisible by " + k.str());
    }
    return Polynomial(std::move(c));
}

std::string rat_str(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& s) {
    auto parse_int = [&](const std::string& part) -> Int {
        if (part.empty()) throw SchemaError("empty integer in '" + s + "'");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw SchemaError("bare sign in '" + s + "'");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw SchemaError("bad integer '" + part + "' in '" + s + "'");
        return Int(part);
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    const Int num = parse_int(s.substr(0, slash));
    const Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw SchemaError("zero denominator in '" + s + "'");
    return Rat(num, den);
}

std::vector<std::string> poly_to_strings(const Polynomial& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const Rat& r : p.coeffs()) out.push_back(rat_str(r));
    return out;
}

Polynomial poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const std::string& s : coeffs) c.push_back(rat_from_string(s));
    return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& r = c_[static_cast<std::size_t>(i)];
        if (r == 0) continue;
        const bool neg = r < 0;
        const Rat mag = neg ? Rat(-r) : r;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit = (mag == 1) && i > 0;
        if (!unit) {
            const bool frac = boost::multiprecision::denominator(mag) != 1;
            if (frac && i > 0) os << "(" << rat_str(mag) << ")";
            else os << rat_str(mag);
        }
        if (i == 1) os << "d";
        else if (i > 1) os << "d^" << i;
    }
    return first ? "0" : os.str();
}

}  // namespace curvecount
