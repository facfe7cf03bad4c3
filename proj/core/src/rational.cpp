#include "paraopt/rational.hpp"

#include <cctype>

namespace paraopt {

namespace {

bool valid_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid_integer(num) || !valid_integer(den))
            throw std::invalid_argument("malformed rational: " + text);
        Int d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(Int(num), d);
    }
    if (auto dotpos = s.find('.'); dotpos != std::string::npos) {
        std::string whole = s.substr(0, dotpos), frac = s.substr(dotpos + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
        if (whole.empty()) whole = "0";
        if (frac.empty() || !valid_integer(whole) || !valid_integer(frac))
            throw std::invalid_argument("malformed decimal: " + text);
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Int num = Int(whole) * scale + Int(frac);
        if (neg) num = -num;
        return Rational(num, scale);
    }
    if (!valid_integer(s)) throw std::invalid_argument("malformed rational: " + text);
    return Rational(Int(s));
}

std::string render(const Rational& q) {
    Int num = numerator(q), den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string render(const AffineForm& f) {
    return render(f.dcoeff) + "*d + " + render(f.constant);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Int floor_rat(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

Int ceil_rat(const Rational& q) { return -floor_rat(Rational(-q)); }

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace paraopt
