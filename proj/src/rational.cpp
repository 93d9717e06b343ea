#include "torvan/rational.hpp"

#include <cctype>

namespace torvan {

Int floor_rat(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int quot = n / d;  // truncates toward zero
    if (n < 0 && quot * d != n) --quot;
    return quot;
}

Int ceil_rat(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int quot = n / d;
    if (n > 0 && quot * d != n) ++quot;
    return quot;
}

Int ceil_div(const Int& a, const Int& b) {
    if (b <= 0) throw parameter_error("ceil_div requires a positive denominator");
    return ceil_rat(Rat(a, b));
}

Rat parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw parameter_error("empty rational literal");
    auto ok_int = [](const std::string& u) {
        if (u.empty()) return false;
        std::size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
        if (i == u.size()) return false;
        for (; i < u.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            if (!ok_int(t)) throw parameter_error("bad rational literal: " + s);
            return Rat(Int(t));
        }
        std::string p = t.substr(0, slash), q = t.substr(slash + 1);
        if (!ok_int(p) || !ok_int(q)) throw parameter_error("bad rational literal: " + s);
        Int den(q);
        if (den == 0) throw parameter_error("zero denominator in: " + s);
        return Rat(Int(p), den);
    } catch (const std::exception&) {
        throw parameter_error("bad rational literal: " + s);
    }
}

std::string format_rational(const Rat& q) {
    if (is_integer(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int res = 1;
    for (long i = 0; i < k; ++i) {
        res *= (n - i);
        res /= (i + 1);
    }
    return res;
}

Int binomial_any(const Int& top, long k) {
    if (k < 0) return 0;
    Int res = 1;
    for (long i = 0; i < k; ++i) {
        res *= (top - i);
        res /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return res;
}

std::string format_vector(const std::vector<Rat>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(v[i]);
    }
    out += ")";
    return out;
}

}  // namespace torvan
