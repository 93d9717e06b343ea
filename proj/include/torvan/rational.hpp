#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace torvan {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error taxonomy used across the library. The CLI maps these onto its
// exit codes, so new failure modes should reuse one of them.
struct contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parameter_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline Int to_integer(const Rat& q) {
    if (!is_integer(q)) throw contract_error("expected an integral value, got " + q.str());
    return rat_num(q);
}

// floor/ceil with exact semantics for negative values
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

// ceil(a/b) for integers, b > 0
Int ceil_div(const Int& a, const Int& b);

// "p/q", "p", or "-p/q"; throws parameter_error on garbage
Rat parse_rational(const std::string& s);
std::string format_rational(const Rat& q);

// C(n, k) for n >= 0; zero when k < 0 or k > n
Int binomial(long n, long k);

// falling-factorial binomial: prod_{i=0}^{k-1}(top - i) / k!, valid for any
// integer top (the polynomial extension used by Euler-characteristic formulas)
Int binomial_any(const Int& top, long k);

std::string format_vector(const std::vector<Rat>& v);

}  // namespace torvan
