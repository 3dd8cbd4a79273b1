#include "conic/numeric.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

#include "conic/errors.hpp"

namespace conic {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncates toward zero
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int mod_floor(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

Int isqrt(const Int& n) {
    if (n < 0) raise(errc::invalid_argument, "isqrt of negative value");
    return sqrt(n);
}

bool is_square(const Int& n, Int* root) {
    if (n < 0) return false;
    Int s = isqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

bool rat_is_square(const Rat& q, Rat* root) {
    if (q < 0) return false;
    Int rn, rd;
    if (!is_square(num(q), &rn) || !is_square(den(q), &rd)) return false;
    if (root) *root = Rat(rn, rd);
    return true;
}

Int pow10(unsigned k) { return pow(Int(10), k); }

Int pow_int(const Int& base, std::uint64_t exp) {
    Int r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

Int rat_floor(const Rat& q) { return floor_div(num(q), den(q)); }

int rat_sign(const Rat& q) { return q.sign(); }

Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

std::pair<Int, Int> extract_square(const Int& n) {
    if (n <= 0) raise(errc::invalid_argument, "extract_square needs n > 0");
    Int f = 1, t = n;
    for (Int p = 2; p * p <= t && p < 100000; p += (p == 2 ? 1 : 2)) {
        Int pp = p * p;
        while (t % pp == 0) {
            t /= pp;
            f *= p;
        }
    }
    Int s;
    if (is_square(t, &s)) {
        f *= s;
        t = 1;
    }
    return {f, t};
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

std::string to_decimal_trunc(const Rat& v, unsigned frac_digits) {
    Int n = num(v), d = den(v);
    std::string sign;
    if (n < 0) {
        sign = "-";
        n = -n;
    }
    Int ip = n / d;
    Int rem = n % d;
    std::string out = sign + ip.str();
    if (rem == 0 || frac_digits == 0) return out;
    out += '.';
    for (unsigned i = 0; i < frac_digits && rem != 0; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + static_cast<int>(Int(rem / d)));
        rem %= d;
    }
    return out;
}

Rat trunc_sig(const Rat& v, unsigned sig) {
    if (sig == 0) raise(errc::invalid_argument, "need at least one significant digit");
    if (v == 0) return Rat(0);
    Rat a = rat_abs(v);
    // e = floor(log10(a))
    long e = 0;
    if (a >= 1) {
        e = static_cast<long>(rat_floor(a).str().size()) - 1;
    } else {
        Rat scaled = a;
        while (scaled < 1) {
            scaled *= 10;
            --e;
        }
    }
    long shift = static_cast<long>(sig) - 1 - e;
    Rat scaled = a;
    if (shift >= 0)
        scaled *= pow10(static_cast<unsigned>(shift));
    else
        scaled /= pow10(static_cast<unsigned>(-shift));
    Rat r(rat_floor(scaled));
    if (shift >= 0)
        r /= pow10(static_cast<unsigned>(shift));
    else
        r *= pow10(static_cast<unsigned>(-shift));
    return v < 0 ? Rat(-r) : r;
}

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) raise(errc::invalid_argument, "empty rational literal");

    auto bad = [&]() { raise(errc::invalid_argument, "bad rational literal: '" + text + "'"); };
    auto parse_int = [&](const std::string& p) -> Int {
        if (p.empty() || (p.size() == 1 && (p[0] == '+' || p[0] == '-'))) bad();
        for (std::size_t i = 0; i < p.size(); ++i) {
            char c = p[i];
            if (i == 0 && (c == '+' || c == '-')) continue;
            if (!std::isdigit(static_cast<unsigned char>(c))) bad();
        }
        return Int(p);
    };

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int n = parse_int(s.substr(0, slash));
        Int d = parse_int(s.substr(slash + 1));
        if (d == 0) raise(errc::invalid_argument, "zero denominator: '" + text + "'");
        return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (fp.empty()) bad();
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        Int i = parse_int(ip);
        Int f = parse_int(fp);
        Rat r = Rat(i) + Rat(f, pow10(static_cast<unsigned>(fp.size())));
        return neg ? Rat(-r) : r;
    }
    return Rat(parse_int(s));
}

std::string rat_str(const Rat& v) {
    if (den(v) == 1) return num(v).str();
    return num(v).str() + "/" + den(v).str();
}

const char* errc_name(errc code) {
    switch (code) {
        case errc::parameter_mismatch: return "parameter-mismatch";
        case errc::non_invertible: return "non-invertible";
        case errc::unordered_field: return "unordered-field";
        case errc::analytic_field: return "analytic-field";
        case errc::parametrization_pole: return "parametrization-pole";
        case errc::division_by_zero: return "division-by-zero";
        case errc::not_on_conic: return "not-on-conic";
        case errc::no_real_dominant_root: return "no-real-dominant-root";
        case errc::degenerate_limit: return "degenerate-limit";
        case errc::no_convergence: return "no-convergence";
        case errc::no_real_solution: return "no-real-solution";
        case errc::not_irrational: return "not-irrational";
        case errc::degenerate_denominator: return "degenerate-denominator";
        case errc::invalid_argument: return "invalid-argument";
        case errc::precision_exhausted: return "precision-exhausted";
    }
    return "unknown";
}

}  // namespace conic
