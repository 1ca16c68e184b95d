#include "smt/real.hpp"

#include <cmath>
#include <stdexcept>

namespace smt {

namespace {
// Guard bits absorb rounding noise so that the requested decimal digits are
// actually trustworthy.
constexpr int kGuardBits = 24;

thread_local int t_digits = 50;
}  // namespace

int working_digits() { return t_digits; }

mpfr_prec_t working_bits() {
    return static_cast<mpfr_prec_t>(std::ceil(t_digits * 3.3219280948873623)) + kGuardBits;
}

void set_working_digits(int digits) {
    if (digits < 5) throw std::invalid_argument("working precision below 5 digits");
    t_digits = digits;
}

PrecisionGuard::PrecisionGuard(int digits) : saved_(t_digits) { set_working_digits(digits); }
PrecisionGuard::~PrecisionGuard() { t_digits = saved_; }

std::string Real::str(int digits) const {
    if (digits <= 0) digits = t_digits;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    std::string sign;
    if (!m.empty() && m[0] == '-') { sign = "-"; m = m.substr(1); }
    // mpfr exponent convention: value = 0.mmmm * 10^e
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e - 1));
    return out;
}

Real pi() { Real r; mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }
Real euler_gamma() { Real r; mpfr_const_euler(r.raw(), MPFR_RNDN); return r; }

Real pow10(long n) {
    Real r(10L);
    mpfr_pow_si(r.raw(), r.raw(), n, MPFR_RNDN);
    return r;
}

mpz_class to_mpz(const Real& a) {
    mpz_class z;
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(a.raw()));
    mpfr_round(t, a.raw());
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

}  // namespace smt
