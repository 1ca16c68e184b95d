#ifndef SMT_REAL_HPP
#define SMT_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace smt {

// Working precision is thread-local; all Real results are produced at the
// precision that is active when the operation runs.
int working_digits();
mpfr_prec_t working_bits();
void set_working_digits(int digits);

// RAII scope for temporarily raised (or lowered) precision.
struct PrecisionGuard {
    explicit PrecisionGuard(int digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    int saved_;
};

class Real {
  public:
    Real() { mpfr_init2(v_, working_bits()); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    explicit Real(long n) { mpfr_init2(v_, working_bits()); mpfr_set_si(v_, n, MPFR_RNDN); }
    explicit Real(int n) : Real(static_cast<long>(n)) {}
    explicit Real(const mpz_class& n) { mpfr_init2(v_, working_bits()); mpfr_set_z(v_, n.get_mpz_t(), MPFR_RNDN); }
    explicit Real(const mpq_class& q) { mpfr_init2(v_, working_bits()); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    // Parses a decimal literal ("1.25e-3").
    explicit Real(const std::string& s) { mpfr_init2(v_, working_bits()); mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN); }

    static Real from_double(double d) { Real r; mpfr_set_d(r.v_, d, MPFR_RNDN); return r; }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator+=(long n) { mpfr_add_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator-=(long n) { mpfr_sub_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }

    // Decimal string with enough digits to round-trip at the value's precision.
    std::string str(int digits = 0) const;

  private:
    mpfr_t v_;
};

inline Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
inline Real operator-(const Real& a) { Real r; mpfr_neg(r.raw(), a.raw(), MPFR_RNDN); return r; }

inline Real operator+(const Real& a, long b) { Real r; mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator-(const Real& a, long b) { Real r; mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator*(const Real& a, long b) { Real r; mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator/(const Real& a, long b) { Real r; mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator-(long a, const Real& b) { Real r; mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN); return r; }
inline Real operator/(long a, const Real& b) { Real r; mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN); return r; }

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }

inline Real abs(const Real& a) { Real r; mpfr_abs(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real sqrt(const Real& a) { Real r; mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real exp(const Real& a) { Real r; mpfr_exp(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real log(const Real& a) { Real r; mpfr_log(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real sin(const Real& a) { Real r; mpfr_sin(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real cos(const Real& a) { Real r; mpfr_cos(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real tanh(const Real& a) { Real r; mpfr_tanh(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real cosh(const Real& a) { Real r; mpfr_cosh(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real sinh(const Real& a) { Real r; mpfr_sinh(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real atanh(const Real& a) { Real r; mpfr_atanh(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real atan2(const Real& y, const Real& x) { Real r; mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real floor(const Real& a) { Real r; mpfr_floor(r.raw(), a.raw()); return r; }
inline Real round_nearest(const Real& a) { Real r; mpfr_round(r.raw(), a.raw()); return r; }
// x^y for x > 0.
inline Real pow(const Real& x, const Real& y) { Real r; mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN); return r; }
inline Real pow_si(const Real& x, long n) { Real r; mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN); return r; }
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

// Ei(x) in the principal-value sense (x != 0).
inline Real eint(const Real& a) { Real r; mpfr_eint(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real gamma_real(const Real& a) { Real r; mpfr_gamma(r.raw(), a.raw(), MPFR_RNDN); return r; }

Real pi();
Real euler_gamma();

// 10^-n at working precision.
Real pow10(long n);

mpz_class to_mpz(const Real& a);  // rounds to nearest

}  // namespace smt

#endif
