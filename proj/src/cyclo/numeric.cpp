#include "qgcat/cyclo/numeric.hpp"

#include "qgcat/error.hpp"

#include <cmath>
#include <mpfr.h>

namespace qgcat::cyclo {

namespace {

class Mpfr {
  public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

  private:
    mpfr_t v_;
};

// Evaluates the real and imaginary parts at precision prec. The returned
// bound err satisfies |computed - exact| <= err for both parts.
void evaluate(const CycloNumber& x, mpfr_prec_t prec, mpfr_ptr re, mpfr_ptr im, double* err_log2) {
    const auto num = x.numerators();
    const mpz_class den = x.denominator();
    const long n = static_cast<long>(x.conductor());
    Mpfr angle(prec + 16), c(prec), s(prec), term(prec), pi(prec + 16);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    mpz_class mass = 0;
    for (std::size_t k = 0; k < num.size(); ++k) {
        if (num[k] == 0) continue;
        mass += abs(num[k]);
        mpfr_mul_si(angle.get(), pi.get(), 2 * static_cast<long>(k), MPFR_RNDN);
        mpfr_div_si(angle.get(), angle.get(), n, MPFR_RNDN);
        mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
        mpfr_mul_z(term.get(), c.get(), num[k].get_mpz_t(), MPFR_RNDN);
        mpfr_add(re, re, term.get(), MPFR_RNDN);
        mpfr_mul_z(term.get(), s.get(), num[k].get_mpz_t(), MPFR_RNDN);
        mpfr_add(im, im, term.get(), MPFR_RNDN);
    }
    mpfr_div_z(re, re, den.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(im, im, den.get_mpz_t(), MPFR_RNDN);
    // Each of at most phi terms carries a few ulps relative to mass/den; the sums
    // and the final division add at most phi + 2 more.
    const double m = std::log2(mpq_class(mass + 1, den).get_d() + 1.0);
    *err_log2 = m + std::log2(4.0 * static_cast<double>(num.size()) + 16.0) - static_cast<double>(prec);
}

mpfr_prec_t precision_for(const CycloNumber& x, int digits) {
    const double m = std::log2(x.l1_norm() + 2.0);
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623 + m + std::log2(4.0 * x.degree() + 16.0))) + 24;
}

std::string format(mpfr_ptr v, int digits) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", digits, v);
    std::string out(buf);
    mpfr_free_str(buf);
    if (out.find_first_not_of("-0.") == std::string::npos && !out.empty() && out[0] == '-') out.erase(0, 1);
    return out;
}

} // namespace

ComplexApprox numeric_value(const CycloNumber& x, int digits) {
    if (digits < 1) throw ArgumentError("digits must be at least 1");
    const mpfr_prec_t prec = precision_for(x, digits);
    Mpfr re(prec), im(prec);
    double err = 0;
    evaluate(x, prec, re.get(), im.get(), &err);
    ComplexApprox out;
    out.value = {mpfr_get_d(re.get(), MPFR_RNDN), mpfr_get_d(im.get(), MPFR_RNDN)};
    // One extra printed digit keeps decimal rounding inside the error budget.
    out.real = format(re.get(), digits + 1);
    out.imag = format(im.get(), digits + 1);
    return out;
}

int real_sign(const CycloNumber& x) {
    if (x.is_zero()) return 0;
    const CycloNumber re2 = x + x.conj(); // twice the real part, exact
    if (re2.is_zero()) return 0;
    for (mpfr_prec_t prec = 64; prec <= (1 << 22); prec *= 2) {
        Mpfr re(prec), im(prec), bound(53);
        double err = 0;
        evaluate(re2, prec, re.get(), im.get(), &err);
        mpfr_set_d(bound.get(), std::exp2(err), MPFR_RNDU);
        if (mpfr_cmpabs(re.get(), bound.get()) > 0) return mpfr_sgn(re.get());
    }
    throw InvariantViolation("could not separate a nonzero real part from zero");
}

bool is_positive_real(const CycloNumber& x) {
    if (x.is_zero()) return false;
    if (!(x == x.conj())) return false;
    return real_sign(x) > 0;
}

} // namespace qgcat::cyclo
