#include <mpfr.h>

#include <cstdio>
#include <stdexcept>
#include <string>

#include "logtone/log_freq.hpp"

namespace logtone {
namespace {

constexpr mpfr_prec_t kStartPrec = 96;
constexpr mpfr_prec_t kMaxPrec = 1 << 20;
constexpr mpfr_prec_t kDisplayPrec = 256;

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

// Rigorous enclosure [lo, hi] of the value of x at the given working
// precision, built with directed rounding throughout.
void eval_bounds(const LogFreq& x, mpfr_prec_t prec, mpfr_ptr lo, mpfr_ptr hi) {
    mpfr_set_q(lo, x.unit().raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi, x.unit().raw().get_mpq_t(), MPFR_RNDU);
    Mpfr log_lo(prec), log_hi(prec), term_lo(prec), term_hi(prec);
    for (const auto& [prime, coeff] : x.coeffs()) {
        mpfr_set_ui(log_lo.get(), prime, MPFR_RNDD);
        mpfr_set_ui(log_hi.get(), prime, MPFR_RNDU);
        mpfr_log(log_lo.get(), log_lo.get(), MPFR_RNDD);
        mpfr_log(log_hi.get(), log_hi.get(), MPFR_RNDU);
        const mpq_srcptr c = coeff.raw().get_mpq_t();
        if (coeff.sign() > 0) {
            mpfr_mul_q(term_lo.get(), log_lo.get(), c, MPFR_RNDD);
            mpfr_mul_q(term_hi.get(), log_hi.get(), c, MPFR_RNDU);
        } else {
            mpfr_mul_q(term_lo.get(), log_hi.get(), c, MPFR_RNDD);
            mpfr_mul_q(term_hi.get(), log_lo.get(), c, MPFR_RNDU);
        }
        mpfr_add(lo, lo, term_lo.get(), MPFR_RNDD);
        mpfr_add(hi, hi, term_hi.get(), MPFR_RNDU);
    }
}

// Nearest-value evaluation, for display-quality numbers.
void eval_nearest(const LogFreq& x, mpfr_prec_t prec, mpfr_ptr out) {
    mpfr_set_q(out, x.unit().raw().get_mpq_t(), MPFR_RNDN);
    Mpfr lp(prec), term(prec);
    for (const auto& [prime, coeff] : x.coeffs()) {
        mpfr_set_ui(lp.get(), prime, MPFR_RNDN);
        mpfr_log(lp.get(), lp.get(), MPFR_RNDN);
        mpfr_mul_q(term.get(), lp.get(), coeff.raw().get_mpq_t(), MPFR_RNDN);
        mpfr_add(out, out, term.get(), MPFR_RNDN);
    }
}

std::string fixed_digits(mpfr_srcptr v, int digits) {
    const std::string fmt = "%." + std::to_string(digits) + "Rf";
    char* raw = nullptr;
    mpfr_asprintf(&raw, fmt.c_str(), v);
    std::string text(raw);
    mpfr_free_str(raw);
    return text;
}

bool is_negative_zero_string(const std::string& text) {
    if (text.empty() || text[0] != '-') {
        return false;
    }
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '.') {
            return false;
        }
    }
    return true;
}

// Exact round-half-even rendering of a rational at `digits` fractional digits.
std::string rational_fixed(const Rational& r, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const mpz_class num = ::abs(r.numerator()) * scale;
    const mpz_class den = r.denominator();
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const mpz_class twice = 2 * rem;
    if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t()))) {
        ++q;
    }
    std::string body = q.get_str();
    if (body.size() <= static_cast<std::size_t>(digits)) {
        body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    if (digits > 0) {
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (r.sign() < 0 && q != 0) {
        body.insert(0, "-");
    }
    return body;
}

}  // namespace

std::strong_ordering compare(const LogFreq& x, const LogFreq& y) {
    const LogFreq diff = combine(x, y, Rational(1), Rational(-1));
    if (diff.is_zero()) {
        return std::strong_ordering::equal;
    }
    for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        Mpfr lo(prec), hi(prec);
        eval_bounds(diff, prec, lo.get(), hi.get());
        if (mpfr_sgn(lo.get()) > 0) {
            return std::strong_ordering::greater;
        }
        if (mpfr_sgn(hi.get()) < 0) {
            return std::strong_ordering::less;
        }
    }
    // Unreachable for genuinely nonzero values at sane coefficient sizes.
    throw std::logic_error("compare: sign undecided at maximum precision");
}

std::string approx_value(const LogFreq& x, int digits) {
    if (digits < 1) {
        throw std::domain_error("approx_value: digits must be >= 1");
    }
    if (x.coeffs().empty()) {
        return rational_fixed(x.unit(), digits);
    }
    // The value is irrational, so it is never exactly on a rounding boundary;
    // refining the enclosure eventually makes both endpoints print alike.
    for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        Mpfr lo(prec), hi(prec);
        eval_bounds(x, prec, lo.get(), hi.get());
        std::string lo_text = fixed_digits(lo.get(), digits);
        const std::string hi_text = fixed_digits(hi.get(), digits);
        if (lo_text == hi_text) {
            if (is_negative_zero_string(lo_text)) {
                lo_text.erase(0, 1);
            }
            return lo_text;
        }
    }
    throw std::logic_error("approx_value: rounding undecided at maximum precision");
}

double cents_between(const LogFreq& x, const LogFreq& ref) {
    if (!is_positive(x) || !is_positive(ref)) {
        throw std::domain_error("cents_between: both values must be positive");
    }
    Mpfr vx(kDisplayPrec), vref(kDisplayPrec), two(kDisplayPrec);
    eval_nearest(x, kDisplayPrec, vx.get());
    eval_nearest(ref, kDisplayPrec, vref.get());
    mpfr_div(vx.get(), vx.get(), vref.get(), MPFR_RNDN);
    mpfr_log(vx.get(), vx.get(), MPFR_RNDN);
    mpfr_set_ui(two.get(), 2, MPFR_RNDN);
    mpfr_log(two.get(), two.get(), MPFR_RNDN);
    mpfr_div(vx.get(), vx.get(), two.get(), MPFR_RNDN);
    mpfr_mul_ui(vx.get(), vx.get(), 1200, MPFR_RNDN);
    return mpfr_get_d(vx.get(), MPFR_RNDN);
}

double value_ratio(const LogFreq& x, const LogFreq& ref) {
    if (ref.is_zero()) {
        throw std::domain_error("value_ratio: reference is the zero element");
    }
    Mpfr vx(kDisplayPrec), vref(kDisplayPrec);
    eval_nearest(x, kDisplayPrec, vx.get());
    eval_nearest(ref, kDisplayPrec, vref.get());
    mpfr_div(vx.get(), vx.get(), vref.get(), MPFR_RNDN);
    return mpfr_get_d(vx.get(), MPFR_RNDN);
}

}  // namespace logtone
