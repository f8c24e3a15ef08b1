#include "planalg/scalar.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <sstream>

#include "json_detail.hpp"

namespace planalg {

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat(mpfr_prec_t precision) {
    mpfr_init2(value_, std::max<mpfr_prec_t>(precision, MPFR_PREC_MIN));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_hex() const {
    if (mpfr_zero_p(value_)) return "0x0p0";
    mpz_class mantissa;
    mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
    mp_bitcnt_t shift = mpz_scan1(mantissa.get_mpz_t(), 0);
    mantissa >>= shift;
    long exp = static_cast<long>(exponent) + static_cast<long>(shift);
    std::string out = mantissa < 0 ? "-0x" : "0x";
    mpz_class magnitude = abs(mantissa);
    out += magnitude.get_str(16);
    out += "p" + std::to_string(exp);
    return out;
}

BigFloat BigFloat::from_hex(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (text.compare(pos, 2, "0x") != 0) throw Error(ErrorCode::ParseError, "bad hex dyadic: " + text);
    pos += 2;
    std::size_t p_at = text.find('p', pos);
    if (p_at == std::string::npos) throw Error(ErrorCode::ParseError, "bad hex dyadic: " + text);
    mpz_class mantissa;
    if (mantissa.set_str(text.substr(pos, p_at - pos), 16) != 0)
        throw Error(ErrorCode::ParseError, "bad hex mantissa: " + text);
    long exp = 0;
    try {
        exp = std::stol(text.substr(p_at + 1));
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad hex exponent: " + text);
    }
    if (negative) mantissa = -mantissa;
    mpfr_prec_t bits = std::max<mpfr_prec_t>(2, static_cast<mpfr_prec_t>(mpz_sizeinbase(mantissa.get_mpz_t(), 2)));
    BigFloat out(bits);
    mpfr_set_z_2exp(out.get(), mantissa.get_mpz_t(), exp, MPFR_RNDN);
    return out;
}

std::string BigFloat::to_decimal(int digits) const {
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*Rg", digits, value_);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()); }

// ---------------------------------------------------------------------------
// Real interval helpers

namespace {

struct Range {
    BigFloat lo, hi;
};

mpfr_prec_t prec_of(const Range& a) { return std::max(a.lo.precision(), a.hi.precision()); }

Range range_zero(mpfr_prec_t p) { return {BigFloat(p), BigFloat(p)}; }

Range range_add(const Range& a, const Range& b, mpfr_prec_t p) {
    Range r = range_zero(p);
    mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
    return r;
}

Range range_sub(const Range& a, const Range& b, mpfr_prec_t p) {
    Range r = range_zero(p);
    mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
    mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
    return r;
}

Range range_neg(const Range& a) {
    Range r = range_zero(prec_of(a));
    mpfr_neg(r.lo.get(), a.hi.get(), MPFR_RNDD);
    mpfr_neg(r.hi.get(), a.lo.get(), MPFR_RNDU);
    return r;
}

bool range_is_zero(const Range& a) { return mpfr_zero_p(a.lo.get()) && mpfr_zero_p(a.hi.get()); }

Range range_mul(const Range& a, const Range& b, mpfr_prec_t p) {
    if (range_is_zero(a) || range_is_zero(b)) return range_zero(p);
    Range r = range_zero(p);
    BigFloat t(p);
    const BigFloat* xs[2] = {&a.lo, &a.hi};
    const BigFloat* ys[2] = {&b.lo, &b.hi};
    bool first = true;
    for (const BigFloat* x : xs) {
        for (const BigFloat* y : ys) {
            mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    }
    return r;
}

Range range_sqr(const Range& a, mpfr_prec_t p) {
    Range r = range_zero(p);
    if (a.lo.sign() >= 0) {
        mpfr_sqr(r.lo.get(), a.lo.get(), MPFR_RNDD);
        mpfr_sqr(r.hi.get(), a.hi.get(), MPFR_RNDU);
    } else if (a.hi.sign() <= 0) {
        mpfr_sqr(r.lo.get(), a.hi.get(), MPFR_RNDD);
        mpfr_sqr(r.hi.get(), a.lo.get(), MPFR_RNDU);
    } else {
        BigFloat t(p);
        mpfr_sqr(r.hi.get(), a.lo.get(), MPFR_RNDU);
        mpfr_sqr(t.get(), a.hi.get(), MPFR_RNDU);
        if (mpfr_cmp(t.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
    }
    return r;
}

bool range_contains_zero(const Range& a) { return a.lo.sign() <= 0 && a.hi.sign() >= 0; }

Range range_div(const Range& a, const Range& b, mpfr_prec_t p) {
    if (range_contains_zero(b)) throw Error(ErrorCode::UncertifiableDivisor, "interval divisor contains 0");
    Range r = range_zero(p);
    BigFloat t(p);
    const BigFloat* xs[2] = {&a.lo, &a.hi};
    const BigFloat* ys[2] = {&b.lo, &b.hi};
    bool first = true;
    for (const BigFloat* x : xs) {
        for (const BigFloat* y : ys) {
            mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
            mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    }
    return r;
}

Range range_sqrt(const Range& a, mpfr_prec_t p) {
    if (a.hi.sign() < 0) throw Error(ErrorCode::NegativeRadicand, "square root of a negative enclosure");
    Range r = range_zero(p);
    if (a.lo.sign() > 0) mpfr_sqrt(r.lo.get(), a.lo.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi.get(), a.hi.get(), MPFR_RNDU);
    return r;
}

Range range_from_rational(const Rational& q, mpfr_prec_t p) {
    Range r = range_zero(p);
    mpfr_set_q(r.lo.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// CertInterval

CertInterval::CertInterval() = default;

CertInterval::CertInterval(BigFloat lower, BigFloat upper, unsigned precision_bits)
    : lo_(std::move(lower)), hi_(std::move(upper)), complex_(false), bits_(precision_bits) {
    if (compare(lo_, hi_) > 0) throw Error(ErrorCode::InvalidArgument, "interval lower > upper");
}

CertInterval::CertInterval(BigFloat lower, BigFloat upper, BigFloat imag_lower, BigFloat imag_upper,
                           unsigned precision_bits)
    : lo_(std::move(lower)),
      hi_(std::move(upper)),
      ilo_(std::move(imag_lower)),
      ihi_(std::move(imag_upper)),
      complex_(true),
      bits_(precision_bits) {
    if (compare(lo_, hi_) > 0 || compare(ilo_, ihi_) > 0)
        throw Error(ErrorCode::InvalidArgument, "interval lower > upper");
}

namespace {

CertInterval make_interval(Range re, std::optional<Range> im, unsigned bits) {
    if (!im) return CertInterval(std::move(re.lo), std::move(re.hi), bits);
    return CertInterval(std::move(re.lo), std::move(re.hi), std::move(im->lo), std::move(im->hi), bits);
}

Range re_of(const CertInterval& x) { return {x.lower(), x.upper()}; }
Range im_of(const CertInterval& x) {
    if (!x.has_imaginary()) return range_zero(MPFR_PREC_MIN);
    return {x.imag_lower(), x.imag_upper()};
}

mpfr_prec_t joint_prec(const CertInterval& a, const CertInterval& b) {
    return std::max(a.working_precision(), b.working_precision());
}

mpfr_prec_t rational_prec(const Rational& q, unsigned bits) {
    long size = 0;
    if (q != 0) {
        size = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
               static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
    }
    return static_cast<mpfr_prec_t>(bits + 8 + std::max(0L, size));
}

}  // namespace

CertInterval CertInterval::from_rational(const Rational& q, unsigned precision_bits) {
    return make_interval(range_from_rational(q, rational_prec(q, precision_bits)), std::nullopt, precision_bits);
}

mpfr_prec_t CertInterval::working_precision() const {
    mpfr_prec_t p = std::max(lo_.precision(), hi_.precision());
    if (complex_) p = std::max({p, ilo_.precision(), ihi_.precision()});
    return p;
}

bool CertInterval::contains_zero() const {
    bool re = lo_.sign() <= 0 && hi_.sign() >= 0;
    if (!complex_) return re;
    return re && ilo_.sign() <= 0 && ihi_.sign() >= 0;
}

bool CertInterval::contains(const Rational& q) const {
    if (complex_ && !(ilo_.sign() <= 0 && ihi_.sign() >= 0)) return false;
    return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

BigFloat CertInterval::width() const {
    BigFloat w(working_precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    if (complex_) {
        BigFloat t(working_precision());
        mpfr_sub(t.get(), ihi_.get(), ilo_.get(), MPFR_RNDU);
        if (compare(t, w) > 0) w = t;
    }
    return w;
}

BigFloat CertInterval::magnitude_bound() const {
    mpfr_prec_t p = working_precision();
    BigFloat re(p), t(p);
    mpfr_abs(re.get(), lo_.get(), MPFR_RNDU);
    mpfr_abs(t.get(), hi_.get(), MPFR_RNDU);
    if (compare(t, re) > 0) re = t;
    if (!complex_) return re;
    BigFloat im(p);
    mpfr_abs(im.get(), ilo_.get(), MPFR_RNDU);
    mpfr_abs(t.get(), ihi_.get(), MPFR_RNDU);
    if (compare(t, im) > 0) im = t;
    BigFloat out(p);
    mpfr_hypot(out.get(), re.get(), im.get(), MPFR_RNDU);
    return out;
}

CertInterval CertInterval::real_part() const { return CertInterval(lo_, hi_, bits_); }

CertInterval CertInterval::imag_part() const {
    if (!complex_) return CertInterval(BigFloat(), BigFloat(), bits_);
    return CertInterval(ilo_, ihi_, bits_);
}

CertInterval CertInterval::with_precision_bits(unsigned bits) const {
    CertInterval out = *this;
    out.bits_ = bits;
    return out;
}

CertInterval operator+(const CertInterval& a, const CertInterval& b) {
    mpfr_prec_t p = joint_prec(a, b);
    std::optional<Range> im;
    if (a.has_imaginary() || b.has_imaginary()) im = range_add(im_of(a), im_of(b), p);
    return make_interval(range_add(re_of(a), re_of(b), p), std::move(im),
                         std::max(a.precision_bits(), b.precision_bits()));
}

CertInterval operator-(const CertInterval& a, const CertInterval& b) {
    mpfr_prec_t p = joint_prec(a, b);
    std::optional<Range> im;
    if (a.has_imaginary() || b.has_imaginary()) im = range_sub(im_of(a), im_of(b), p);
    return make_interval(range_sub(re_of(a), re_of(b), p), std::move(im),
                         std::max(a.precision_bits(), b.precision_bits()));
}

CertInterval operator*(const CertInterval& a, const CertInterval& b) {
    mpfr_prec_t p = joint_prec(a, b);
    unsigned bits = std::max(a.precision_bits(), b.precision_bits());
    if (!a.has_imaginary() && !b.has_imaginary())
        return make_interval(range_mul(re_of(a), re_of(b), p), std::nullopt, bits);
    Range ar = re_of(a), ai = im_of(a), br = re_of(b), bi = im_of(b);
    Range re = range_sub(range_mul(ar, br, p), range_mul(ai, bi, p), p);
    Range im = range_add(range_mul(ar, bi, p), range_mul(ai, br, p), p);
    return make_interval(std::move(re), std::move(im), bits);
}

CertInterval operator/(const CertInterval& a, const CertInterval& b) {
    mpfr_prec_t p = joint_prec(a, b);
    unsigned bits = std::max(a.precision_bits(), b.precision_bits());
    if (!b.has_imaginary()) {
        Range d = re_of(b);
        std::optional<Range> im;
        if (a.has_imaginary()) im = range_div(im_of(a), d, p);
        return make_interval(range_div(re_of(a), d, p), std::move(im), bits);
    }
    Range br = re_of(b), bi = im_of(b);
    Range norm = range_add(range_sqr(br, p), range_sqr(bi, p), p);
    if (norm.lo.sign() <= 0) throw Error(ErrorCode::UncertifiableDivisor, "interval divisor contains 0");
    CertInterval num = a * b.conj();
    Range re = range_div(re_of(num), norm, p);
    Range im = range_div(im_of(num), norm, p);
    return make_interval(std::move(re), std::move(im), bits);
}

CertInterval CertInterval::operator-() const {
    std::optional<Range> im;
    if (complex_) im = range_neg(im_of(*this));
    return make_interval(range_neg(re_of(*this)), std::move(im), bits_);
}

CertInterval CertInterval::conj() const {
    if (!complex_) return *this;
    return make_interval(re_of(*this), range_neg(im_of(*this)), bits_);
}

CertInterval CertInterval::sqrt() const {
    if (complex_ && !(ilo_.sign() == 0 && ihi_.sign() == 0))
        throw Error(ErrorCode::NotReal, "square root of a complex enclosure");
    return make_interval(range_sqrt(re_of(*this), working_precision()), std::nullopt, bits_);
}

// ---------------------------------------------------------------------------
// Term lists

namespace {

void push_term(TermList& out, std::uint32_t index, Rational coeff) {
    if (coeff != 0) out.push_back({index, std::move(coeff)});
}

TermList merge_terms(const TermList& a, const TermList& b, bool subtract) {
    TermList out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].index < a[i].index) {
            out.push_back({b[j].index, subtract ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            push_term(out, a[i].index, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

TermList scale_terms(const TermList& a, const Rational& q) {
    TermList out;
    if (q == 0) return out;
    out.reserve(a.size());
    for (const auto& t : a) out.push_back({t.index, t.coeff * q});
    return out;
}

std::string terms_key(const TermList& t) {
    std::string key;
    for (const auto& term : t) {
        key += std::to_string(term.index);
        key += ':';
        key += term.coeff.get_str();
        key += ';';
    }
    return key;
}

std::uint32_t top_bit(std::uint32_t x) { return 31u - static_cast<std::uint32_t>(std::countl_zero(x)); }

}  // namespace

// ---------------------------------------------------------------------------
// Tower

struct Tower::Private {};

Tower::Tower(const Private&, TowerPtr parent, std::vector<TermList> radicands, std::uint32_t imag_mask)
    : parent_(std::move(parent)), radicands_(std::move(radicands)), imaginary_mask_(imag_mask) {
    build_table();
}

TowerPtr Tower::rationals() {
    static const TowerPtr root = std::make_shared<const Tower>(Private{}, nullptr, std::vector<TermList>{}, 0u);
    return root;
}

TowerPtr Tower::ancestor(std::size_t d) const {
    if (d > depth()) return nullptr;
    TowerPtr cur = shared_from_this();
    while (cur->depth() > d) cur = cur->parent_;
    return cur;
}

bool Tower::extends(const Tower& other) const {
    if (other.depth() > depth()) return false;
    TowerPtr a = ancestor(other.depth());
    return a.get() == &other;
}

std::string Tower::key() const {
    std::string key;
    for (const auto& r : radicands_) key += "[" + terms_key(r) + "]";
    return key;
}

void Tower::build_table() {
    const std::uint32_t dim = dimension();
    table_.assign(static_cast<std::size_t>(dim) * dim, TermList{});
    table_[0] = TermList{{0u, Rational(1)}};
    for (std::uint32_t level = 1; level <= depth(); ++level) {
        const std::uint32_t lo = 1u << (level - 1), hi = 1u << level;
        for (std::uint32_t i = 0; i < hi; ++i) {
            for (std::uint32_t j = 0; j < hi; ++j) {
                if ((i | j) < lo) continue;
                table_[static_cast<std::size_t>(i) * dim + j] = multiply_basis(i, j);
            }
        }
    }
}

TermList Tower::multiply_basis(std::uint32_t i, std::uint32_t j) const {
    const std::uint32_t dim = dimension();
    const std::uint32_t h = top_bit(i | j);
    const std::uint32_t bit = 1u << h;
    const std::uint32_t a = (i >> h) & 1u, b = (j >> h) & 1u;
    const TermList& base = table_[static_cast<std::size_t>(i & ~bit) * dim + (j & ~bit)];
    if (a + b == 1) {
        TermList out = base;
        for (auto& t : out) t.index |= bit;
        return out;
    }
    return multiply(base, radicands_[h]);
}

TermList Tower::multiply(const TermList& a, const TermList& b) const {
    if (a.empty() || b.empty()) return {};
    if (a.size() == 1 && a[0].index == 0) return scale_terms(b, a[0].coeff);
    if (b.size() == 1 && b[0].index == 0) return scale_terms(a, b[0].coeff);
    const std::uint32_t dim = dimension();
    std::vector<Rational> acc(dim);
    std::vector<char> touched(dim, 0);
    Rational prod;
    for (const auto& ta : a) {
        for (const auto& tb : b) {
            prod = ta.coeff * tb.coeff;
            for (const auto& t : table_[static_cast<std::size_t>(ta.index) * dim + tb.index]) {
                if (t.coeff == 1) {
                    acc[t.index] += prod;
                } else {
                    acc[t.index] += prod * t.coeff;
                }
                touched[t.index] = 1;
            }
        }
    }
    TermList out;
    for (std::uint32_t k = 0; k < dim; ++k) {
        if (touched[k] && acc[k] != 0) out.push_back({k, std::move(acc[k])});
    }
    return out;
}

namespace {

CertInterval enclose_terms(const TermList& terms, const std::vector<CertInterval>& basis, mpfr_prec_t prec) {
    CertInterval sum{BigFloat(prec), BigFloat(prec), static_cast<unsigned>(prec)};
    for (const auto& t : terms) {
        CertInterval c = make_interval(range_from_rational(t.coeff, rational_prec(t.coeff, static_cast<unsigned>(prec))),
                                       std::nullopt, static_cast<unsigned>(prec));
        sum = sum + c * basis[t.index];
    }
    return sum;
}

}  // namespace

const std::vector<CertInterval>& Tower::basis_enclosures(mpfr_prec_t precision) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = enclosure_cache_.find(precision);
        if (it != enclosure_cache_.end()) return it->second;
    }
    const std::uint32_t dim = dimension();
    const unsigned bits = static_cast<unsigned>(precision);
    std::vector<CertInterval> basis(dim);
    basis[0] = CertInterval::from_rational(Rational(1), bits);
    for (std::uint32_t m = 1; m < dim; ++m) {
        const std::uint32_t h = top_bit(m);
        const std::uint32_t bit = 1u << h;
        if (m == bit) {
            CertInterval r = enclose_terms(radicands_[h], basis, precision).real_part();
            if (imaginary(h)) {
                CertInterval root = (-r).sqrt();
                basis[m] = CertInterval(BigFloat(precision), BigFloat(precision), root.lower(), root.upper(), bits);
            } else {
                basis[m] = r.sqrt();
            }
        } else {
            basis[m] = basis[m & ~bit] * basis[bit];
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = enclosure_cache_.emplace(precision, std::move(basis));
    return it->second;
}

TowerPtr Tower::adjoin(const TermList& radicand) const {
    const std::string key = terms_key(radicand);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = children_.find(key);
        if (it != children_.end()) {
            if (auto alive = it->second.lock()) return alive;
        }
    }
    TowerElement r(shared_from_this(), radicand);
    Sign s = certified_sign(Scalar(r));
    if (s == Sign::zero) throw Error(ErrorCode::InvalidArgument, "cannot adjoin the square root of zero");
    std::vector<TermList> rads = radicands_;
    rads.push_back(radicand);
    std::uint32_t mask = imaginary_mask_;
    if (s == Sign::negative) mask |= 1u << depth();
    auto child = std::make_shared<const Tower>(Private{}, shared_from_this(), std::move(rads), mask);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = children_.find(key);
    if (it != children_.end()) {
        if (auto alive = it->second.lock()) return alive;
    }
    children_[key] = child;
    return child;
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
    if (a == b) return a;
    if (a->extends(*b)) return a;
    if (b->extends(*a)) return b;
    throw Error(ErrorCode::IncompatibleTowers, "towers " + a->key() + " and " + b->key() + " are unrelated");
}

// ---------------------------------------------------------------------------
// TowerElement

TowerElement::TowerElement() : tower_(Tower::rationals()) {}

TowerElement::TowerElement(TowerPtr tower, TermList terms) : tower_(std::move(tower)), terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(), [](const TowerTerm& x, const TowerTerm& y) { return x.index < y.index; });
    TermList cleaned;
    cleaned.reserve(terms_.size());
    for (auto& t : terms_) {
        if (t.index >= tower_->dimension()) throw Error(ErrorCode::InvalidArgument, "basis index outside tower");
        if (!cleaned.empty() && cleaned.back().index == t.index) {
            cleaned.back().coeff += t.coeff;
            if (cleaned.back().coeff == 0) cleaned.pop_back();
        } else if (t.coeff != 0) {
            cleaned.push_back(std::move(t));
        }
    }
    terms_ = std::move(cleaned);
}

TowerElement TowerElement::from_rational(TowerPtr tower, const Rational& q) {
    TermList t;
    push_term(t, 0, q);
    return TowerElement(std::move(tower), std::move(t));
}

TowerElement TowerElement::generator(TowerPtr tower, std::size_t level) {
    if (level >= tower->depth()) throw Error(ErrorCode::InvalidArgument, "generator level outside tower");
    return TowerElement(std::move(tower), TermList{{1u << level, Rational(1)}});
}

std::vector<Rational> TowerElement::coefficients() const {
    std::vector<Rational> out(tower_->dimension());
    for (const auto& t : terms_) out[t.index] = t.coeff;
    return out;
}

std::optional<Rational> TowerElement::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].index == 0) return terms_[0].coeff;
    return std::nullopt;
}

TowerElement TowerElement::lift(const TowerPtr& target) const {
    if (!target->extends(*tower_)) throw Error(ErrorCode::IncompatibleTowers, "lift target does not extend tower");
    TowerElement out;
    out.tower_ = target;
    out.terms_ = terms_;
    return out;
}

TowerElement TowerElement::operator+(const TowerElement& other) const {
    TowerElement out;
    out.tower_ = common_tower(tower_, other.tower_);
    out.terms_ = merge_terms(terms_, other.terms_, false);
    return out;
}

TowerElement TowerElement::operator-(const TowerElement& other) const {
    TowerElement out;
    out.tower_ = common_tower(tower_, other.tower_);
    out.terms_ = merge_terms(terms_, other.terms_, true);
    return out;
}

TowerElement TowerElement::operator*(const TowerElement& other) const {
    TowerElement out;
    out.tower_ = common_tower(tower_, other.tower_);
    out.terms_ = out.tower_->multiply(terms_, other.terms_);
    return out;
}

TowerElement TowerElement::scaled(const Rational& q) const {
    TowerElement out;
    out.tower_ = tower_;
    out.terms_ = scale_terms(terms_, q);
    return out;
}

TowerElement TowerElement::operator-() const { return scaled(Rational(-1)); }

namespace {

TermList inverse_terms(const Tower& tower, const TermList& x, std::size_t level) {
    if (x.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (level == 0) return TermList{{0u, Rational(1) / x[0].coeff}};
    const std::uint32_t bit = 1u << (level - 1);
    TermList a, b;
    for (const auto& t : x) {
        if (t.index & bit) {
            b.push_back({t.index & ~bit, t.coeff});
        } else {
            a.push_back(t);
        }
    }
    if (b.empty()) return inverse_terms(tower, a, level - 1);
    TermList norm = merge_terms(tower.multiply(a, a), tower.multiply(tower.multiply(b, b), tower.radicand(level - 1)), true);
    TermList inv = inverse_terms(tower, norm, level - 1);
    TermList out = tower.multiply(a, inv);
    TermList second = tower.multiply(b, inv);
    for (auto& t : second) {
        t.index |= bit;
        t.coeff = -t.coeff;
    }
    out.insert(out.end(), second.begin(), second.end());
    std::sort(out.begin(), out.end(), [](const TowerTerm& p, const TowerTerm& q) { return p.index < q.index; });
    return out;
}

}  // namespace

TowerElement TowerElement::inverse() const {
    if (terms_.empty()) throw Error(ErrorCode::DivisionByZero, "division by exact zero");
    std::size_t level = 0;
    for (const auto& t : terms_) {
        if (t.index) level = std::max<std::size_t>(level, top_bit(t.index) + 1);
    }
    return TowerElement(tower_, inverse_terms(*tower_, terms_, level));
}

TowerElement TowerElement::operator/(const TowerElement& other) const {
    TowerPtr t = common_tower(tower_, other.tower_);
    return lift(t) * other.lift(t).inverse();
}

TowerElement TowerElement::conj() const {
    const std::uint32_t mask = tower_->imaginary_mask();
    if (mask == 0) return *this;
    TowerElement out = *this;
    for (auto& t : out.terms_) {
        if (std::popcount(t.index & mask) % 2 == 1) t.coeff = -t.coeff;
    }
    return out;
}

bool TowerElement::is_real() const {
    const std::uint32_t mask = tower_->imaginary_mask();
    for (const auto& t : terms_) {
        if (std::popcount(t.index & mask) % 2 == 1) return false;
    }
    return true;
}

CertInterval TowerElement::enclose(mpfr_prec_t precision) const {
    return enclose_terms(terms_, tower_->basis_enclosures(precision), precision);
}

// ---------------------------------------------------------------------------
// Scalar

bool Scalar::is_zero() const {
    if (is_rational()) return rational() == 0;
    if (is_tower()) return tower_element().is_zero();
    const CertInterval& iv = interval();
    bool re = iv.lower().sign() == 0 && iv.upper().sign() == 0;
    if (!iv.has_imaginary()) return re;
    return re && iv.imag_lower().sign() == 0 && iv.imag_upper().sign() == 0;
}

bool Scalar::is_real() const {
    if (is_rational()) return true;
    if (is_tower()) return tower_element().is_real();
    const CertInterval& iv = interval();
    return !iv.has_imaginary() || (iv.imag_lower().sign() == 0 && iv.imag_upper().sign() == 0);
}

std::optional<Rational> Scalar::as_rational() const {
    if (is_rational()) return rational();
    if (is_tower()) return tower_element().as_rational();
    return std::nullopt;
}

TowerPtr Scalar::tower() const {
    if (is_tower()) return tower_element().tower();
    return Tower::rationals();
}

Scalar Scalar::conj() const {
    if (is_rational()) return *this;
    if (is_tower()) return Scalar(tower_element().conj());
    return Scalar(interval().conj());
}

Scalar Scalar::lift(const TowerPtr& t) const {
    if (is_interval()) return *this;
    if (is_rational()) return Scalar(TowerElement::from_rational(t, rational()));
    return Scalar(tower_element().lift(t));
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(Rational(-rational()));
    if (is_tower()) return Scalar(-tower_element());
    return Scalar(-interval());
}

namespace {

TowerElement as_tower(const Scalar& x, const TowerPtr& t) {
    if (x.is_rational()) return TowerElement::from_rational(t, x.rational());
    return x.tower_element().lift(t);
}

}  // namespace

Scalar field_arithmetic(const Scalar& a, const Scalar& b, ArithOp op) {
    if (a.is_rational() && b.is_rational()) {
        switch (op) {
            case ArithOp::add: return Scalar(Rational(a.rational() + b.rational()));
            case ArithOp::sub: return Scalar(Rational(a.rational() - b.rational()));
            case ArithOp::mul: return Scalar(Rational(a.rational() * b.rational()));
            case ArithOp::div:
                if (b.rational() == 0) throw Error(ErrorCode::DivisionByZero, "division by exact zero");
                return Scalar(Rational(a.rational() / b.rational()));
        }
    }
    if (a.is_interval() || b.is_interval()) {
        unsigned bits = std::max(a.is_interval() ? a.interval().precision_bits() : 0u,
                                 b.is_interval() ? b.interval().precision_bits() : 0u);
        CertInterval x = to_interval(a, bits), y = to_interval(b, bits);
        switch (op) {
            case ArithOp::add: return Scalar(x + y);
            case ArithOp::sub: return Scalar(x - y);
            case ArithOp::mul: return Scalar(x * y);
            case ArithOp::div: return Scalar(x / y);
        }
    }
    if (op == ArithOp::mul) {
        if (a.is_rational()) return Scalar(b.tower_element().scaled(a.rational()));
        if (b.is_rational()) return Scalar(a.tower_element().scaled(b.rational()));
    }
    if (op == ArithOp::div && b.is_rational()) {
        if (b.rational() == 0) throw Error(ErrorCode::DivisionByZero, "division by exact zero");
        return Scalar(a.tower_element().scaled(Rational(1) / b.rational()));
    }
    TowerPtr t = common_tower(a.tower(), b.tower());
    TowerElement x = as_tower(a, t), y = as_tower(b, t);
    switch (op) {
        case ArithOp::add: return Scalar(x + y);
        case ArithOp::sub: return Scalar(x - y);
        case ArithOp::mul: return Scalar(x * y);
        case ArithOp::div: return Scalar(x / y);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

Scalar operator+(const Scalar& a, const Scalar& b) { return field_arithmetic(a, b, ArithOp::add); }
Scalar operator-(const Scalar& a, const Scalar& b) { return field_arithmetic(a, b, ArithOp::sub); }
Scalar operator*(const Scalar& a, const Scalar& b) { return field_arithmetic(a, b, ArithOp::mul); }
Scalar operator/(const Scalar& a, const Scalar& b) { return field_arithmetic(a, b, ArithOp::div); }

Scalar& operator+=(Scalar& a, const Scalar& b) {
    if (b.is_zero() && b.is_exact()) return a;
    a = a + b;
    return a;
}

Scalar& operator-=(Scalar& a, const Scalar& b) {
    if (b.is_zero() && b.is_exact()) return a;
    a = a - b;
    return a;
}

Scalar& operator*=(Scalar& a, const Scalar& b) {
    a = a * b;
    return a;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return (a - b).is_zero();
    if (a.is_interval() && b.is_interval()) {
        const CertInterval& x = a.interval();
        const CertInterval& y = b.interval();
        if (x.has_imaginary() != y.has_imaginary()) return false;
        bool same = compare(x.lower(), y.lower()) == 0 && compare(x.upper(), y.upper()) == 0;
        if (x.has_imaginary())
            same = same && compare(x.imag_lower(), y.imag_lower()) == 0 && compare(x.imag_upper(), y.imag_upper()) == 0;
        return same;
    }
    return false;
}

Scalar pow(const Scalar& x, long exponent) {
    if (exponent < 0) return pow(Scalar(1) / x, -exponent);
    Scalar result(1), base = x;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

CertInterval to_interval(const Scalar& x, unsigned bits) {
    if (bits < 8) bits = 8;
    if (x.is_interval()) return x.interval();
    if (x.is_rational()) return CertInterval::from_rational(x.rational(), bits);
    const TowerElement& t = x.tower_element();
    if (auto q = t.as_rational()) return CertInterval::from_rational(*q, bits);
    BigFloat target(64);
    mpfr_set_ui_2exp(target.get(), 1, -static_cast<long>(bits) + 2, MPFR_RNDN);
    mpfr_prec_t prec = bits + 32;
    for (int attempt = 0; attempt < 12; ++attempt) {
        CertInterval iv = t.enclose(prec);
        if (compare(iv.width(), target) <= 0) return iv.with_precision_bits(bits);
        prec *= 2;
    }
    throw Error(ErrorCode::Undecided, "tower enclosure failed to reach requested width");
}

Sign certified_sign(const Scalar& x, unsigned max_bits) {
    if (x.is_rational()) {
        int s = sgn(x.rational());
        return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
    }
    if (x.is_tower()) {
        const TowerElement& t = x.tower_element();
        if (t.is_zero()) return Sign::zero;
        if (!t.is_real()) throw Error(ErrorCode::NotReal, "sign of a non-real tower element");
        if (auto q = t.as_rational()) return certified_sign(Scalar(*q), max_bits);
        for (mpfr_prec_t prec = 64; prec <= static_cast<mpfr_prec_t>(std::max(max_bits, 64u)); prec *= 2) {
            CertInterval iv = t.enclose(prec);
            if (iv.lower().sign() > 0) return Sign::positive;
            if (iv.upper().sign() < 0) return Sign::negative;
        }
        throw Error(ErrorCode::Undecided, "tower element sign undecided at max precision");
    }
    const CertInterval& iv = x.interval();
    if (!x.is_real()) throw Error(ErrorCode::NotReal, "sign of a complex enclosure");
    if (iv.lower().sign() > 0) return Sign::positive;
    if (iv.upper().sign() < 0) return Sign::negative;
    if (iv.lower().sign() == 0 && iv.upper().sign() == 0) return Sign::zero;
    throw Error(ErrorCode::Undecided, "interval straddles zero");
}

// ---------------------------------------------------------------------------
// Square roots

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return Rational(n, d);
}

std::optional<TermList> sqrt_terms(const Tower& tower, const TermList& x, std::size_t level) {
    if (x.empty()) return TermList{};
    if (level == 0) {
        auto r = rational_sqrt(x[0].coeff);
        if (!r) return std::nullopt;
        return TermList{{0u, *r}};
    }
    const std::uint32_t bit = 1u << (level - 1);
    TermList a, b;
    for (const auto& t : x) {
        if (t.index & bit) {
            b.push_back({t.index & ~bit, t.coeff});
        } else {
            a.push_back(t);
        }
    }
    const TermList& r = tower.radicand(level - 1);
    if (b.empty()) {
        if (auto c = sqrt_terms(tower, a, level - 1)) return c;
        TermList quotient = tower.multiply(a, inverse_terms(tower, r, level - 1));
        if (auto d = sqrt_terms(tower, quotient, level - 1)) {
            TermList out = *d;
            for (auto& t : out) t.index |= bit;
            return out;
        }
        return std::nullopt;
    }
    TermList norm = merge_terms(tower.multiply(a, a), tower.multiply(tower.multiply(b, b), r), true);
    auto n = sqrt_terms(tower, norm, level - 1);
    if (!n) return std::nullopt;
    for (int sign : {1, -1}) {
        TermList half = scale_terms(merge_terms(a, *n, sign < 0), Rational(1, 2));
        if (half.empty()) continue;
        auto c = sqrt_terms(tower, half, level - 1);
        if (!c || c->empty()) continue;
        TermList d = tower.multiply(scale_terms(b, Rational(1, 2)), inverse_terms(tower, *c, level - 1));
        TermList out = *c;
        for (auto t : d) {
            t.index |= bit;
            out.push_back(std::move(t));
        }
        std::sort(out.begin(), out.end(), [](const TowerTerm& p, const TowerTerm& q) { return p.index < q.index; });
        return out;
    }
    return std::nullopt;
}

Scalar orient_root(const Scalar& root) {
    CertInterval iv = to_interval(root, 64);
    if (root.is_real()) {
        return certified_sign(root) == Sign::negative ? -root : root;
    }
    if (iv.lower().sign() < 0 && iv.upper().sign() <= 0) return -root;
    if (iv.lower().sign() == 0 && iv.upper().sign() == 0 && iv.imag_upper().sign() < 0) return -root;
    return root;
}

mpz_class square_part(mpz_class& n) {
    mpz_class f = 1;
    n = abs(n);
    if (n == 0) return 0;
    for (unsigned long p = 2; p < 100000 && p * p <= n; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p * p)) {
            n /= p * p;
            f *= p;
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        f *= s;
        n = 1;
    }
    return f;
}

}  // namespace

std::optional<Scalar> exact_sqrt(const Scalar& x) {
    if (x.is_interval()) return std::nullopt;
    if (x.is_rational()) {
        auto r = rational_sqrt(x.rational());
        if (!r) return std::nullopt;
        return Scalar(*r);
    }
    const TowerElement& t = x.tower_element();
    auto r = sqrt_terms(*t.tower(), t.terms(), t.tower()->depth());
    if (!r) return std::nullopt;
    return orient_root(Scalar(TowerElement(t.tower(), *r)));
}

Scalar exact_sqrt_or_adjoin(const Scalar& x, const SqrtOptions& options) {
    if (x.is_interval()) return Scalar(x.interval().sqrt());
    if (!x.is_real()) throw Error(ErrorCode::NotReal, "square root of a non-real value");
    Sign s = certified_sign(x);
    if (s == Sign::zero) return Scalar(0);
    if (s == Sign::negative && !options.allow_imaginary)
        throw Error(ErrorCode::NegativeRadicand, "square root of a negative value");
    if (auto r = exact_sqrt(x)) return *r;
    TowerPtr base = x.tower();
    if (base->depth() + 1 > options.max_depth) {
        if (options.fallback_bits == 0)
            throw Error(ErrorCode::TowerDepthExceeded, "adjunction would exceed tower depth " +
                                                           std::to_string(options.max_depth));
        CertInterval iv = to_interval(x, options.fallback_bits);
        if (s == Sign::negative) {
            CertInterval m = (-iv).sqrt();
            mpfr_prec_t p = m.working_precision();
            return Scalar(CertInterval(BigFloat(p), BigFloat(p), m.lower(), m.upper(), options.fallback_bits));
        }
        return Scalar(iv.sqrt());
    }
    TermList terms;
    if (x.is_rational()) {
        terms = TermList{{0u, x.rational()}};
    } else {
        terms = x.tower_element().terms();
    }
    mpz_class denom_lcm = 1;
    for (const auto& t : terms) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_class content = 0;
    Rational scale(denom_lcm * denom_lcm);
    TermList integral = scale_terms(terms, scale);
    for (const auto& t : integral) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_class f = square_part(content);
    TermList radicand = scale_terms(integral, Rational(1, f * f));
    TowerPtr extended = base->adjoin(radicand);
    TowerElement root = TowerElement::generator(extended, base->depth()).scaled(Rational(f, denom_lcm));
    return Scalar(root);
}

// ---------------------------------------------------------------------------
// Formatting and serialization

namespace {

std::string basis_name(std::uint32_t index) {
    std::string out;
    for (std::uint32_t k = 0; index; ++k, index >>= 1) {
        if (index & 1u) {
            if (!out.empty()) out += "*";
            out += "s" + std::to_string(k + 1);
        }
    }
    return out;
}

}  // namespace

std::string to_string(const Scalar& x) {
    if (x.is_rational()) return x.rational().get_str();
    if (x.is_interval()) {
        const CertInterval& iv = x.interval();
        std::string out = "[" + iv.lower().to_decimal(20) + ", " + iv.upper().to_decimal(20) + "]";
        if (iv.has_imaginary())
            out += " + i[" + iv.imag_lower().to_decimal(20) + ", " + iv.imag_upper().to_decimal(20) + "]";
        return out;
    }
    const TowerElement& t = x.tower_element();
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& term : t.terms()) {
        std::string c = term.coeff.get_str();
        if (!out.empty()) {
            if (term.coeff < 0) {
                out += " - ";
                c = Rational(-term.coeff).get_str();
            } else {
                out += " + ";
            }
        }
        if (term.index == 0) {
            out += c;
        } else {
            out += c + "*" + basis_name(term.index);
        }
    }
    return out;
}

std::string to_decimal(const Scalar& x, int digits) {
    unsigned bits = static_cast<unsigned>(digits * 3.33) + 24;
    CertInterval iv = to_interval(x, bits);
    auto mid = [&](const BigFloat& lo, const BigFloat& hi) {
        BigFloat m(std::max(lo.precision(), hi.precision()) + 1);
        mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
        mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
        return m.to_decimal(digits);
    };
    std::string out = mid(iv.lower(), iv.upper());
    if (iv.has_imaginary() && !(iv.imag_lower().sign() == 0 && iv.imag_upper().sign() == 0))
        out += " + " + mid(iv.imag_lower(), iv.imag_upper()) + "*i";
    return out;
}

namespace detail {

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational: " + text);
    q.canonicalize();
    if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator: " + text);
    return q;
}

namespace {

json coeff_list(const TermList& terms, std::uint32_t dim) {
    json out = json::array();
    std::vector<Rational> dense(dim);
    for (const auto& t : terms) dense[t.index] = t.coeff;
    for (const auto& c : dense) out.push_back(c.get_str());
    return out;
}

TermList terms_from_list(const json& list) {
    TermList out;
    if (!list.is_array()) throw Error(ErrorCode::ParseError, "coefficient list expected");
    for (std::uint32_t i = 0; i < list.size(); ++i) push_term(out, i, rational_from_string(list[i].get<std::string>()));
    return out;
}

}  // namespace

json scalar_to_json(const Scalar& x) {
    json j;
    if (x.is_rational()) {
        j["kind"] = "rat";
        j["num"] = x.rational().get_num().get_str();
        j["den"] = x.rational().get_den().get_str();
    } else if (x.is_tower()) {
        const TowerElement& t = x.tower_element();
        j["kind"] = "tower";
        json rads = json::array();
        for (std::size_t k = 0; k < t.tower()->depth(); ++k)
            rads.push_back(coeff_list(t.tower()->radicand(k), 1u << k));
        j["radicands"] = rads;
        j["coeffs"] = coeff_list(t.terms(), t.tower()->dimension());
    } else {
        const CertInterval& iv = x.interval();
        j["kind"] = "interval";
        j["lo"] = iv.lower().to_hex();
        j["hi"] = iv.upper().to_hex();
        if (iv.has_imaginary()) {
            j["ilo"] = iv.imag_lower().to_hex();
            j["ihi"] = iv.imag_upper().to_hex();
        }
        j["bits"] = iv.precision_bits();
    }
    return j;
}

Scalar scalar_from_json(const json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "rat") {
            mpz_class num(j.at("num").get<std::string>()), den(j.at("den").get<std::string>());
            if (den <= 0) throw Error(ErrorCode::ParseError, "non-positive denominator");
            Rational q(num, den);
            q.canonicalize();
            return Scalar(q);
        }
        if (kind == "tower") {
            TowerPtr t = Tower::rationals();
            for (const auto& r : j.at("radicands")) t = t->adjoin(terms_from_list(r));
            const json& coeffs = j.at("coeffs");
            if (coeffs.size() != t->dimension()) throw Error(ErrorCode::ParseError, "coefficient count mismatch");
            return Scalar(TowerElement(t, terms_from_list(coeffs)));
        }
        if (kind == "interval") {
            unsigned bits = j.value("bits", 64u);
            BigFloat lo = BigFloat::from_hex(j.at("lo").get<std::string>());
            BigFloat hi = BigFloat::from_hex(j.at("hi").get<std::string>());
            if (j.contains("ilo")) {
                return Scalar(CertInterval(std::move(lo), std::move(hi), BigFloat::from_hex(j.at("ilo").get<std::string>()),
                                           BigFloat::from_hex(j.at("ihi").get<std::string>()), bits));
            }
            return Scalar(CertInterval(std::move(lo), std::move(hi), bits));
        }
        throw Error(ErrorCode::ParseError, "unknown scalar kind " + kind);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace detail

std::string to_json(const Scalar& x) { return detail::scalar_to_json(x).dump(); }

Scalar scalar_from_json(const std::string& text) {
    detail::json j;
    try {
        j = detail::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return detail::scalar_from_json(j);
}

}  // namespace planalg
