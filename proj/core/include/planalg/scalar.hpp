#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "planalg/error.hpp"

namespace planalg {

using Integer = mpz_class;
using Rational = mpq_class;

/// RAII wrapper around an MPFR number. Used as an exact dyadic interval endpoint.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision = 64);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

    int sign() const { return mpfr_sgn(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    /// Exact serialization as "[-]0x<hex mantissa>p<binary exponent>".
    std::string to_hex() const;
    static BigFloat from_hex(const std::string& text);
    std::string to_decimal(int digits) const;

private:
    mpfr_t value_;
};

int compare(const BigFloat& a, const BigFloat& b);

/// Outward-rounded enclosure with dyadic endpoints. A value may carry an
/// imaginary rectangle component; purely real enclosures have none.
class CertInterval {
public:
    CertInterval();
    CertInterval(BigFloat lower, BigFloat upper, unsigned precision_bits);
    CertInterval(BigFloat lower, BigFloat upper, BigFloat imag_lower, BigFloat imag_upper,
                 unsigned precision_bits);

    static CertInterval from_rational(const Rational& q, unsigned precision_bits);

    const BigFloat& lower() const { return lo_; }
    const BigFloat& upper() const { return hi_; }
    const BigFloat& imag_lower() const { return ilo_; }
    const BigFloat& imag_upper() const { return ihi_; }
    bool has_imaginary() const { return complex_; }
    unsigned precision_bits() const { return bits_; }
    mpfr_prec_t working_precision() const;

    bool contains_zero() const;
    bool contains(const Rational& q) const;
    /// Largest of the real and imaginary widths, rounded up.
    BigFloat width() const;
    /// Upper bound on the modulus, rounded up.
    BigFloat magnitude_bound() const;
    CertInterval real_part() const;
    CertInterval imag_part() const;
    CertInterval with_precision_bits(unsigned bits) const;

    friend CertInterval operator+(const CertInterval& a, const CertInterval& b);
    friend CertInterval operator-(const CertInterval& a, const CertInterval& b);
    friend CertInterval operator*(const CertInterval& a, const CertInterval& b);
    friend CertInterval operator/(const CertInterval& a, const CertInterval& b);
    CertInterval operator-() const;
    CertInterval conj() const;
    CertInterval sqrt() const;

private:
    BigFloat lo_, hi_, ilo_, ihi_;
    bool complex_ = false;
    unsigned bits_ = 64;
};

struct TowerTerm {
    std::uint32_t index;
    Rational coeff;
};
using TermList = std::vector<TowerTerm>;

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// A tower Q(s_0, ..., s_{d-1}) with s_k^2 = r_k, r_k an element of the
/// previous level. The basis of level d is e_m = prod_{k in m} s_k for bit
/// masks m < 2^d. Towers are interned: adjoining the same radicand to the
/// same tower returns the same object, so compatibility is pointer ancestry.
class Tower : public std::enable_shared_from_this<Tower> {
public:
    static TowerPtr rationals();

    std::size_t depth() const { return radicands_.size(); }
    std::uint32_t dimension() const { return 1u << depth(); }
    const TermList& radicand(std::size_t level) const { return radicands_.at(level); }
    bool imaginary(std::size_t level) const { return (imaginary_mask_ >> level) & 1u; }
    std::uint32_t imaginary_mask() const { return imaginary_mask_; }
    TowerPtr parent() const { return parent_; }
    TowerPtr ancestor(std::size_t depth) const;
    bool extends(const Tower& other) const;

    /// Interned extension by sqrt(radicand). The caller guarantees properness.
    TowerPtr adjoin(const TermList& radicand) const;

    TermList multiply(const TermList& a, const TermList& b) const;
    const std::vector<CertInterval>& basis_enclosures(mpfr_prec_t precision) const;
    std::string key() const;

    struct Private;
    Tower(const Private&, TowerPtr parent, std::vector<TermList> radicands, std::uint32_t imag_mask);

private:
    void build_table();
    TermList multiply_basis(std::uint32_t i, std::uint32_t j) const;

    TowerPtr parent_;
    std::vector<TermList> radicands_;
    std::uint32_t imaginary_mask_ = 0;
    std::vector<TermList> table_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::weak_ptr<const Tower>> children_;
    mutable std::map<mpfr_prec_t, std::vector<CertInterval>> enclosure_cache_;
};

class TowerElement {
public:
    TowerElement();
    TowerElement(TowerPtr tower, TermList terms);
    static TowerElement from_rational(TowerPtr tower, const Rational& q);
    static TowerElement generator(TowerPtr tower, std::size_t level);

    const TowerPtr& tower() const { return tower_; }
    const TermList& terms() const { return terms_; }
    /// Dense coefficient list of length 2^depth in the multi-radical basis.
    std::vector<Rational> coefficients() const;
    bool is_zero() const { return terms_.empty(); }
    std::optional<Rational> as_rational() const;
    TowerElement lift(const TowerPtr& target) const;

    TowerElement operator+(const TowerElement& other) const;
    TowerElement operator-(const TowerElement& other) const;
    TowerElement operator*(const TowerElement& other) const;
    TowerElement operator/(const TowerElement& other) const;
    TowerElement operator-() const;
    TowerElement scaled(const Rational& q) const;
    TowerElement inverse() const;
    TowerElement conj() const;
    bool is_real() const;

    CertInterval enclose(mpfr_prec_t precision) const;

private:
    TowerPtr tower_;
    TermList terms_;
};

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

class Scalar {
public:
    using Variant = std::variant<Rational, TowerElement, CertInterval>;

    Scalar() : value_(Rational(0)) {}
    Scalar(int v) : value_(Rational(v)) {}
    Scalar(long v) : value_(Rational(v)) {}
    Scalar(Rational v) : value_(std::move(v)) {}
    Scalar(TowerElement v) : value_(std::move(v)) {}
    Scalar(CertInterval v) : value_(std::move(v)) {}

    const Variant& value() const { return value_; }
    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    bool is_tower() const { return std::holds_alternative<TowerElement>(value_); }
    bool is_interval() const { return std::holds_alternative<CertInterval>(value_); }
    bool is_exact() const { return !is_interval(); }
    const Rational& rational() const { return std::get<Rational>(value_); }
    const TowerElement& tower_element() const { return std::get<TowerElement>(value_); }
    const CertInterval& interval() const { return std::get<CertInterval>(value_); }

    /// Structural zero for exact values; a degenerate [0,0] enclosure otherwise.
    bool is_zero() const;
    bool is_real() const;
    std::optional<Rational> as_rational() const;
    TowerPtr tower() const;
    Scalar conj() const;
    Scalar lift(const TowerPtr& tower) const;
    Scalar operator-() const;

private:
    Variant value_;
};

enum class ArithOp { add, sub, mul, div };
enum class Sign { negative, zero, positive };

Scalar field_arithmetic(const Scalar& a, const Scalar& b, ArithOp op);
Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);
Scalar& operator+=(Scalar& a, const Scalar& b);
Scalar& operator-=(Scalar& a, const Scalar& b);
Scalar& operator*=(Scalar& a, const Scalar& b);
/// Exact equality for exact values, identical endpoints for enclosures.
bool operator==(const Scalar& a, const Scalar& b);
Scalar pow(const Scalar& x, long exponent);

Sign certified_sign(const Scalar& x, unsigned max_bits = 4096);
CertInterval to_interval(const Scalar& x, unsigned bits);

struct SqrtOptions {
    std::size_t max_depth = 3;
    /// Permit negative radicands, adjoining an imaginary square root.
    bool allow_imaginary = false;
    /// When non-zero, return a certified enclosure instead of raising
    /// TowerDepthExceeded.
    unsigned fallback_bits = 0;
};

/// Square root inside the current tower, if one exists.
std::optional<Scalar> exact_sqrt(const Scalar& x);
Scalar exact_sqrt_or_adjoin(const Scalar& x, const SqrtOptions& options = {});

std::string to_string(const Scalar& x);
std::string to_decimal(const Scalar& x, int digits);
std::string to_json(const Scalar& x);
Scalar scalar_from_json(const std::string& text);

}  // namespace planalg
