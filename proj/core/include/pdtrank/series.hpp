#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pdtrank {

using BigInt = boost::multiprecision::cpp_int;

/// Power series in q truncated after q^precision, with exact integer
/// coefficients. Binary operations on series of different precision yield the
/// smaller precision; nothing is ever extended implicitly.
class Series {
public:
    /// The zero series. Throws std::invalid_argument when precision < 0.
    explicit Series(int precision);

    /// Coefficients beyond `precision` are dropped, missing ones are zero.
    Series(int precision, std::vector<BigInt> coefficients);

    static Series one(int precision);
    /// sign * q^exponent (zero if exponent > precision).
    static Series monomial(int precision, int exponent, int sign = 1);

    int precision() const noexcept { return precision_; }
    /// Coefficient of q^n; throws std::out_of_range beyond the precision.
    const BigInt& operator[](int n) const;
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    Series truncated(int precision) const;

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const Series& other);
    Series& operator*=(const BigInt& scalar);
    Series operator-() const;

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const BigInt& s) { return a *= s; }

    /// Multiplicative inverse. The constant term must be +1 or -1, otherwise
    /// std::domain_error is thrown.
    Series inverse() const;

    /// q -> q^m. Throws std::invalid_argument when m < 1.
    Series substitute_power(int m) const;

    Series pow(unsigned exponent) const;

    /// In place: *this *= (1 - sign * q^exponent).
    Series& multiply_binomial(int exponent, int sign = 1);
    /// In place: *this /= (1 - sign * q^exponent).
    Series& divide_binomial(int exponent, int sign = 1);

    /// Coefficient-wise equality; precisions must match too.
    friend bool operator==(const Series&, const Series&) = default;

private:
    int precision_;
    std::vector<BigInt> coeffs_;
};

/// Power series in q whose coefficients are Laurent polynomials in z.
class LaurentPolySeries {
public:
    using Poly = std::map<int, BigInt>;  // z-exponent -> coefficient, zeros omitted

    explicit LaurentPolySeries(int precision);
    /// Lifts a series with z-free coefficients.
    explicit LaurentPolySeries(const Series& s);

    int precision() const noexcept { return precision_; }
    /// Coefficient of q^n; throws std::out_of_range beyond the precision.
    const Poly& operator[](int n) const;

    /// In place: *this /= (1 - z^z_exponent q^q_exponent), q_exponent >= 1.
    LaurentPolySeries& divide_binomial(int z_exponent, int q_exponent);

private:
    int precision_;
    std::vector<Poly> coeffs_;
};

/// (q^m; q^m)_inf to precision N. Throws std::invalid_argument when m < 1.
Series euler_product(int m, int precision);

/// (sign q^j; q^m)_inf = prod_{n>=1} (1 - sign q^(j + (n-1) m)), j >= 1, m >= 1.
Series pochhammer(int j, int m, int sign, int precision);

/// sum_{k>=1} (q^k + q^{2k}) / (1 + q^{3k}).
Series lambert_pdt(int precision);

/// sum_{n in Z} (-1)^n q^{n^2}.
Series theta_alternating(int precision);

/// Product factor shared by the PD and PD_t generating functions:
/// (q^6;q^6) / ((q;q)(q^2;q^2)(q^3;q^3)).
Series pd_prefactor(int precision);

/// Generating function of PD_t(n): pd_prefactor * lambert_pdt.
Series pdt_generating_function(int precision);

/// (q^3;q^3)^6 (q^2;q^2) / ((q^6;q^6)^3 (q;q)^2); equals 2 * lambert_pdt + 1.
Series lambert_eta_quotient(int precision);

/// Checks 2 * lambert_pdt + 1 == lambert_eta_quotient through q^precision.
bool verify_lambert_eta_identity(int precision);

/// Checks (q;q)^2/(q^2;q^2) == (q;q^2)^2 (q^2;q^2) == theta_alternating through q^precision.
bool verify_theta_product_identity(int precision);

/// Twice the mod-3 rank series: (q^3;q^3)^4/(q^6;q^6)^2
///   - theta_alternating / ((q^3;q^6)^2 (q^6;q^6)).
/// Its q^n coefficient is 2 (N(0,3;n) - N(1,3;n)) for the signed pdt-rank counts.
Series dissection_series(int precision);

/// (q;q)_inf / ((zq;q)_inf (z^{-1}q;q)_inf): the crank generating function.
LaurentPolySeries crank_generating_function(int precision);

std::string to_string(const BigInt& v);

}  // namespace pdtrank
