#include "pdtrank/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdtrank {

namespace {

std::size_t idx(int n) { return static_cast<std::size_t>(n); }

void check_precision(int precision) {
    if (precision < 0) throw std::invalid_argument("series precision must be non-negative");
}

}  // namespace

Series::Series(int precision) : precision_(precision) {
    check_precision(precision);
    coeffs_.assign(idx(precision) + 1, BigInt(0));
}

Series::Series(int precision, std::vector<BigInt> coefficients)
    : precision_(precision), coeffs_(std::move(coefficients)) {
    check_precision(precision);
    coeffs_.resize(idx(precision) + 1, BigInt(0));
}

Series Series::one(int precision) {
    Series s(precision);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::monomial(int precision, int exponent, int sign) {
    Series s(precision);
    if (exponent < 0) throw std::invalid_argument("monomial exponent must be non-negative");
    if (exponent <= precision) s.coeffs_[idx(exponent)] = sign;
    return s;
}

const BigInt& Series::operator[](int n) const {
    if (n < 0 || n > precision_) {
        throw std::out_of_range("coefficient q^" + std::to_string(n) + " beyond precision " +
                                std::to_string(precision_));
    }
    return coeffs_[idx(n)];
}

Series Series::truncated(int precision) const {
    if (precision > precision_) throw std::invalid_argument("cannot extend a truncated series");
    return Series(precision, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + precision + 1));
}

Series& Series::operator+=(const Series& other) {
    precision_ = std::min(precision_, other.precision_);
    coeffs_.resize(idx(precision_) + 1);
    for (int n = 0; n <= precision_; ++n) coeffs_[idx(n)] += other.coeffs_[idx(n)];
    return *this;
}

Series& Series::operator-=(const Series& other) {
    precision_ = std::min(precision_, other.precision_);
    coeffs_.resize(idx(precision_) + 1);
    for (int n = 0; n <= precision_; ++n) coeffs_[idx(n)] -= other.coeffs_[idx(n)];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    const int precision = std::min(a.precision_, b.precision_);
    Series out(precision);
    for (int i = 0; i <= precision; ++i) {
        const BigInt& ai = a.coeffs_[idx(i)];
        if (ai == 0) continue;
        for (int j = 0; i + j <= precision; ++j) {
            const BigInt& bj = b.coeffs_[idx(j)];
            if (bj != 0) out.coeffs_[idx(i + j)] += ai * bj;
        }
    }
    return out;
}

Series& Series::operator*=(const Series& other) { return *this = *this * other; }

Series& Series::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Series Series::operator-() const {
    Series out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Series Series::inverse() const {
    const BigInt& lead = coeffs_[0];
    if (lead != 1 && lead != -1) {
        throw std::domain_error("series inverse needs constant term +1 or -1, got " + to_string(lead));
    }
    Series out(precision_);
    out.coeffs_[0] = lead;  // 1/lead == lead for a unit
    for (int n = 1; n <= precision_; ++n) {
        BigInt acc = 0;
        for (int i = 1; i <= n; ++i) {
            if (coeffs_[idx(i)] != 0) acc += coeffs_[idx(i)] * out.coeffs_[idx(n - i)];
        }
        out.coeffs_[idx(n)] = -lead * acc;
    }
    return out;
}

Series Series::substitute_power(int m) const {
    if (m < 1) throw std::invalid_argument("substitute_power needs m >= 1");
    Series out(precision_);
    for (int n = 0; n * m <= precision_; ++n) out.coeffs_[idx(n * m)] = coeffs_[idx(n)];
    return out;
}

Series Series::pow(unsigned exponent) const {
    Series result = one(precision_);
    Series base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

Series& Series::multiply_binomial(int exponent, int sign) {
    if (exponent < 1) throw std::invalid_argument("binomial exponent must be positive");
    for (int n = precision_; n >= exponent; --n) {
        coeffs_[idx(n)] -= sign * coeffs_[idx(n - exponent)];
    }
    return *this;
}

Series& Series::divide_binomial(int exponent, int sign) {
    if (exponent < 1) throw std::invalid_argument("binomial exponent must be positive");
    for (int n = exponent; n <= precision_; ++n) {
        coeffs_[idx(n)] += sign * coeffs_[idx(n - exponent)];
    }
    return *this;
}

LaurentPolySeries::LaurentPolySeries(int precision) : precision_(precision) {
    check_precision(precision);
    coeffs_.resize(idx(precision) + 1);
}

LaurentPolySeries::LaurentPolySeries(const Series& s) : LaurentPolySeries(s.precision()) {
    for (int n = 0; n <= precision_; ++n) {
        if (s[n] != 0) coeffs_[idx(n)][0] = s[n];
    }
}

const LaurentPolySeries::Poly& LaurentPolySeries::operator[](int n) const {
    if (n < 0 || n > precision_) {
        throw std::out_of_range("coefficient q^" + std::to_string(n) + " beyond precision " +
                                std::to_string(precision_));
    }
    return coeffs_[idx(n)];
}

LaurentPolySeries& LaurentPolySeries::divide_binomial(int z_exponent, int q_exponent) {
    if (q_exponent < 1) throw std::invalid_argument("binomial q-exponent must be positive");
    // b_n = a_n + z^s b_{n-e}, in increasing n.
    for (int n = q_exponent; n <= precision_; ++n) {
        auto& target = coeffs_[idx(n)];
        for (const auto& [power, c] : coeffs_[idx(n - q_exponent)]) {
            auto& slot = target[power + z_exponent];
            slot += c;
            if (slot == 0) target.erase(power + z_exponent);
        }
    }
    return *this;
}

Series euler_product(int m, int precision) {
    if (m < 1) throw std::invalid_argument("euler_product needs m >= 1");
    return pochhammer(m, m, 1, precision);
}

Series pochhammer(int j, int m, int sign, int precision) {
    if (j < 1 || m < 1) throw std::invalid_argument("pochhammer needs j >= 1 and m >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer sign must be +1 or -1");
    Series s = Series::one(precision);
    for (int e = j; e <= precision; e += m) s.multiply_binomial(e, sign);
    return s;
}

Series lambert_pdt(int precision) {
    std::vector<BigInt> c(idx(precision) + 1, BigInt(0));
    for (int k = 1; k <= precision; ++k) {
        int sign = 1;
        for (int shift = 0; k + shift <= precision; shift += 3 * k, sign = -sign) {
            c[idx(k + shift)] += sign;
            if (2 * k + shift <= precision) c[idx(2 * k + shift)] += sign;
        }
    }
    return Series(precision, std::move(c));
}

Series theta_alternating(int precision) {
    Series s = Series::one(precision);
    std::vector<BigInt> c(s.coefficients());
    for (int n = 1; n * n <= precision; ++n) c[idx(n * n)] = (n % 2 == 0) ? 2 : -2;
    return Series(precision, std::move(c));
}

Series pd_prefactor(int precision) {
    Series s = euler_product(6, precision);
    for (int m : {1, 2, 3}) {
        for (int e = m; e <= precision; e += m) s.divide_binomial(e);
    }
    return s;
}

Series pdt_generating_function(int precision) {
    return pd_prefactor(precision) * lambert_pdt(precision);
}

Series lambert_eta_quotient(int precision) {
    const Series numerator = euler_product(3, precision).pow(6) * euler_product(2, precision);
    const Series denominator = euler_product(6, precision).pow(3) * euler_product(1, precision).pow(2);
    return numerator * denominator.inverse();
}

bool verify_lambert_eta_identity(int precision) {
    Series lhs = lambert_pdt(precision) * BigInt(2) + Series::one(precision);
    return lhs == lambert_eta_quotient(precision);
}

bool verify_theta_product_identity(int precision) {
    const Series eta1 = euler_product(1, precision);
    const Series eta2 = euler_product(2, precision);
    const Series quotient = eta1.pow(2) * eta2.inverse();
    const Series product = pochhammer(1, 2, 1, precision).pow(2) * eta2;
    return quotient == product && product == theta_alternating(precision);
}

Series dissection_series(int precision) {
    const Series eta3 = euler_product(3, precision);
    const Series eta6 = euler_product(6, precision);
    const Series first = eta3.pow(4) * eta6.pow(2).inverse();
    const Series second =
        theta_alternating(precision) * (pochhammer(3, 6, 1, precision).pow(2) * eta6).inverse();
    return first - second;
}

LaurentPolySeries crank_generating_function(int precision) {
    LaurentPolySeries s(euler_product(1, precision));
    for (int n = 1; n <= precision; ++n) {
        s.divide_binomial(1, n);
        s.divide_binomial(-1, n);
    }
    return s;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace pdtrank
