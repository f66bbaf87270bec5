#include "tansum/polynomials.hpp"

#include <sstream>

#include "tansum/exact_sums.hpp"

namespace tansum {

namespace {

const BigRational kZero{};

// Exact interpolation through (xs[i], ys[i]) via Newton's divided differences,
// expanded to monomial coefficients.
RationalPolynomial interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
    const std::size_t k = xs.size();
    std::vector<BigRational> dd = ys;  // dd[i] becomes the order-i divided difference
    for (std::size_t lvl = 1; lvl < k; ++lvl)
        for (std::size_t i = k - 1; i >= lvl; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);

    RationalPolynomial poly;
    poly.coeffs.assign(k, BigRational(0));
    std::vector<BigRational> basis(k, BigRational(0));  // product (x - xs[0])...(x - xs[lvl-1])
    basis[0] = 1;
    std::size_t deg = 0;
    for (std::size_t lvl = 0; lvl < k; ++lvl) {
        for (std::size_t i = 0; i <= deg; ++i) poly.coeffs[i] += dd[lvl] * basis[i];
        if (lvl + 1 == k) break;
        for (std::size_t i = deg + 1; i > 0; --i)
            basis[i] = basis[i - 1] - xs[lvl] * basis[i];
        basis[0] = -xs[lvl] * basis[0];
        ++deg;
    }
    while (poly.coeffs.size() > 1 && poly.coeffs.back() == 0) poly.coeffs.pop_back();
    return poly;
}

BigRational sigma_node_value(int n, int p, SigmaTarget target) {
    const BigInt s = sigma(n, p);
    if (target == SigmaTarget::sigma) return BigRational(s);
    return BigRational(2 * s, BigInt(n) * (n - 1));
}

std::string rational_str(const BigRational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

int RationalPolynomial::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[i] != 0) return i;
    return 0;
}

BigRational RationalPolynomial::eval(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

const BigRational& RationalPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs.size())) return kZero;
    return coeffs[k];
}

int BinomialPolynomial::degree() const {
    int d = 0;
    for (const auto& [k, c] : coeffs)
        if (c != 0) d = std::max(d, k);
    return d;
}

BigInt BinomialPolynomial::eval(std::int64_t n) const {
    BigInt acc = 0;
    for (const auto& [k, c] : coeffs) acc += c * binomial(n, k);
    return acc;
}

BigRational bernoulli(int k) {
    if (k < 0) throw std::domain_error("bernoulli: negative index");
    std::vector<BigRational> b(k + 1);
    b[0] = 1;
    for (int m = 1; m <= k; ++m) {
        BigRational acc = 0;
        for (int j = 0; j < m; ++j) acc += BigRational(binomial(m + 1, j)) * b[j];
        b[m] = -acc / BigRational(m + 1);
    }
    return b[k];
}

BigRational leading_coefficient(int p) {
    if (p < 1) throw std::domain_error("leading_coefficient: p must be >= 1");
    const BigInt two_2p = pow_bigint(2, 2 * static_cast<unsigned>(p));
    BigInt fact = 1;
    for (int i = 2; i <= 2 * p; ++i) fact *= i;
    BigRational b = bernoulli(2 * p);
    if (b < 0) b = -b;
    return BigRational(two_2p / 2 * (two_2p - 1)) * b / BigRational(fact);
}

RationalPolynomial interpolate_sigma_poly(int p, SigmaTarget target) {
    if (p < 1) throw std::domain_error("interpolate_sigma_poly: p must be >= 1");
    // sigma has degree 2p and is pinned at n = 1, 3, ..., 4p+1.
    // sigma* = 2 sigma/(n(n-1)) has degree 2p-2; n = 1 is excluded (0/0 there).
    const int first = (target == SigmaTarget::sigma) ? 1 : 3;
    std::vector<BigRational> xs, ys;
    for (int n = first; n <= 4 * p + 1; n += 2) {
        xs.emplace_back(n);
        ys.push_back(sigma_node_value(n, p, target));
    }
    RationalPolynomial poly = interpolate(xs, ys);
    for (int n = 4 * p + 3; n <= 4 * p + 5; n += 2) {
        if (poly.eval(BigRational(n)) != sigma_node_value(n, p, target)) {
            throw invariant_violation("interpolate_sigma_poly: held-out node n = " + std::to_string(n) +
                                      " mismatches; degree claim falsified for p = " + std::to_string(p));
        }
    }
    return poly;
}

BinomialPolynomial to_binomial_basis(const RationalPolynomial& poly) {
    const int deg = poly.degree();
    std::vector<BigRational> row;
    row.reserve(deg + 1);
    for (int i = 0; i <= deg; ++i) row.push_back(poly.eval(BigRational(i)));

    BinomialPolynomial out;
    for (int k = 0; k <= deg; ++k) {
        const BigRational delta = row.front();  // Delta^k poly(0)
        if (boost::multiprecision::denominator(delta) != 1) {
            throw invariant_violation("to_binomial_basis: Delta^" + std::to_string(k) +
                                      " poly(0) = " + rational_str(delta) + " is not an integer");
        }
        if (delta != 0) out.coeffs[k] = BigInt(boost::multiprecision::numerator(delta));
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
    }
    return out;
}

bool verify_boundary_identity(int n) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("verify_boundary_identity: n must be odd and >= 3");
    const int m = (n - 1) / 2;
    SigmaCache cache(n);

    BigInt interval_form = 0;  // sum over S_n((n-1)^(2j)), with S_n(1) = 1 at j = 0
    for (int j = 0; j <= m; ++j) {
        const BigInt s_val = (j == 0) ? BigInt(1) : exact_div(2 * cache.value(j), n, "verify_boundary_identity");
        const BigInt term = binomial(n, 2 * j + 1) * s_val;
        interval_form += (j % 2 == 0) ? term : -term;
    }

    BigInt sigma_form = 0;  // the rewritten form summing sigma directly
    for (int j = 1; j <= m; ++j) {
        const BigInt term = binomial(n, 2 * j + 1) * cache.value(j);
        sigma_form += (j % 2 == 1) ? term : -term;
    }

    return interval_form == 1 && sigma_form == binomial(n, 2);
}

bool verify_recurrence_relation(int n, int p) {
    if (n < 3 || n % 2 == 0) throw std::domain_error("verify_recurrence_relation: n must be odd and >= 3");
    if (p < (n + 1) / 2) throw std::domain_error("verify_recurrence_relation: requires p >= (n+1)/2");
    SigmaCache cache(n);
    BigInt acc = 0;
    for (int k = 0; k <= (n - 1) / 2; ++k) {
        const BigInt term = binomial(n, 2 * k) * cache.value(p - k);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc == 0;
}

std::string format_monomial(const RationalPolynomial& poly) {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= poly.degree(); ++k) {
        const BigRational& c = poly.coeff(k);
        if (c == 0 && poly.degree() > 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        BigRational a = c < 0 ? BigRational(-c) : c;
        if (k == 0 || a != 1) os << a;
        if (k > 0) {
            if (a != 1) os << "*";
            os << "n";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string format_binomial(const BinomialPolynomial& poly) {
    if (poly.coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : poly.coeffs) {
        if (!first) os << (c < 0 ? "-" : "+");
        else if (c < 0) os << "-";
        first = false;
        const BigInt a = c < 0 ? BigInt(-c) : c;
        if (a != 1) os << a;
        os << "C(n," << k << ")";
    }
    return os.str();
}

}  // namespace tansum
