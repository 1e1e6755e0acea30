#include "starpt/algebra/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace starpt::algebra {

unsigned euler_phi(unsigned n) {
    if (n == 0) return 0;
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

std::map<unsigned, UniPoly<Rational>>& phi_cache() {
    static std::map<unsigned, UniPoly<Rational>> cache;
    return cache;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

UniPoly<Rational> cyclotomic_locked(unsigned n) {
    auto& cache = phi_cache();
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<Rational> xn(n + 1, Rational(0));
    xn[0] = -1;
    xn[n] = 1;
    UniPoly<Rational> p(std::move(xn));
    for (unsigned m = 1; m < n; ++m)
        if (n % m == 0) p = exact_quotient(p, cyclotomic_locked(m));
    cache.emplace(n, p);
    return p;
}

}  // namespace

UniPoly<Rational> cyclotomic_poly(unsigned n) {
    if (n == 0) fail(Errc::DimensionMismatch, "cyclotomic_poly needs n >= 1");
    std::lock_guard<std::mutex> lock(registry_mutex());
    return cyclotomic_locked(n);
}

CycloField::CycloField(unsigned n) : n_(n), deg_(euler_phi(n)), modulus_(cyclotomic_locked(n)) {
    // x^deg = -(lower part of Phi_n); successive higher powers shift and refold.
    std::vector<Rational> cur(deg_);
    for (std::size_t i = 0; i < deg_; ++i) cur[i] = -modulus_.coeffs()[i];
    fold_.push_back(cur);
    for (std::size_t k = 1; k < deg_; ++k) {
        std::vector<Rational> next(deg_, Rational(0));
        Rational top = cur[deg_ - 1];
        for (std::size_t i = deg_ - 1; i > 0; --i) next[i] = cur[i - 1];
        for (std::size_t i = 0; i < deg_; ++i) next[i] += top * fold_[0][i];
        fold_.push_back(next);
        cur = std::move(next);
    }
}

FieldPtr CycloField::get(unsigned n) {
    if (n == 0) fail(Errc::DimensionMismatch, "field conductor must be positive");
    static std::map<unsigned, std::unique_ptr<CycloField>> registry;
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry.find(n);
    if (it == registry.end()) it = registry.emplace(n, std::unique_ptr<CycloField>(new CycloField(n))).first;
    return it->second.get();
}

std::vector<Rational> CycloField::reduce(std::vector<Rational> v) const {
    if (v.size() <= deg_) {
        v.resize(deg_, Rational(0));
        return v;
    }
    std::vector<Rational> r(v.begin(), v.begin() + static_cast<long>(deg_));
    // fold_ covers x^deg .. x^(2deg-1); longer inputs are folded from the top down
    for (std::size_t k = v.size(); k-- > deg_;) {
        if (sgn(v[k]) == 0) continue;
        std::size_t off = k - deg_;
        if (off < deg_) {
            for (std::size_t i = 0; i < deg_; ++i) r[i] += v[k] * fold_[off][i];
        } else {
            // x^k = x^(k-deg) * x^deg
            for (std::size_t i = 0; i < deg_; ++i) {
                if (sgn(fold_[0][i]) == 0) continue;
                Rational c = v[k] * fold_[0][i];
                std::size_t e = off + i;
                if (e < deg_)
                    r[e] += c;
                else
                    v[e] += c;
            }
        }
    }
    return r;
}

CycloNum CycloField::zero() const { return CycloNum(this, std::vector<Rational>(deg_, Rational(0))); }

CycloNum CycloField::one() const { return from_int(1); }

CycloNum CycloField::from_rational(const Rational& q) const {
    std::vector<Rational> c(deg_, Rational(0));
    c[0] = q;
    return CycloNum(this, std::move(c));
}

CycloNum CycloField::from_int(long k) const { return from_rational(Rational(k)); }

CycloNum CycloField::gen() const { return root_of_unity(1); }

CycloNum CycloField::root_of_unity(long k) const {
    long r = k % static_cast<long>(n_);
    if (r < 0) r += n_;
    std::vector<Rational> v(static_cast<std::size_t>(r) + 1, Rational(0));
    v[static_cast<std::size_t>(r)] = 1;
    return CycloNum(this, reduce(std::move(v)));
}

CycloNum CycloField::from_poly(const UniPoly<Rational>& p) const {
    auto r = divmod(p, modulus_).second;
    std::vector<Rational> c = r.coeffs();
    c.resize(deg_, Rational(0));
    return CycloNum(this, std::move(c));
}

CycloNum CycloField::embed(const CycloNum& x) const {
    unsigned m = x.field()->conductor();
    if (m == n_) return x;
    if (n_ % m != 0)
        fail(Errc::FieldMismatch,
             "cannot embed Q(zeta_" + std::to_string(m) + ") into Q(zeta_" + std::to_string(n_) + ")");
    const std::size_t step = n_ / m;
    std::vector<Rational> v(step * (x.coeffs().size() - 1) + 1, Rational(0));
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) v[i * step] = x.coeffs()[i];
    return CycloNum(this, reduce(std::move(v)));
}

CycloNum::CycloNum() : CycloNum(CycloField::rationals()->zero()) {}

CycloNum::CycloNum(FieldPtr field, std::vector<Rational> coeffs) : field_(field), c_(std::move(coeffs)) {
    if (c_.size() != field_->degree()) c_ = field_->reduce(std::move(c_));
}

bool CycloNum::is_zero() const noexcept {
    for (const auto& a : c_)
        if (sgn(a) != 0) return false;
    return true;
}

bool CycloNum::is_rational() const noexcept {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool CycloNum::is_one() const noexcept { return is_rational() && c_[0] == 1; }

std::optional<Rational> CycloNum::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

void CycloNum::check_same(const CycloNum& o) const {
    if (field_ != o.field_)
        fail(Errc::FieldMismatch, "mixed conductors " + std::to_string(field_->conductor()) + " and " +
                                      std::to_string(o.field_->conductor()));
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    check_same(o);
    const std::size_t n = c_.size();
    if (n == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(o.c_[j]) != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    c_ = field_->reduce(std::move(prod));
    return *this;
}

CycloNum operator*(CycloNum a, long k) {
    for (auto& c : a.c_) c *= k;
    return a;
}

CycloNum operator*(CycloNum a, const Rational& q) {
    for (auto& c : a.c_) c *= q;
    return a;
}

CycloNum CycloNum::inv() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    if (is_rational()) return field_->from_rational(1 / c_[0]);
    // s*a + t*Phi = 1, so s is the inverse of a modulo Phi
    auto eg = ext_gcd(UniPoly<Rational>(c_), field_->modulus(), Rational(1));
    if (eg.g.degree() != 0) fail(Errc::DivisionByZero, "element is not invertible");
    return field_->from_poly(eg.s);
}

CycloNum CycloNum::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    CycloNum result = field_->one();
    CycloNum base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.field_ != b.field_) {
        // different fields can only agree on rationals
        return a.is_rational() && b.is_rational() && a.c_[0] == b.c_[0];
    }
    return a.c_ == b.c_;
}

std::string CycloNum::str() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& a = c_[i];
        if (sgn(a) == 0) continue;
        Rational absa = abs(a);
        if (sgn(a) < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (i == 0) {
            out += absa.get_str();
            continue;
        }
        if (absa != 1) out += absa.get_str() + "*";
        out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::optional<unsigned> root_of_unity_order(const CycloNum& x) {
    if (x.is_zero()) return std::nullopt;
    const unsigned limit = 2 * x.field()->conductor();
    CycloNum p = x;
    for (unsigned k = 1; k <= limit; ++k) {
        if (p.is_one()) return k;
        p *= x;
    }
    return std::nullopt;
}

namespace {

// Rational square root when q is a square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    Integer num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    Integer rn = sqrt(num), rd = sqrt(den);
    return Rational(rn, rd);
}

}  // namespace

std::optional<CycloNum> try_sqrt(const CycloNum& x) {
    FieldPtr f = x.field();
    if (x.is_zero()) return x;
    const long n = f->conductor();
    // x = q * zeta^k with q rational; then sqrt = sqrt(+-q) * zeta^(k/2) when available
    for (long k = 0; k < n; ++k) {
        CycloNum y = x * f->root_of_unity(-k);
        auto q = y.as_rational();
        if (!q) continue;
        for (int sign : {1, -1}) {
            Rational qq = *q * sign;
            auto r = rational_sqrt(qq);
            if (!r) continue;
            // need w with w^2 = sign * zeta^k
            for (long j = 0; j < n; ++j) {
                CycloNum w = f->root_of_unity(j);
                if (w * w == f->root_of_unity(k) * static_cast<long>(sign)) {
                    CycloNum cand = w * *r;
                    if (cand * cand == x) return cand;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace starpt::algebra
