#include "starpt/algebra/multipoly.hpp"

#include <algorithm>

namespace starpt::algebra {

unsigned total_degree(const Monomial& m) noexcept {
    unsigned s = 0;
    for (auto e : m) s += e;
    return s;
}

bool GrlexDesc::operator()(const Monomial& a, const Monomial& b) const noexcept {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (unsigned i = 0; i < kMaxVars; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

namespace {

void enumerate(unsigned n, unsigned i, unsigned left, Monomial& cur, std::vector<Monomial>& out) {
    if (i + 1 == n) {
        cur[i] = static_cast<std::uint8_t>(left);
        out.push_back(cur);
        cur[i] = 0;
        return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
        cur[i] = static_cast<std::uint8_t>(e);
        enumerate(n, i + 1, left - e, cur, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(unsigned n, unsigned d) {
    std::vector<Monomial> out;
    if (n == 0) return out;
    Monomial cur{};
    enumerate(n, 0, d, cur, out);
    return out;
}

MultiPoly::MultiPoly(FieldPtr field, unsigned nvars) : field_(field), nvars_(nvars) {
    if (nvars > kMaxVars) fail(Errc::DimensionMismatch, "too many variables");
}

MultiPoly MultiPoly::constant(FieldPtr field, unsigned nvars, const CycloNum& c) {
    MultiPoly p(field, nvars);
    p.add_term(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::variable(FieldPtr field, unsigned nvars, unsigned i) {
    if (i >= nvars) fail(Errc::UndeclaredVariable, "variable index " + std::to_string(i) + " out of range");
    Monomial m{};
    m[i] = 1;
    return term(field, nvars, m, field->one());
}

MultiPoly MultiPoly::term(FieldPtr field, unsigned nvars, const Monomial& m, const CycloNum& c) {
    MultiPoly p(field, nvars);
    p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::linear(FieldPtr field, const Vector& coeffs) {
    MultiPoly p(field, static_cast<unsigned>(coeffs.size()));
    for (unsigned i = 0; i < coeffs.size(); ++i) {
        Monomial m{};
        m[i] = 1;
        p.add_term(m, coeffs[i]);
    }
    return p;
}

int MultiPoly::degree() const noexcept {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

bool MultiPoly::is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    const unsigned d = total_degree(terms_.begin()->first);
    return total_degree(terms_.rbegin()->first) == d;
}

CycloNum MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_->zero() : it->second;
}

const std::pair<const Monomial, CycloNum>& MultiPoly::leading() const {
    if (terms_.empty()) fail(Errc::ZeroPolynomial, "leading term of zero polynomial");
    return *terms_.begin();
}

unsigned MultiPoly::degree_in(unsigned i) const noexcept {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[i]);
    return d;
}

void MultiPoly::add_term(const Monomial& m, const CycloNum& c) {
    if (c.is_zero()) return;
    if (c.field() != field_) fail(Errc::FieldMismatch, "coefficient from a different field");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (field_ != o.field_) fail(Errc::FieldMismatch, "polynomials over different fields");
    if (nvars_ != o.nvars_) fail(Errc::DimensionMismatch, "polynomials in different variable counts");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.field_, a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (unsigned i = 0; i < kMaxVars; ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
            r.add_term(m, ca * cb);
        }
    return r;
}

MultiPoly operator*(const MultiPoly& a, const CycloNum& s) {
    MultiPoly r(a.field_, a.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.add_term(m, c * s);
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
        if (it->first != m || !(it->second == c)) return false;
        ++it;
    }
    return true;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(field_, nvars_, field_->one());
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::partial(unsigned i) const {
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial mm = m;
        --mm[i];
        r.add_term(mm, c * static_cast<long>(m[i]));
    }
    return r;
}

CycloNum MultiPoly::eval(const Vector& x) const {
    if (x.size() != nvars_) fail(Errc::DimensionMismatch, "evaluation point has the wrong length");
    // power tables per variable
    std::vector<std::vector<CycloNum>> powers(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
        if (x[i].field() != field_) fail(Errc::FieldMismatch, "evaluation point in a different field");
        powers[i].push_back(field_->one());
        const unsigned top = degree_in(i);
        for (unsigned e = 1; e <= top; ++e) powers[i].push_back(powers[i].back() * x[i]);
    }
    CycloNum acc = field_->zero();
    for (const auto& [m, c] : terms_) {
        CycloNum t = c;
        for (unsigned i = 0; i < nvars_ && !t.is_zero(); ++i)
            if (m[i]) t *= powers[i][m[i]];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::remap(unsigned new_nvars, const std::vector<unsigned>& slot) const {
    if (slot.size() != nvars_) fail(Errc::DimensionMismatch, "variable map has the wrong length");
    MultiPoly r(field_, new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial mm{};
        for (unsigned i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (slot[i] >= new_nvars) fail(Errc::DimensionMismatch, "variable map target out of range");
            mm[slot[i]] = static_cast<std::uint8_t>(mm[slot[i]] + m[i]);
        }
        r.add_term(mm, c);
    }
    return r;
}

MultiPoly MultiPoly::embed(FieldPtr to) const {
    if (to == field_) return *this;
    MultiPoly r(to, nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, to->embed(c));
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "X" + std::to_string(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string coef;
        bool negative = false;
        if (auto q = c.as_rational()) {
            negative = sgn(*q) < 0;
            Rational a = abs(*q);
            if (a != 1 || mono.empty()) coef = a.get_str();
        } else {
            coef = "(" + c.str() + ")";
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += coef;
        if (!coef.empty() && !mono.empty()) out += "*";
        out += mono;
    }
    return out;
}

MultiPoly compose_linear(const MultiPoly& f, const Matrix& m) {
    if (m.rows() != f.nvars()) fail(Errc::DimensionMismatch, "substitution matrix has the wrong row count");
    const unsigned nv = static_cast<unsigned>(m.cols());
    FieldPtr field = f.field();
    std::vector<MultiPoly> forms;
    for (unsigned i = 0; i < f.nvars(); ++i) forms.push_back(MultiPoly::linear(field, m.row(i)));
    if (forms.empty() || nv == 0) fail(Errc::DimensionMismatch, "empty substitution");
    std::vector<std::vector<MultiPoly>> powers(f.nvars());
    for (unsigned i = 0; i < f.nvars(); ++i) {
        powers[i].push_back(MultiPoly::constant(field, nv, field->one()));
        const unsigned top = f.degree_in(i);
        for (unsigned e = 1; e <= top; ++e) powers[i].push_back(powers[i].back() * forms[i]);
    }
    MultiPoly r(field, nv);
    for (const auto& [mono, c] : f.terms()) {
        MultiPoly t = MultiPoly::constant(field, nv, c);
        for (unsigned i = 0; i < f.nvars(); ++i)
            if (mono[i]) t = t * powers[i][mono[i]];
        r += t;
    }
    return r;
}

MultiPoly substitute_linear(const MultiPoly& f, const Matrix& m) {
    if (m.rows() != m.cols()) fail(Errc::NonSquare, "substitution matrix must be square");
    if (is_zero(determinant(m, f.field()->one()))) fail(Errc::SingularMatrix, "substitution matrix is singular");
    return compose_linear(f, m);
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
    for (unsigned i = 0; i < kMaxVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    MultiPoly q(f.field(), f.nvars()), r(f.field(), f.nvars()), p = f;
    const auto [lm, lc] = g.leading();
    const CycloNum lc_inv = lc.inv();
    while (!p.is_zero()) {
        const auto [pm, pc] = p.leading();
        if (divides(lm, pm)) {
            Monomial qm;
            for (unsigned i = 0; i < kMaxVars; ++i) qm[i] = static_cast<std::uint8_t>(pm[i] - lm[i]);
            MultiPoly t = MultiPoly::term(f.field(), f.nvars(), qm, pc * lc_inv);
            q += t;
            p -= t * g;
        } else {
            MultiPoly t = MultiPoly::term(f.field(), f.nvars(), pm, pc);
            r += t;
            p -= t;
        }
    }
    return {q, r};
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
    auto [q, r] = divide(f, g);
    if (!r.is_zero()) fail(Errc::InexactDivision, "polynomial division left remainder " + r.str());
    return q;
}

Vector coefficient_vector(const MultiPoly& f, const std::vector<Monomial>& basis) {
    Vector v;
    v.reserve(basis.size());
    for (const auto& m : basis) v.push_back(f.coeff(m));
    return v;
}

MultiPoly from_coefficients(FieldPtr field, unsigned nvars, const std::vector<Monomial>& basis, const Vector& c) {
    MultiPoly p(field, nvars);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], c[i]);
    return p;
}

}  // namespace starpt::algebra
