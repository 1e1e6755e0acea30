// Shared helpers for the unit tests: seeded generators and small oracles that
// do not go through the library code under test.
#ifndef STARPT_TESTS_SUPPORT_HPP
#define STARPT_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "starpt/algebra/multipoly.hpp"
#include "starpt/error.hpp"

namespace support {

using starpt::algebra::CycloField;
using starpt::algebra::CycloNum;
using starpt::algebra::FieldPtr;
using starpt::algebra::Monomial;
using starpt::algebra::MultiPoly;
using starpt::algebra::Rational;
using starpt::algebra::Vector;

inline CycloNum random_element(FieldPtr f, std::mt19937_64& rng, int span = 5) {
    std::uniform_int_distribution<int> num(-span, span), den(1, 3);
    std::vector<Rational> c(f->degree());
    for (auto& q : c) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
    }
    return CycloNum(f, c);
}

inline CycloNum random_nonzero(FieldPtr f, std::mt19937_64& rng) {
    for (;;) {
        CycloNum x = random_element(f, rng);
        if (!x.is_zero()) return x;
    }
}

inline Monomial mono(std::initializer_list<int> exps) {
    Monomial m{};
    int i = 0;
    for (int e : exps) m[i++] = static_cast<std::uint8_t>(e);
    return m;
}

/// Random homogeneous form with about `terms` terms.
inline MultiPoly random_form(FieldPtr f, unsigned n, unsigned d, unsigned terms, std::mt19937_64& rng) {
    MultiPoly p(f, n);
    std::uniform_int_distribution<unsigned> var(0, n - 1);
    for (unsigned k = 0; k < terms; ++k) {
        Monomial m{};
        for (unsigned j = 0; j < d; ++j) ++m[var(rng)];
        p.add_term(m, random_nonzero(f, rng));
    }
    return p;
}

inline long long choose(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

template <class F>
starpt::Errc error_of(F&& f) {
    try {
        f();
    } catch (const starpt::Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return starpt::Errc::Usage;
}

}  // namespace support

#endif
