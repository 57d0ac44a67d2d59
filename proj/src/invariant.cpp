#include "webcalc/invariant.hpp"

#include <stdexcept>

namespace webcalc {

Monomial boundary_monomial(const WebGraph& g, const Stranding& s) { return StrandContext(g).boundary_monomial(s); }

WebVector web_vector(const WebGraph& g) {
    StrandContext ctx(g);
    WebVector v;
    for (const auto& s : enumerate_strandings(g))
        v.add(ctx.boundary_monomial(s), LaurentPoly::neg_q_pow(ctx.flow_exponent(s)));
    return v;
}

bool nonvanishing_check(const WebGraph& g) {
    StrandContext ctx(g);
    WebVector v = web_vector(g);
    if (v.is_zero()) return false;
    for (const auto& s : enumerate_strandings(g))
        if (v.coeff(ctx.boundary_monomial(s)).is_zero()) return false;
    return true;
}

bool sign_coherent(const LaurentPoly& c) {
    if (c.is_zero()) return false;
    for (const auto& [e, x] : c.terms())
        if ((e % 2 == 0) != (x > 0)) return false;
    return true;
}

std::pair<Monomial, LaurentPoly> lex_leading_term(const WebVector& v) {
    if (v.is_zero()) throw std::invalid_argument("lex_leading_term: zero vector");
    return *v.terms().begin();
}

}  // namespace webcalc
