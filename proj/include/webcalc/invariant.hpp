#pragma once

#include "webcalc/stranding.hpp"
#include "webcalc/tensor.hpp"
#include "webcalc/web.hpp"

#include <utility>

namespace webcalc {

Monomial boundary_monomial(const WebGraph& g, const Stranding& s);

// f(G): sum over strandings of (-q)^{x(S)-y(S)} x_S.
WebVector web_vector(const WebGraph& g);

bool nonvanishing_check(const WebGraph& g);

// Every term c_e q^e satisfies (-1)^e c_e > 0, so no cancellation took place.
bool sign_coherent(const LaurentPoly& c);

std::pair<Monomial, LaurentPoly> lex_leading_term(const WebVector& v);

}  // namespace webcalc
