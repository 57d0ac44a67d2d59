#pragma once

#include "webcalc/tensor.hpp"

#include <string>
#include <vector>

namespace webcalc {

// Action of the Chevalley generators on tensor products of V_k and V_k^*.
// The color i must lie in [1, n-1], where n is the word length.
WebVector act_E(int i, const WebVector& v);
WebVector act_F(int i, const WebVector& v);
WebVector act_K(int i, const WebVector& v);
WebVector act_K_inv(int i, const WebVector& v);

struct InvarianceRow {
    std::string generator;  // "E", "F" or "K"
    int i;
    bool pass;
};

// E_i v = F_i v = 0 and K_i v = v for every color; n is required for scalars.
std::vector<InvarianceRow> invariance_table(const WebVector& v, int n);
bool check_invariant(const WebVector& v);

}  // namespace webcalc
