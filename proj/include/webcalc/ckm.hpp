#pragma once

#include "webcalc/io.hpp"
#include "webcalc/tensor.hpp"
#include "webcalc/web.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace webcalc {

enum class PrimKind {
    MergeM,          // V_k (x) V_l -> V_{k+l}
    SplitM,          // V_{k+l} -> V_k (x) V_l
    Dual_D,          // V_k -> V_{n-k}^*
    Dual_D_signed,
    DualInv,         // V_{n-k}^* -> V_k
    DualInv_signed,
    CupLeft_C_L,     // 1 -> V_k (x) V_k^*
    CupRight_C_R,    // 1 -> V_k^* (x) V_k
    CapLeft_CL,      // V_k^* (x) V_k -> 1
    CapRight_CR,     // V_k (x) V_k^* -> 1
    FCap_C,          // V_k (x) V_{n-k} -> 1
};

struct Primitive {
    PrimKind kind;
    int k = 1;
    int l = 0;  // merge and split only
};

// One tensor slot type: weight and dual flag.
struct SlotType {
    int k;
    bool dual;
    friend bool operator==(const SlotType& a, const SlotType& b) { return a.k == b.k && a.dual == b.dual; }
};
using Signature = std::vector<SlotType>;

struct Layer {
    int slot = 0;  // number of identity factors left of the primitive
    Primitive prim;
};

struct Program {
    int n = 2;
    std::vector<Layer> layers;
};

std::string prim_name(PrimKind k);
Signature prim_input(const Primitive& p, int n);
Signature prim_output(const Primitive& p, int n);

// Applies p to the factors starting at `slot`; throws on signature mismatch.
WebVector apply_primitive(const Primitive& p, int slot, int n, const WebVector& v);
inline WebVector apply_primitive(const Primitive& p, int n, const WebVector& v) { return apply_primitive(p, 0, n, v); }

LaurentPoly fcap(int k, const Factor& left, const Factor& right);

// Signature after every layer; throws std::invalid_argument when layers do not compose.
std::vector<Signature> program_signatures(const Program& p);
WebVector eval_program(const Program& p);
WebGraph render_program(const Program& p);
int program_sign(const Program& p);
// f(render(P)) == sgn(P) * g(P); the top signature must be non-dual.
bool compare_f_g(const Program& p);

Program program_from_json(const Json& j);
Json program_to_json(const Program& p);

// Building blocks matching the cup and tripod dictionary.
Program cup_program(int n, int k);
Program tripod_program(int n, int k, int l, int m);  // Type I if k+l+m = n, Type II if 2n
// Appends the layers of `sub` with `slot` extra identity factors on the left.
void append_at(Program& p, const Program& sub, int slot);
// The running sl4 web assembled from four tripods and four caps.
Program running_sl4_program();
// Three random layers starting with a cup, followed by DualInv layers clearing duals.
Program random_program(int n, std::uint64_t seed);

}  // namespace webcalc
