#pragma once

#include "webcalc/laurent.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace webcalc {

// n-bit word; position i (1-based) is bit i-1 of `bits`.
struct Word {
    int n = 0;
    std::uint32_t bits = 0;

    static Word from_string(std::string_view s);
    static Word ones(int n) { return {n, n >= 32 ? ~0u : ((1u << n) - 1u)}; }
    // ones in the first c positions
    static Word lambda(int n, int c) { return {n, (1u << c) - 1u}; }
    static Word unit(int n, int i) { return {n, 1u << (i - 1)}; }

    bool at(int i) const { return (bits >> (i - 1)) & 1u; }
    int weight() const;
    Word complement() const { return {n, ones(n).bits & ~bits}; }
    // swap positions i and i+1
    Word swapped(int i) const;
    // ascending positions of the ones
    std::vector<int> positions() const;
    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) { return a.n == b.n && a.bits == b.bits; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

// All words of length n and weight k, ascending by bits.
std::vector<Word> words_of_weight(int n, int k);

int inversion_ell(const Word& b, const Word& b2);

struct Factor {
    Word word;
    bool dual = false;
    friend bool operator==(const Factor& a, const Factor& b) {
        return a.word == b.word && a.dual == b.dual;
    }
};

using Monomial = std::vector<Factor>;

// Lex order: each factor keyed by its ascending index subset.
bool lex_less(const Factor& a, const Factor& b);
struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// x_{i1} ^ ... ^ x_{ik} = c * x_b with b in descending canonical form; nullopt when zero.
std::optional<std::pair<LaurentPoly, Word>> wedge_sort_scalar(int n, const std::vector<int>& indices);

class WebVector {
public:
    using Map = std::map<Monomial, LaurentPoly, LexLess>;

    WebVector() = default;
    static WebVector scalar(const LaurentPoly& c);

    void add(const Monomial& m, const LaurentPoly& c);
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    LaurentPoly coeff(const Monomial& m) const;

    WebVector& operator+=(const WebVector& o);
    WebVector& operator-=(const WebVector& o);
    friend WebVector operator+(WebVector a, const WebVector& b) { return a += b; }
    friend WebVector operator-(WebVector a, const WebVector& b) { return a -= b; }
    friend WebVector operator*(const LaurentPoly& c, const WebVector& v);
    friend bool operator==(const WebVector& a, const WebVector& b);
    friend bool operator!=(const WebVector& a, const WebVector& b) { return !(a == b); }

private:
    void check_ambient(const Monomial& m) const;
    Map terms_;
};

// Rebuilds v from raw (monomial, coefficient) pairs: merges, strips zeros, orders.
WebVector vector_canonicalize(const std::vector<std::pair<Monomial, LaurentPoly>>& raw);

std::string monomial_str(const Monomial& m);
// Human-readable form with ascending wedges, e.g. "x1⊗x2 - q^-1 x2⊗x1".
std::string vector_text(const WebVector& v);

}  // namespace webcalc
