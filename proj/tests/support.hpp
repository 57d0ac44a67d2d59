#pragma once

#include "webcalc/laurent.hpp"
#include "webcalc/tensor.hpp"

#include <sstream>
#include <string>

namespace test {

inline webcalc::LaurentPoly P(const std::string& s) { return webcalc::LaurentPoly::parse(s); }

// "1000,0100*" -> monomial; a trailing '*' marks a dual factor
inline webcalc::Monomial M(const std::string& s) {
    webcalc::Monomial m;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        bool dual = !part.empty() && part.back() == '*';
        if (dual) part.pop_back();
        m.push_back({webcalc::Word::from_string(part), dual});
    }
    return m;
}

inline webcalc::Word W(const std::string& s) { return webcalc::Word::from_string(s); }

}  // namespace test
