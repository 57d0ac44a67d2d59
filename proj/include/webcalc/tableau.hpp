#pragma once

#include "webcalc/io.hpp"
#include "webcalc/stranding.hpp"
#include "webcalc/web.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace webcalc {

struct StandardTableau {
    int n = 0;
    std::vector<std::vector<int>> rows;

    // word[j-1] is the row (1-based) holding entry j
    static StandardTableau from_word(int n, const std::vector<int>& word);
    static StandardTableau from_word(int n, const std::string& digits);
    std::vector<int> word() const;
    int cols() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
    int size() const { return n * cols(); }
};

bool validate_tableau(const StandardTableau& t);

struct Arc {
    int color;
    int opener;
    int closer;
    friend bool operator==(const Arc& a, const Arc& b) {
        return a.color == b.color && a.opener == b.opener && a.closer == b.closer;
    }
};

struct MulticolorMatching {
    int m = 0;
    std::vector<Arc> arcs;  // sorted by color, then closer
};

MulticolorMatching matching_from_tableau(const StandardTableau& t);

struct TableauWeb {
    WebGraph web;
    Stranding stranding;
};

// eps perturbs the per-color arc slopes (1 + c * eps).
TableauWeb web_from_tableau(const StandardTableau& t, double eps = 1e-3);

std::vector<StandardTableau> enumerate_syt(int n, int c);
std::uint64_t count_syt(int n, int c);
std::uint64_t hook_length_count(int n, int c);
// Row-strict fillings of the n x (sum k)/n rectangle with content 1^{k_1} ... m^{k_m}.
std::uint64_t count_row_strict(int n, const std::vector<int>& k);

struct RankReport {
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool ok() const { return rank == expected; }
};

RankReport basis_rank(int n, int m);
bool basis_rank_check(int n, int m);

Json tableau_to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const Json& j);

}  // namespace webcalc
