#pragma once

#include <string>
#include <vector>

namespace dwork::published {

struct Row {
    std::vector<int> rep;
    int deg_Q;
    unsigned long exponent;
    std::string D_label;
    int d;
};

// Factorization tables for n = 3, 4, 5, 7, with representatives as printed.
inline const std::vector<Row>& table(int n) {
    static const std::vector<Row> t3 = {{{0, 0, 0}, 2, 1, "Q", 1}};
    static const std::vector<Row> t4 = {
        {{0, 0, 0, 0}, 3, 1, "Q", 1},
        {{0, 0, 2, 2}, 1, 3, "Q", 2},
        {{0, 0, 1, 3}, 1, 12, "Q", 1},
    };
    static const std::vector<Row> t5 = {
        {{0, 0, 0, 0, 0}, 4, 1, "Q", 1},
        {{0, 0, 0, 1, 4}, 4, 20, "Q(sqrt(5))", 1},
        {{0, 0, 1, 1, 3}, 4, 30, "Q(sqrt(5))", 1},
    };
    static const std::vector<Row> t7 = {
        {{0, 0, 0, 0, 0, 0, 0}, 6, 1, "Q", 1},
        {{0, 0, 0, 0, 0, 1, 6}, 12, 42, "Q(mu_7)+", 1},
        {{0, 0, 0, 0, 1, 1, 5}, 24, 105, "Q(mu_7)", 1},
        {{0, 0, 0, 1, 1, 1, 4}, 12, 140, "Q(mu_7)+", 1},
        {{0, 0, 0, 1, 1, 6, 6}, 12, 210, "Q(mu_7)+", 1},
        {{0, 0, 0, 0, 1, 2, 4}, 6, 210, "Q(sqrt(-7))", 1},
        {{0, 0, 0, 1, 1, 2, 3}, 18, 420, "Q(mu_7)", 1},
        {{0, 0, 1, 1, 3, 3, 6}, 6, 630, "Q(sqrt(-7))", 1},
        {{0, 0, 0, 1, 2, 5, 6}, 6, 840, "Q(mu_7)+", 1},
        {{0, 0, 1, 1, 3, 4, 5}, 6, 1260, "Q(mu_7)+", 1},
        {{0, 0, 1, 1, 2, 4, 6}, 6, 1260, "Q(mu_7)+", 1},
    };
    static const std::vector<Row> none;
    switch (n) {
        case 3: return t3;
        case 4: return t4;
        case 5: return t5;
        case 7: return t7;
        default: return none;
    }
}

inline const std::vector<unsigned long>& dimensions() {
    // n = 3, 4, 5, 7
    static const std::vector<unsigned long> d = {2, 21, 204, 39990};
    return d;
}

}  // namespace dwork::published
