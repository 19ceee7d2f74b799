#pragma once

// Brute-force reference for the weight-vector matcher: visit every
// (input term, concept) pair and keep the largest t_i * r_j among equal
// names. Written independently of obi::match_vector.

#include <algorithm>
#include <cctype>
#include <random>
#include <string>
#include <vector>

namespace obi::oracle {

inline std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

inline std::vector<double> reference_match(const std::vector<std::string>& terms, const std::vector<double>& t,
                                           const std::vector<std::string>& concepts, const std::vector<double>& r) {
    std::vector<double> out(terms.size(), 0.0);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        bool matched = false;
        double best = 0.0;
        for (std::size_t j = 0; j < concepts.size(); ++j) {
            if (lower(terms[i]) != lower(concepts[j]))
                continue;
            const double candidate = t[i] * r[j];
            if (!matched || candidate > best)
                best = candidate;
            matched = true;
        }
        out[i] = matched ? best : 0.0;
    }
    return out;
}

/// Random matcher case: m, n <= 8 over a small vocabulary so names collide,
/// weights on a 0.1 grid.
struct MatchCase {
    std::vector<std::string> terms;
    std::vector<double> t;
    std::vector<std::string> concepts;
    std::vector<double> r;
};

inline MatchCase random_match_case(std::mt19937& rng) {
    static const std::vector<std::string> vocab = {"bank", "loan", "deposit", "credit", "rate", "Bank", "LOAN",
                                                   "market", "fund", "share"};
    std::uniform_int_distribution<int> size(0, 8);
    std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
    std::uniform_int_distribution<int> grid(0, 10);
    MatchCase c;
    for (int i = size(rng); i > 0; --i) {
        c.terms.push_back(vocab[word(rng)]);
        c.t.push_back(grid(rng) / 10.0);
    }
    for (int j = size(rng); j > 0; --j) {
        c.concepts.push_back(vocab[word(rng)]);
        c.r.push_back(grid(rng) / 10.0);
    }
    return c;
}

} // namespace obi::oracle
