#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "cc/error.hpp"

namespace cc {

// One-line notation, 1-based entries.
using Permutation = std::vector<int>;
// Rows of a Young diagram, weakly decreasing.
using YoungDiagram = std::vector<int>;
// Word in simple transpositions s_1..s_{k-1}.
using Word = std::vector<int>;

Permutation identity_perm(int k);
bool is_permutation(const Permutation& w);
Permutation compose(const Permutation& x, const Permutation& y);  // (x*y)(i) = x(y(i))
Permutation inverse(const Permutation& w);

// First |S| entries are S ascending, then the complement ascending.
Permutation grassmannian_perm(const std::vector<int>& s, int k);
int coxeter_length(const Permutation& w);

// lambda(S) = (x_a - a, ..., x_1 - 1) for S = {x_1 < ... < x_a}; |lambda| == length of w_S.
YoungDiagram young_diagram(const std::vector<int>& s, int k);
int diagram_size(const YoungDiagram& y);

mpz_class f_lambda(const YoungDiagram& shape);            // hook length formula
mpz_class f_lambda_bruteforce(const YoungDiagram& shape); // counts tableaux by peeling corners

// All reduced words, by right-descent recursion: words(w) = U words(w s_i) + [i] over descents i.
// Throws CapExceeded when more than cap words would be produced.
std::vector<Word> reduced_words(const Permutation& w, std::size_t cap = 100000);

// Product s_{w[0]} s_{w[1]} ...; right multiplication by s_i swaps one-line positions i, i+1.
Permutation word_to_perm(const Word& w, int k);

// Words adjacent by one commutation move s_i s_j = s_j s_i, |i-j| >= 2.
bool commutation_adjacent(const Word& x, const Word& y);

}  // namespace cc
