#pragma once

#include <optional>

#include "sgqft/poly.hpp"

namespace sgqft::hae {

Symbol kappa();
Symbol F03();
Symbol h11();
Symbol E4();
Symbol amb(int g);
// fresh generator D^{k+1}:X for D^k:X
Symbol hol_derivative(Symbol x);

// kappa -2, F03 3, h11 1, E4 -4, amb 0, plus one per hol. derivative
int weight(Symbol s);
// weight when homogeneous, nullopt otherwise (zero is homogeneous of any weight)
std::optional<int> homogeneous_weight(const Poly& p);

// covariant derivation D_t
Poly d_cov(const Poly& p);
// holomorphic derivation; on kappa it is D_t(kappa) + 2 kappa^2 F03
Poly d_hol(const Poly& p);

// dotted-vertex weights; throws std::invalid_argument for unstable types
const Poly& tilde_F(int g, int n);
// induced realization: n! sum over (g, n) graphs of prod tilde_F * (-kappa)^|E|
const Poly& holo_F(int g, int n);

// tilde_F(g, 0) over symbols F[h,m] standing for tilde_F(h, m)
Poly kz_symbolic(int g);
// replace F[h,m] by tilde_F(h, m)
Poly expand_symbolic(const Poly& p);

Poly holo_lemma_A(int g, int n);

bool check_independence(int g, int n);
bool check_holo_lemma(int g, int n);
bool check_hae_recursion(int g, int n);

}  // namespace sgqft::hae
