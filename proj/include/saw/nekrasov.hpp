#pragma once

// The Nekrasov factor N^{(k|N)}_{lambda,mu}(u | q, kappa) in both product
// forms.  The row form is the authoritative implementation; the box form
// exists to pin the arm/leg convention (they must agree identically).

#include "saw/partitions.hpp"
#include "saw/pseries.hpp"

namespace saw {

namespace detail {
inline bool cong(int a, int k, int N) {
    int d = (a - k) % N;
    return d == 0 || d == -0 || ((d % N) + N) % N == 0;
}
} // namespace detail

// row form:
//   prod_{1<=l<=l', l'-l == k (N)} (u q^{-mu_l + lambda_{l'+1}} kappa^{l'-l}; q)_{lambda_{l'} - lambda_{l'+1}}
// * prod_{1<=l<=l', l-l'-1 == k (N)} (u q^{lambda_l - mu_{l'}} kappa^{l-l'-1}; q)_{mu_{l'} - mu_{l'+1}}
template <class K>
K nek_row(const Partition& lambda, const Partition& mu, int k, int N,
          const K& u, const K& q, const K& kappa) {
    K r = u.unit();
    int llen = lambda.length(), mlen = mu.length();
    for (int lp = 1; lp <= llen; ++lp) {
        int count = lambda.row(lp) - lambda.row(lp + 1);
        if (count == 0) continue;
        for (int l = 1; l <= lp; ++l) {
            if (!detail::cong(lp - l, k, N)) continue;
            K x = u * q.pow(-mu.row(l) + lambda.row(lp + 1)) * kappa.pow(lp - l);
            r *= finite_poch(x, q, count);
        }
    }
    for (int lp = 1; lp <= mlen; ++lp) {
        int count = mu.row(lp) - mu.row(lp + 1);
        if (count == 0) continue;
        for (int l = 1; l <= lp; ++l) {
            if (!detail::cong(l - lp - 1, k, N)) continue;
            K x = u * q.pow(lambda.row(l) - mu.row(lp)) * kappa.pow(l - lp - 1);
            r *= finite_poch(x, q, count);
        }
    }
    return r;
}

// box form:
//   prod_{s in Y_lambda, L_lambda(s) == k (N)} (1 - u q^{-A_mu(s)-1} kappa^{L_lambda(s)})
// * prod_{t in Y_mu, -L_mu(t)-1 == k (N)}     (1 - u q^{A_lambda(t)} kappa^{-L_mu(t)-1})
template <class K>
K nek_box(const Partition& lambda, const Partition& mu, int k, int N,
          const K& u, const K& q, const K& kappa) {
    K one = u.unit(), r = one;
    for (int l = 1; l <= lambda.length(); ++l)
        for (int m = 1; m <= lambda.row(l); ++m) {
            auto [arm_mu, leg_lambda] = arm_leg(lambda, mu, l, m);
            if (!detail::cong(leg_lambda, k, N)) continue;
            r *= one - u * q.pow(-arm_mu - 1) * kappa.pow(leg_lambda);
        }
    for (int l = 1; l <= mu.length(); ++l)
        for (int m = 1; m <= mu.row(l); ++m) {
            auto [arm_lambda, leg_mu] = arm_leg(mu, lambda, l, m);
            if (!detail::cong(-leg_mu - 1, k, N)) continue;
            r *= one - u * q.pow(arm_lambda) * kappa.pow(-leg_mu - 1);
        }
    return r;
}

} // namespace saw
