#include "liouville/algebrize.hpp"

#include "liouville/errors.hpp"

namespace liouville {

HamiltonianChange HamiltonianChange::cosine(const Rational& omega_sq) {
    if (omega_sq.is_zero()) throw DegenerateParameters("cosine change needs omega^2 != 0");
    Poly z = Poly::x();
    return {ChangeKind::cosine, RatFun((Poly(1) - z * z).scaled(SurdSum(omega_sq)))};
}

HamiltonianChange HamiltonianChange::exponential(const Rational& mu_sq) {
    if (mu_sq.is_zero()) throw DegenerateParameters("exponential change needs mu^2 != 0");
    Poly z = Poly::x();
    return {ChangeKind::exponential, RatFun((z * z).scaled(SurdSum(mu_sq)))};
}

HamiltonianChange HamiltonianChange::custom(RatFun alpha) {
    if (alpha.is_zero()) throw DegenerateParameters("Hamiltonian change needs alpha != 0");
    return {ChangeKind::custom, std::move(alpha)};
}

namespace {

// monic even-degree polynomial square root by coefficient matching
std::optional<Poly> monic_poly_sqrt(const Poly& p) {
    int d = p.degree();
    if (d % 2 != 0) return std::nullopt;
    int h = d / 2;
    std::vector<SurdSum> s(h + 1);
    s[h] = SurdSum(1);
    SurdSum two(2);
    for (int i = 1; i <= h; ++i) {
        SurdSum inner;
        for (int j = 1; j < i; ++j) inner += s[h - j] * s[h - (i - j)];
        s[h - i] = (p.coeff(d - i) - inner) / two;
    }
    Poly root = Poly::from_coeffs(std::move(s));
    if (root * root == p) return root;
    return std::nullopt;
}

}  // namespace

std::optional<RatFun> ratfun_sqrt(const RatFun& f) {
    if (f.is_zero()) return RatFun();
    SurdSum lead = f.num().leading();
    SurdSum lead_root;
    try {
        lead_root = lead.sqrt();
    } catch (const NonRationalRadicand&) {
        return std::nullopt;
    }
    auto num_root = monic_poly_sqrt(f.num().scaled(lead.inverse()));
    auto den_root = monic_poly_sqrt(f.den());
    if (!num_root || !den_root) return std::nullopt;
    return RatFun(num_root->scaled(lead_root), *den_root);
}

GeneralODE2 algebrize(const RatFun& a_hat, const RatFun& b_hat, const HamiltonianChange& change) {
    const RatFun& alpha = change.alpha;
    if (alpha.is_zero()) throw DegenerateParameters("alpha must be nonzero");

    RatFun drift = alpha.derivative() * RatFun(Rational(1, 2));
    if (!a_hat.is_zero()) {
        auto root = ratfun_sqrt(alpha);
        if (!root) throw NonRationalDrift();
        drift += *root * a_hat;
    }
    return {drift / alpha, b_hat / alpha};
}

RatFun build_variational_b_hat(const Rational& lambda, const Rational& omega2_sq) {
    if (lambda.is_zero() || omega2_sq.is_zero())
        throw DegenerateParameters("lambda = 0 or omega_2^2 = 0 degenerates the variational equation");
    Poly num = Poly::monomial(SurdSum(omega2_sq), 1) - Poly(lambda);
    return RatFun(num, Poly::x());
}

}  // namespace liouville
