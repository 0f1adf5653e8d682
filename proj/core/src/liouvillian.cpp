#include "dimer/liouvillian.hpp"

namespace dimer {

namespace {

using std::complex;

Eigen::Matrix4cd unit(int row, int col) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(row, col) = 1.0;
    return m;
}

// rate · (2 A ρ A† − A†A ρ − ρ A†A), vectorised.
Matrix16cd dissipator(double rate, const Eigen::Matrix4cd& a) {
    const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
    const Eigen::Matrix4cd ada = a.adjoint() * a;
    return rate * (2.0 * kron4(a.conjugate(), a) - kron4(id, ada) -
                   kron4(ada.transpose(), id));
}

// 2·rate · (σ_mm ρ σ_nn + σ_nn ρ σ_mm) — the off-diagonal remnant of the
// collective dephasing channels.
Matrix16cd cross_dephasing(double rate, int m, int n) {
    const Eigen::Matrix4cd pm = unit(m, m);
    const Eigen::Matrix4cd pn = unit(n, n);
    return 2.0 * rate * (kron4(pn, pm) + kron4(pm, pn));
}

}  // namespace

Matrix16cd kron4(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
    Matrix16cd out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
    return out;
}

Vector16cd vectorize(const Eigen::Matrix4cd& rho) {
    Vector16cd v;
    for (int col = 0; col < 4; ++col)
        for (int row = 0; row < 4; ++row) v(4 * col + row) = rho(row, col);
    return v;
}

Eigen::Matrix4cd unvectorize(const Vector16cd& vec) {
    Eigen::Matrix4cd rho;
    for (int col = 0; col < 4; ++col)
        for (int row = 0; row < 4; ++row) rho(row, col) = vec(4 * col + row);
    return rho;
}

Liouvillian build_liouvillian(const DimerParams& params) {
    Liouvillian lio;
    lio.eig = eigensystem(params);
    lio.rates = effective_rates(params, lio.eig);
    const RateSet& r = lio.rates;

    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 4; ++i) h(i, i) = lio.eig.energies[static_cast<std::size_t>(i)];
    const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();

    // dρ/dt = i[ρ, H] + dissipators: vec(iρH − iHρ) = i(Hᵀ⊗I − I⊗H)vec(ρ).
    lio.matrix = complex<double>(0.0, 1.0) * (kron4(h.transpose(), id) - kron4(id, h));

    lio.matrix += dissipator(r.pi1, unit(0, 0));   // Π1 D[σ11]
    lio.matrix += dissipator(r.pi2, unit(1, 1));   // Π2 D[σ22]
    lio.matrix += dissipator(r.pi3, unit(2, 2));   // Π3 D[σ33]
    lio.matrix += dissipator(r.gamma32, unit(1, 2));  // Γ32 D[σ23]: |3⟩→|2⟩ pump
    lio.matrix += dissipator(r.gamma23, unit(2, 1));  // Γ23 D[σ32]: |2⟩→|3⟩ decay
    lio.matrix += cross_dephasing(r.x12, 0, 1);
    lio.matrix += cross_dephasing(r.x13, 0, 2);
    lio.matrix += cross_dephasing(r.x23, 2, 1);
    return lio;
}

Eigen::Matrix4cd apply(const Liouvillian& lio, const Eigen::Matrix4cd& rho) {
    return unvectorize(lio.matrix * vectorize(rho));
}

}  // namespace dimer
