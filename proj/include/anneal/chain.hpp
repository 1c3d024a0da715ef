#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace anneal {

/// Physical parameters of the transverse-field Ising chain.
///
/// Energies are in the caller's energy unit (normally J = 1) and times come
/// out in hbar / energy. `delta_gamma` is the field increment that plays the
/// role of the driving amplitude.
struct ChainParams {
    double J = 1.0;
    double gamma0 = 0.999995;
    double delta_gamma = 0.00001;
    std::int64_t n_spins = 10000;
    double hbar = 1.0;

    /// Throws std::invalid_argument on the first violated rule.
    void validate() const;

    /// |delta_gamma / gamma0|; infinite when gamma0 == 0 and delta_gamma != 0.
    [[nodiscard]] double driving_ratio() const noexcept;

    /// False when the driving is not weak (ratio > 0.1): results are still
    /// computed, but linear response is not expected to hold.
    [[nodiscard]] bool weak_driving() const noexcept { return driving_ratio() <= 0.1; }

    friend bool operator==(const ChainParams &, const ChainParams &) = default;
};

/// One cosine mode of a relaxation function: amplitude * cos(omega * t).
struct Mode {
    double amplitude;
    double omega;
};

/// Finite cosine-mode expansion of the relaxation function.
///
/// Modes are kept in ascending frequency; every kernel and every work
/// functional is evaluated from this list alone.
class ModeDecomposition {
public:
    /// Custom decomposition. Throws std::invalid_argument unless every
    /// amplitude is finite and >= 0 and every frequency is finite and > 0.
    explicit ModeDecomposition(std::vector<Mode> modes);
    ModeDecomposition(std::vector<Mode> modes, ChainParams origin);

    [[nodiscard]] std::span<const Mode> modes() const noexcept { return modes_; }
    [[nodiscard]] std::size_t size() const noexcept { return modes_.size(); }
    [[nodiscard]] bool empty() const noexcept { return modes_.empty(); }

    /// Sum of amplitudes, i.e. psi(0) == psi_bar(0).
    [[nodiscard]] double psi_zero() const noexcept { return psi_zero_; }

    /// Chain the modes were built from; empty for custom decompositions.
    [[nodiscard]] const std::optional<ChainParams> &origin() const noexcept { return origin_; }

private:
    std::vector<Mode> modes_;
    std::optional<ChainParams> origin_;
    double psi_zero_ = 0.0;
};

/// Single-mode energy eps(n) = 2 sqrt(J^2 + G^2 - 2 J G cos((2n-1) pi / N)).
/// Throws std::out_of_range unless 1 <= n <= N/2.
[[nodiscard]] double mode_energy(const ChainParams &params, std::int64_t n);

/// N/2 modes with A_n = (16/N) (J^2 / eps^3) sin^2((2n-1) pi / N) and
/// omega_n = 2 eps(n) / hbar, in ascending omega.
[[nodiscard]] ModeDecomposition build_modes(const ChainParams &params);

/// Finite-size gap of the critical chain, eps(1) at G = J: 4 J sin(pi / (2N)).
[[nodiscard]] double finite_size_gap(double J, std::int64_t n_spins);

} // namespace anneal
