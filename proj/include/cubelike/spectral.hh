#ifndef CUBELIKE_SPECTRAL_HH
#define CUBELIKE_SPECTRAL_HH

#include <cubelike/graph.hh>

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace cubelike
{
    /// Largest order accepted by char_poly.
    inline constexpr unsigned spectral_cap = 512;

    /// Coefficients of det(xI - A), constant term first; the last is 1.
    using Polynomial = std::vector<mpz_class>;

    /// Exact characteristic polynomial. The adjacency matrix is reduced to
    /// Hessenberg form modulo enough 31-bit primes to exceed twice the
    /// bound |c_{n-k}| <= e_k(ceil(sqrt(deg))), then the coefficients are
    /// recovered by Chinese remaindering. Throws CapacityError above spectral_cap.
    auto char_poly(const Graph & x) -> Polynomial;

    struct Spectrum
    {
        /// (eigenvalue, multiplicity) by decreasing eigenvalue.
        std::vector<std::pair<long, unsigned>> entries;
        /// The factor of the characteristic polynomial left after removing
        /// every integer root; absent when the spectrum is integral.
        std::optional<Polynomial> residual;

        auto integral() const -> bool { return ! residual; }
        auto multiplicity(long eigenvalue) const -> unsigned;
        friend auto operator== (const Spectrum &, const Spectrum &) -> bool = default;
    };

    /// Integer eigenvalues with multiplicities. Labelled cubelike graphs use
    /// the characters of Z_2^n, where the eigenvalue of chi is the sum of
    /// (-1)^{chi . c} over the connection set; other graphs divide integer
    /// roots in [-maxdeg, maxdeg] out of char_poly.
    auto integer_spectrum(const Graph & x) -> Spectrum;

    /// {(d - 2i, C(d, i))}.
    auto cube_spectrum(unsigned d) -> Spectrum;

    /// Every eigenvalue of s has multiplicity at most that in t; a
    /// non-integral s is never a sub-multiset.
    auto is_submultiset(const Spectrum & s, const Spectrum & t) -> bool;
    auto is_submultiset_of_cube(const Spectrum & s, unsigned d) -> bool;

    auto to_string(const Polynomial & p) -> std::string;
}

#endif
