#include <cubelike/spectral.hh>
#include <cubelike/cayley.hh>
#include <cubelike/errors.hh>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

using std::uint64_t;
using std::vector;

namespace cubelike
{
    namespace
    {
        auto is_prime(uint64_t p) -> bool
        {
            if (p < 2)
                return false;
            for (uint64_t d = 2 ; d * d <= p ; ++d)
                if (p % d == 0)
                    return false;
            return true;
        }

        auto power_mod(uint64_t b, uint64_t e, uint64_t p) -> uint64_t
        {
            uint64_t r = 1;
            for (b %= p ; e ; e >>= 1, b = b * b % p)
                if (e & 1)
                    r = r * b % p;
            return r;
        }

        // det(xI - A) mod p via reduction to upper Hessenberg form
        auto char_poly_mod(const Graph & x, uint64_t p) -> vector<uint64_t>
        {
            unsigned n = x.size();
            vector<vector<uint64_t>> h(n, vector<uint64_t>(n, 0));
            for (Vertex u = 0 ; u < n ; ++u)
                x.neighbours(u).for_each([&] (Vertex v) { h[u][v] = 1; });

            for (unsigned m = 1 ; m + 1 < n ; ++m) {
                unsigned pivot = m;
                while (pivot < n && h[pivot][m - 1] == 0)
                    ++pivot;
                if (pivot == n)
                    continue;
                if (pivot != m) {
                    std::swap(h[pivot], h[m]);
                    for (auto & row : h)
                        std::swap(row[pivot], row[m]);
                }
                uint64_t inverse = power_mod(h[m][m - 1], p - 2, p);
                for (unsigned i = m + 1 ; i < n ; ++i) {
                    uint64_t u = h[i][m - 1] * inverse % p;
                    if (u == 0)
                        continue;
                    uint64_t minus_u = p - u;
                    auto & target = h[i];
                    auto & source = h[m];
                    for (unsigned k = m - 1 ; k < n ; ++k)
                        target[k] = (target[k] + minus_u * source[k]) % p;
                    for (unsigned r = 0 ; r < n ; ++r)
                        h[r][m] = (h[r][m] + u * h[r][i]) % p;
                }
            }

            // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod of subdiagonal) p_{m-i-1}, 1-indexed
            vector<vector<uint64_t>> polys(n + 1);
            polys[0] = {1};
            for (unsigned m = 1 ; m <= n ; ++m) {
                auto & q = polys[m];
                q.assign(m + 1, 0);
                auto & prev = polys[m - 1];
                uint64_t diagonal = h[m - 1][m - 1];
                for (unsigned k = 0 ; k < m ; ++k) {
                    q[k + 1] = (q[k + 1] + prev[k]) % p;
                    q[k] = (q[k] + (p - diagonal) * prev[k]) % p;
                }
                uint64_t t = 1;
                for (unsigned i = 1 ; i < m ; ++i) {
                    t = t * h[m - i][m - i - 1] % p;
                    if (t == 0)
                        break;
                    uint64_t coefficient = t * h[m - i - 1][m - 1] % p;
                    if (coefficient == 0)
                        continue;
                    auto & earlier = polys[m - i - 1];
                    for (unsigned k = 0 ; k < earlier.size() ; ++k)
                        q[k] = (q[k] + (p - coefficient) * earlier[k]) % p;
                }
            }
            return polys[n];
        }

        // twice the largest |c_k| allowed by Hadamard's bound on principal minors
        auto coefficient_bound(const Graph & x) -> mpz_class
        {
            unsigned n = x.size();
            vector<mpz_class> e(n + 1, 0);
            e[0] = 1;
            for (Vertex v = 0 ; v < n ; ++v) {
                auto root = static_cast<unsigned long>(std::ceil(std::sqrt(static_cast<double>(x.degree(v)))));
                for (unsigned k = v + 1 ; k >= 1 ; --k)
                    e[k] += e[k - 1] * root;
            }
            return 2 * *std::max_element(e.begin(), e.end()) + 1;
        }

        auto evaluate(const Polynomial & p, long x) -> mpz_class
        {
            mpz_class value = 0;
            for (size_t i = p.size() ; i-- > 0 ; )
                value = value * x + p[i];
            return value;
        }

        // p / (x - r), assuming r is a root
        auto divide_root(const Polynomial & p, long r) -> Polynomial
        {
            Polynomial q(p.size() - 1);
            mpz_class carry = 0;
            for (size_t i = p.size() ; i-- > 1 ; ) {
                carry = carry * r + p[i];
                q[i - 1] = carry;
            }
            return q;
        }

        auto cubelike_spectrum(const Graph & x, const ConnectionSet & c) -> Spectrum
        {
            std::map<long, unsigned, std::greater<>> counts;
            for (uint64_t chi = 0 ; chi < x.size() ; ++chi) {
                long value = 0;
                for (auto & w : c.elements())
                    value += std::popcount(chi & w.bits()) % 2 ? -1 : 1;
                ++counts[value];
            }
            return Spectrum{{counts.begin(), counts.end()}, std::nullopt};
        }
    }

    auto char_poly(const Graph & x) -> Polynomial
    {
        unsigned n = x.size();
        if (n > spectral_cap)
            throw CapacityError("characteristic polynomial of a graph with " + std::to_string(n)
                    + " vertices exceeds the cap of " + std::to_string(spectral_cap));
        Polynomial result(n + 1, 0);
        mpz_class modulus = 1;
        mpz_class bound = coefficient_bound(x);
        for (uint64_t p = (uint64_t{1} << 31) - 1 ; modulus <= bound ; p -= 2) {
            if (! is_prime(p))
                continue;
            auto residues = char_poly_mod(x, p);
            // Garner step: r += M ((a - r) M^-1 mod p)
            mpz_class pz = static_cast<unsigned long>(p);
            mpz_class inverse;
            mpz_invert(inverse.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
            for (unsigned k = 0 ; k <= n ; ++k) {
                mpz_class step = (mpz_class{static_cast<unsigned long>(residues[k])} - result[k]) * inverse;
                mpz_mod(step.get_mpz_t(), step.get_mpz_t(), pz.get_mpz_t());
                result[k] += modulus * step;
            }
            modulus *= pz;
        }
        mpz_class half = modulus / 2;
        for (auto & c : result)
            if (c > half)
                c -= modulus;
        return result;
    }

    auto Spectrum::multiplicity(long eigenvalue) const -> unsigned
    {
        for (auto [value, count] : entries)
            if (value == eigenvalue)
                return count;
        return 0;
    }

    auto integer_spectrum(const Graph & x) -> Spectrum
    {
        if (x.has_labels())
            if (auto c = connection_set_of(x))
                return cubelike_spectrum(x, *c);

        auto p = char_poly(x);
        long max_degree = 0;
        for (Vertex v = 0 ; v < x.size() ; ++v)
            max_degree = std::max<long>(max_degree, x.degree(v));
        Spectrum s;
        for (long r = max_degree ; r >= -max_degree ; --r) {
            unsigned count = 0;
            while (p.size() > 1 && evaluate(p, r) == 0) {
                p = divide_root(p, r);
                ++count;
            }
            if (count)
                s.entries.emplace_back(r, count);
        }
        if (p.size() > 1)
            s.residual = std::move(p);
        return s;
    }

    auto cube_spectrum(unsigned d) -> Spectrum
    {
        Spectrum s;
        mpz_class binomial;
        for (unsigned i = 0 ; i <= d ; ++i) {
            mpz_bin_uiui(binomial.get_mpz_t(), d, i);
            s.entries.emplace_back(static_cast<long>(d) - 2 * static_cast<long>(i), binomial.get_ui());
        }
        return s;
    }

    auto is_submultiset(const Spectrum & s, const Spectrum & t) -> bool
    {
        if (! s.integral())
            return false;
        for (auto [value, count] : s.entries)
            if (count > t.multiplicity(value))
                return false;
        return true;
    }

    auto is_submultiset_of_cube(const Spectrum & s, unsigned d) -> bool
    {
        return is_submultiset(s, cube_spectrum(d));
    }

    auto to_string(const Polynomial & p) -> std::string
    {
        std::string out;
        for (size_t i = p.size() ; i-- > 0 ; ) {
            if (p[i] == 0 && p.size() > 1)
                continue;
            mpz_class magnitude = abs(p[i]);
            if (! out.empty())
                out += p[i] < 0 ? " - " : " + ";
            else if (p[i] < 0)
                out += "-";
            if (magnitude != 1 || i == 0)
                out += magnitude.get_str();
            if (i >= 1)
                out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
        return out;
    }
}
