#include "trop/random.hpp"

#include "trop/curve.hpp"
#include "trop/errors.hpp"

#include <algorithm>

namespace trop {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<LatticePoint> full_support(long long d) {
  std::vector<LatticePoint> out;
  for (long long i = 0; i <= d; ++i)
    for (long long j = 0; i + j <= d; ++j) out.push_back({i, j});
  return out;
}

std::vector<LatticePoint> corner_cut_support(long long d, Rng& rng) {
  std::uniform_int_distribution<long long> depth(0, d);
  long long k0, k1, k2;
  do {
    k0 = depth(rng);
    k1 = depth(rng);
    k2 = depth(rng);
  } while (k0 + k1 > d || k0 + k2 > d || k1 + k2 > d || (k0 == 0 && k1 == 0 && k2 == 0));
  std::vector<LatticePoint> out;
  for (const auto& p : full_support(d))
    if (p.x + p.y >= k0 && p.x <= d - k1 && p.y <= d - k2) out.push_back(p);
  return out;
}

TropicalPolynomial random_polynomial(std::span<const LatticePoint> support, Rng& rng, long long bound) {
  std::uniform_int_distribution<long long> coeff(-bound, bound);
  TropicalPolynomial::Terms terms;
  for (const auto& p : support) terms[Exponent{p.x, p.y, 0}] = Rational(coeff(rng));
  return TropicalPolynomial(std::move(terms), Arity::Affine);
}

TropicalPolynomial random_smooth_polynomial(std::span<const LatticePoint> support, Rng& rng, int max_attempts) {
  constexpr long long bound = 1'000'000;
  std::uniform_int_distribution<long long> coeff(-bound, bound);
  for (int i = 0; i < max_attempts; ++i) {
    TropicalPolynomial::Terms terms;
    for (const auto& p : support)
      terms[Exponent{p.x, p.y, 0}] = Rational(coeff(rng) - bound * (p.x * p.x + p.x * p.y + p.y * p.y));
    TropicalPolynomial f(std::move(terms), Arity::Affine);
    if (is_smooth(build_curve(f))) return f;
  }
  throw DomainError("no smooth curve found for the given support");
}

}  // namespace trop
