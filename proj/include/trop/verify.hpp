#pragma once

// Seeded verification drivers for the intersection counts and the group law.
// Each trial is independent; a report is the in-order fold of its trials.

#include "trop/elliptic.hpp"
#include "trop/polynomial.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace trop {

struct TrialResult {
  std::uint64_t seed = 0;
  std::string f, g;          // polynomials, or a description of the sampled points
  long long expected = 0;
  long long total = 0;
  bool balanced = true;      // every curve built in the trial satisfied balancing
  bool passed = false;
  std::string note;
};

struct VerificationReport {
  std::string name;
  std::vector<TrialResult> trials;

  std::size_t failures() const;
  bool passed() const { return failures() == 0 && !trials.empty(); }
  // One line per trial plus a summary line.
  std::string text() const;
};

enum class BezoutMode { BothFull, OneFull };

// Random curves of degrees c and d (full support, or in OneFull mode the
// second curve on a corner-cut support of the same degree); each stable
// intersection must total c * d.
VerificationReport verify_bezout(long long c, long long d, int trials, std::uint64_t seed, BezoutMode mode);

// Transversal intersection count against the mixed area of the Newton
// polygons. Throws DomainError if the curves are not transversal.
VerificationReport verify_bernstein(const TropicalPolynomial& f, const TropicalPolynomial& g);

// Random transversal pairs on random supports inside [0, max_degree]^2.
VerificationReport verify_bernstein_random(int trials, std::uint64_t seed, long long max_degree);

// Associativity, commutativity, identity, inverses and the lambda
// homomorphism on random rational cycle points.
VerificationReport verify_group_axioms(const CycleModel& cycle, int trials, std::uint64_t seed);

// Uniform edge, t = length * k / m with 1 <= m <= 1000, 0 <= k < m.
CyclePoint random_cycle_point(const CycleModel& cycle, std::mt19937_64& rng);

}  // namespace trop
