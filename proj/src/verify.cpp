#include "trop/verify.hpp"

#include "trop/curve.hpp"
#include "trop/errors.hpp"
#include "trop/intersect.hpp"
#include "trop/random.hpp"

#include <algorithm>
#include <sstream>

namespace trop {

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const TrialResult& t) { return !t.passed; }));
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const auto& t = trials[i];
    os << name << " trial " << i << " seed=" << t.seed << " expected=" << t.expected << " total=" << t.total
       << (t.balanced ? "" : " UNBALANCED") << " " << (t.passed ? "pass" : "FAIL");
    if (!t.note.empty()) os << " (" << t.note << ")";
    os << "\n";
  }
  os << name << ": " << (trials.size() - failures()) << "/" << trials.size() << " passed\n";
  return os.str();
}

VerificationReport verify_bezout(long long c, long long d, int trials, std::uint64_t seed, BezoutMode mode) {
  VerificationReport report;
  report.name = "bezout(" + std::to_string(c) + "," + std::to_string(d) +
                (mode == BezoutMode::BothFull ? ",both-full)" : ",one-full)");
  for (int i = 0; i < trials; ++i) {
    TrialResult r;
    r.seed = trial_seed(seed, static_cast<std::uint64_t>(i));
    Rng rng(r.seed);
    const auto sf = full_support(c);
    const auto sg = mode == BezoutMode::BothFull ? full_support(d) : corner_cut_support(d, rng);
    const auto f = random_polynomial(sf, rng);
    const auto g = random_polynomial(sg, rng);
    r.f = f.str();
    r.g = g.str();
    r.expected = c * d;
    if (curve_degree(g).degree != d) {
      r.note = "sampled support has the wrong degree";
      report.trials.push_back(std::move(r));
      continue;
    }
    const auto cf = build_curve(f);
    const auto cg = build_curve(g);
    r.balanced = check_balancing(cf) && check_balancing(cg);
    r.total = stable_intersection(cf, cg).total();
    r.passed = r.balanced && r.total == r.expected;
    report.trials.push_back(std::move(r));
  }
  return report;
}

VerificationReport verify_bernstein(const TropicalPolynomial& f, const TropicalPolynomial& g) {
  const auto cf = build_curve(f);
  const auto cg = build_curve(g);
  const auto meets = transversal_intersections(cf, cg);
  const Rational area = mixed_area(newton_polygon(cf.polynomial), newton_polygon(cg.polynomial));
  if (!area.is_integer()) throw std::logic_error("mixed area of lattice polygons is not an integer");
  TrialResult r;
  r.f = f.str();
  r.g = g.str();
  r.expected = area.numerator().get_si();
  r.total = meets.total();
  r.balanced = check_balancing(cf) && check_balancing(cg);
  r.passed = r.balanced && r.total == r.expected;
  return {"bernstein", {r}};
}

VerificationReport verify_bernstein_random(int trials, std::uint64_t seed, long long max_degree) {
  VerificationReport report;
  report.name = "bernstein";
  std::vector<LatticePoint> box;
  for (long long i = 0; i <= max_degree; ++i)
    for (long long j = 0; j <= max_degree; ++j) box.push_back({i, j});
  auto random_support = [&](Rng& rng) {
    std::uniform_int_distribution<std::size_t> count(2, std::min<std::size_t>(box.size(), 8));
    std::vector<LatticePoint> pts = box;
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(count(rng));
    return pts;
  };
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = trial_seed(seed, static_cast<std::uint64_t>(i));
    Rng rng(s);
    TrialResult r;
    r.seed = s;
    bool found = false;
    for (int attempt = 0; attempt < 100 && !found; ++attempt) {
      const auto sf = random_support(rng);
      const auto sg = random_support(rng);
      const auto f = random_polynomial(sf, rng);
      const auto g = random_polynomial(sg, rng);
      if (!is_transversal(build_curve(f), build_curve(g))) continue;
      r = verify_bernstein(f, g).trials.front();
      r.seed = s;
      found = true;
    }
    if (!found) r.note = "no transversal pair sampled";
    report.trials.push_back(std::move(r));
  }
  return report;
}

CyclePoint random_cycle_point(const CycleModel& cycle, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> edge(0, cycle.size() - 1);
  std::uniform_int_distribution<long long> den(1, 1000);
  const std::size_t e = edge(rng);
  const long long m = den(rng);
  std::uniform_int_distribution<long long> num(0, m - 1);
  return {e, cycle.lengths[e] * Rational(num(rng), m)};
}

VerificationReport verify_group_axioms(const CycleModel& cycle, int trials, std::uint64_t seed) {
  if (!cycle.origin) throw DomainError("base point not set");
  VerificationReport report;
  report.name = "group-axioms";
  const CyclePoint& o = *cycle.origin;
  for (int i = 0; i < trials; ++i) {
    TrialResult r;
    r.seed = trial_seed(seed, static_cast<std::uint64_t>(i));
    Rng rng(r.seed);
    const auto p = random_cycle_point(cycle, rng);
    const auto q = random_cycle_point(cycle, rng);
    const auto s = random_cycle_point(cycle, rng);
    std::ostringstream desc;
    desc << "P=(" << p.edge << "," << p.t << ") Q=(" << q.edge << "," << q.t << ") R=(" << s.edge << "," << s.t << ")";
    r.f = desc.str();
    std::vector<std::string> broken;
    if (group_add(cycle, group_add(cycle, p, q), s) != group_add(cycle, p, group_add(cycle, q, s)))
      broken.push_back("associativity");
    if (group_add(cycle, p, q) != group_add(cycle, q, p)) broken.push_back("commutativity");
    if (group_add(cycle, p, o) != p) broken.push_back("identity");
    if (group_add(cycle, p, group_neg(cycle, p)) != o) broken.push_back("inverse");
    if (lambda(cycle, group_add(cycle, p, q)) != mod(lambda(cycle, p) + lambda(cycle, q), Rational(1)))
      broken.push_back("lambda homomorphism");
    r.expected = 0;
    r.total = static_cast<long long>(broken.size());
    r.passed = broken.empty();
    for (const auto& b : broken) r.note += (r.note.empty() ? "" : ", ") + b;
    report.trials.push_back(std::move(r));
  }
  return report;
}

}  // namespace trop
