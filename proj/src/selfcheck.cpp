#include "neutro/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

#include "neutro/batch.hpp"
#include "neutro/bifuzzy.hpp"
#include "neutro/measures.hpp"
#include "neutro/norms.hpp"
#include "neutro/penta_def.hpp"
#include "neutro/penta_sat.hpp"
#include "neutro/tetra.hpp"

namespace neutro {

namespace {

using Rng = std::mt19937_64;

// splitmix64 finalizer; decorrelates per-property streams from one master seed.
std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

NeutrosophicTriple random_triple(Rng& rng) {
  const double t = uniform01(rng);
  const double i = uniform01(rng);
  const double f = uniform01(rng);
  return make_triple(t, i, f);
}

std::string fmt_triple(const NeutrosophicTriple& q) {
  char buf[112];
  std::snprintf(buf, sizeof buf, "(T=%.17g, I=%.17g, F=%.17g)", q.t.value(), q.i.value(),
                q.f.value());
  return buf;
}

std::string fmt_xy(double x, double y) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "(x=%.17g, y=%.17g)", x, y);
  return buf;
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

template <typename V>
double max_component_diff(const V& a, const V& b) {
  const auto ca = a.components();
  const auto cb = b.components();
  double d = 0.0;
  for (std::size_t k = 0; k < ca.size(); ++k) d = std::max(d, std::fabs(ca[k] - cb[k]));
  return d;
}

template <typename V>
bool bitwise_equal(const V& a, const V& b) {
  const auto ca = a.components();
  const auto cb = b.components();
  for (std::size_t k = 0; k < ca.size(); ++k)
    if (ca[k] != cb[k]) return false;
  return true;
}

template <typename V>
bool exact_unit_vector(const V& v) {
  int ones = 0;
  for (double c : v.components()) {
    if (c == 1.0) {
      ++ones;
    } else if (c != 0.0) {
      return false;
    }
  }
  return ones == 1;
}

template <typename V>
bool all_nonnegative(const V& v, double tol) {
  for (double c : v.components())
    if (!(c >= -tol)) return false;
  return true;
}

std::vector<TNormFamily> check_families() {
  return {TNormFamily::godel(), TNormFamily::product(), TNormFamily::lukasiewicz(),
          TNormFamily::frank(2.0), TNormFamily::frank(10.0)};
}

constexpr DefinednessProfile kAllProfiles[] = {
    DefinednessProfile::Rational, DefinednessProfile::Sine,
    DefinednessProfile::Quadratic, DefinednessProfile::PiecewiseLinear,
    DefinednessProfile::SquareRoot};

class Property {
 public:
  explicit Property(std::string name) { result_.name = std::move(name); }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.checks;
    if (!ok) {
      if (result_.failures == 0) result_.first_counterexample = describe();
      ++result_.failures;
    }
  }

  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

class Harness {
 public:
  explicit Harness(const SelfcheckOptions& options) : options_(options) {}

  template <typename Body>
  void property(const char* name, Body&& body) {
    Property prop(name);
    Rng rng(mix(options_.seed, index_++));
    body(rng, prop);
    summary_.properties.push_back(prop.take());
  }

  SelfcheckSummary take() { return std::move(summary_); }

 private:
  SelfcheckOptions options_;
  std::uint64_t index_ = 0;
  SelfcheckSummary summary_;
};

}  // namespace

bool SelfcheckSummary::all_passed() const {
  for (const PropertyResult& p : properties)
    if (!p.passed()) return false;
  return true;
}

SelfcheckSummary run_selfcheck(const SelfcheckOptions& options) {
  Harness h(options);
  const std::size_t n = options.samples;
  const double tol = options.tol;
  const auto families = check_families();

  const NeutrosophicTriple proto_t = make_triple(1, 0, 0);
  const NeutrosophicTriple proto_n = make_triple(0, 1, 0);
  const NeutrosophicTriple proto_f = make_triple(0, 0, 1);
  const NeutrosophicTriple proto_s = make_triple(1, 1, 1);
  const NeutrosophicTriple proto_w = make_triple(0, 0, 0);

  // ---- core ----

  h.property("core/unit-validation", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const double x = uniform01(rng);
      const NeutrosophicTriple q = make_triple(x, x, x);
      p.expect(q.t == x, [&] { return fmt_triple(q); });
      bool threw = false;
      try {
        make_triple(x, 1.0 + 1e-6 + x, x);
      } catch (const OutOfRange&) {
        threw = true;
      }
      p.expect(threw, [&] { return "no throw for I > 1: " + fmt_triple(q); });
      const NeutrosophicTriple snapped = make_triple(-0.5e-12, 1.0 + 0.5e-12, x);
      p.expect(snapped.t == 0.0 && snapped.i == 1.0,
               [&] { return "snap failed near bounds, x=" + std::to_string(x); });
    }
  });

  h.property("core/swap-involution", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      const NeutrosophicTriple r = swap_tf(swap_tf(q));
      p.expect(r.t == q.t && r.i == q.i && r.f == q.f, [&] { return fmt_triple(q); });
    }
  });

  // ---- norms ----

  h.property("norms/units-and-bounds", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const double x = uniform01(rng);
      const double y = uniform01(rng);
      for (const TNormFamily& fam : families) {
        const double t = fam.tnorm(x, y);
        const double s = fam.tconorm(x, y);
        const bool ok = t >= 0.0 && t <= 1.0 && s >= 0.0 && s <= 1.0 &&
                        near(fam.tnorm(x, 1.0), x, kExactTol) &&
                        near(fam.tnorm(x, 0.0), 0.0, kExactTol) &&
                        near(fam.tconorm(x, 0.0), x, kExactTol) &&
                        near(fam.tconorm(x, 1.0), 1.0, kExactTol);
        p.expect(ok, [&] { return fam.name() + " " + fmt_xy(x, y); });
      }
    }
  });

  h.property("norms/commutativity", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const double x = uniform01(rng);
      const double y = uniform01(rng);
      for (const TNormFamily& fam : families) {
        p.expect(near(fam.tnorm(x, y), fam.tnorm(y, x), kExactTol) &&
                     near(fam.tconorm(x, y), fam.tconorm(y, x), kExactTol),
                 [&] { return fam.name() + " " + fmt_xy(x, y); });
      }
    }
  });

  h.property("norms/associativity", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const double x = uniform01(rng);
      const double y = uniform01(rng);
      const double z = uniform01(rng);
      for (const TNormFamily& fam : families) {
        const bool ok =
            near(fam.tnorm(fam.tnorm(x, y), z), fam.tnorm(x, fam.tnorm(y, z)), kExactTol) &&
            near(fam.tconorm(fam.tconorm(x, y), z), fam.tconorm(x, fam.tconorm(y, z)),
                 kExactTol);
        p.expect(ok, [&] { return fam.name() + " " + fmt_xy(x, y) + " z"; });
      }
    }
  });

  h.property("norms/monotonicity", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      double x1 = uniform01(rng);
      double x2 = uniform01(rng);
      if (x2 < x1) std::swap(x1, x2);
      const double y = uniform01(rng);
      for (const TNormFamily& fam : families) {
        p.expect(fam.tnorm(x1, y) <= fam.tnorm(x2, y) + kExactTol &&
                     fam.tconorm(x1, y) <= fam.tconorm(x2, y) + kExactTol,
                 [&] { return fam.name() + " " + fmt_xy(x1, x2); });
      }
    }
  });

  h.property("norms/frank-functional-equation", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const double x = uniform01(rng);
      const double y = uniform01(rng);
      for (const TNormFamily& fam : families) {
        p.expect(near(fam.tnorm(x, y) + fam.tconorm(x, y), x + y, kExactTol),
                 [&] { return fam.name() + " " + fmt_xy(x, y); });
      }
    }
  });

  h.property("norms/duality-double-negation", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const double x = uniform01(rng);
      const double y = uniform01(rng);
      for (const TNormFamily& fam : families) {
        p.expect(near(fam.tnorm(x, y), 1.0 - fam.tconorm(1.0 - x, 1.0 - y), kExactTol),
                 [&] { return fam.name() + " " + fmt_xy(x, y); });
      }
    }
  });

  h.property("norms/family-ordering", [&](Rng& rng, Property& p) {
    const TNormFamily godel = TNormFamily::godel();
    const TNormFamily frank2 = TNormFamily::frank(2.0);
    const TNormFamily frank10 = TNormFamily::frank(10.0);
    const TNormFamily luka = TNormFamily::lukasiewicz();
    for (std::size_t k = 0; k < n; ++k) {
      const double x = uniform01(rng);
      const double y = uniform01(rng);
      const double a = godel.tnorm(x, y);
      const double b = frank2.tnorm(x, y);
      const double c = frank10.tnorm(x, y);
      const double d = luka.tnorm(x, y);
      p.expect(a + kExactTol >= b && b + kExactTol >= c && c + kExactTol >= d,
               [&] { return fmt_xy(x, y); });
    }
  });

  h.property("norms/limit-consistency", [&](Rng&, Property& p) {
    const TNormFamily low = TNormFamily::frank(1e-6);
    const TNormFamily high = TNormFamily::frank(1e6);
    const TNormFamily godel = TNormFamily::godel();
    const TNormFamily luka = TNormFamily::lukasiewicz();
    for (int a = 0; a <= 20; ++a) {
      for (int b = 0; b <= 20; ++b) {
        const double x = a / 20.0;
        const double y = b / 20.0;
        p.expect(near(low.tnorm(x, y), godel.tnorm(x, y), 1e-4) &&
                     near(high.tnorm(x, y), luka.tnorm(x, y), 1e-4),
                 [&] { return fmt_xy(x, y); });
      }
    }
  });

  h.property("norms/parse-roundtrip", [&](Rng&, Property& p) {
    std::vector<TNormFamily> all = check_families();
    all.push_back(TNormFamily::frank(0.5));
    all.push_back(TNormFamily::frank(3.7));
    for (const TNormFamily& fam : all) {
      const TNormFamily back = TNormFamily::parse(fam.name());
      p.expect(back.kind() == fam.kind() &&
                   (fam.kind() != TNormKind::Frank ||
                    back.frank_parameter() == fam.frank_parameter()),
               [&] { return fam.name(); });
    }
    p.expect(TNormFamily::parse("GODEL").kind() == TNormKind::Godel,
             [] { return std::string("case-insensitive parse"); });
    for (const char* bad : {"frank:1", "frank:-2", "frank:abc", "hamacher", ""}) {
      bool threw = false;
      try {
        TNormFamily::parse(bad);
      } catch (const InvalidParameter&) {
        threw = true;
      }
      p.expect(threw, [&] { return std::string("accepted \"") + bad + "\""; });
    }
  });

  // ---- bifuzzy ----

  h.property("bifuzzy/partitions", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const double mu = uniform01(rng);
      const double nu = uniform01(rng);
      const BifuzzyPair pair = make_pair(mu, nu);
      const BifuzzyPair ifs_pair = make_pair(mu, uniform01(rng) * (1.0 - mu));
      const auto c3 = fuzzy3(pair.mu).components();
      const auto c4i = ifs4(ifs_pair).components();
      const auto b3 = bifuzzy3(pair).components();
      const auto b4d = bifuzzy4_def(pair).components();
      const auto b4i = bifuzzy4_ign(pair).components();
      const auto b5 = bifuzzy5(pair).components();
      const bool ok = check_partition(c3, tol) && check_partition(c4i, tol) &&
                      check_partition(b3, tol) && check_partition(b4d, tol) &&
                      check_partition(b4i, tol) && check_partition(b5, tol);
      p.expect(ok, [&] { return fmt_xy(mu, nu); });
    }
  });

  h.property("bifuzzy/exclusions", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const BifuzzyPair pair = make_pair(uniform01(rng), uniform01(rng));
      const auto d = bifuzzy4_def(pair);
      const auto g = bifuzzy4_ign(pair);
      const auto v = bifuzzy5(pair);
      const bool ok = d.over_defined * d.under_defined <= kExactTol &&
                      g.truth * g.falsity <= kExactTol &&
                      v.truth * v.falsity <= kExactTol &&
                      v.over_defined * v.under_defined <= kExactTol;
      p.expect(ok, [&] { return fmt_xy(pair.mu, pair.nu); });
    }
    bool threw = false;
    try {
      ifs4(make_pair(0.8, 0.4));
    } catch (const ConstraintViolation&) {
      threw = true;
    }
    p.expect(threw, [] { return std::string("ifs4 accepted mu + nu > 1"); });
  });

  h.property("bifuzzy/mirror-symmetry", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const double mu = uniform01(rng);
      const double nu = uniform01(rng);
      const BifuzzyPair a = make_pair(mu, nu);
      const BifuzzyPair b = make_pair(nu, mu);
      const auto x = bifuzzy5(a);
      const auto y = bifuzzy5(b);
      const bool ok = x.truth == y.falsity && x.falsity == y.truth &&
                      x.over_defined == y.over_defined &&
                      x.under_defined == y.under_defined && x.ambiguity == y.ambiguity;
      p.expect(ok, [&] { return fmt_xy(mu, nu); });
    }
  });

  // ---- measures ----

  h.property("measures/profile-shape", [&](Rng&, Property& p) {
    for (DefinednessProfile prof : kAllProfiles) {
      const auto name = profile_name(prof);
      p.expect(near(definedness(0.0, prof), -1.0, kExactTol) &&
                   near(definedness(1.0, prof), 1.0, kExactTol) &&
                   near(definedness(1.0 / 3.0, prof), 0.0, kExactTol),
               [&] { return std::string(name) + " anchor points"; });
      double prev = definedness(0.0, prof);
      for (int k = 1; k <= 1000; ++k) {
        const double cur = definedness(k / 1000.0, prof);
        p.expect(cur + kExactTol >= prev && std::fabs(cur) <= 1.0 + kExactTol,
                 [&] { return std::string(name) + " at " + std::to_string(k / 1000.0); });
        prev = cur;
      }
    }
  });

  h.property("measures/mirror-antisymmetry", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      const NeutrosophicTriple m = swap_tf(q);
      for (DefinednessProfile prof : kAllProfiles) {
        p.expect(near(score(m, prof), -score(q, prof), kExactTol),
                 [&] { return std::string(profile_name(prof)) + " " + fmt_triple(q); });
      }
      const bool ok = near(net_truth(m), -net_truth(q), kExactTol) &&
                      near(entropy_czekanowski(m), entropy_czekanowski(q), kExactTol) &&
                      near(entropy_ruzicka(m), entropy_ruzicka(q), kExactTol);
      p.expect(ok, [&] { return fmt_triple(q); });
    }
  });

  h.property("measures/ranges", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      const ScalarReport r = scalar_report(q);
      const bool ok = std::fabs(r.net_truth) <= 1.0 + kExactTol &&
                      std::fabs(r.definedness) <= 1.0 + kExactTol &&
                      std::fabs(r.score) <= 1.0 + kExactTol && r.mean >= 0.0 &&
                      r.mean <= 1.0 && r.entropy_czekanowski >= -kExactTol &&
                      r.entropy_czekanowski <= 1.0 + kExactTol &&
                      r.entropy_ruzicka >= -kExactTol &&
                      r.entropy_ruzicka <= r.entropy_czekanowski + kExactTol;
      p.expect(ok, [&] { return fmt_triple(q); });
    }
  });

  h.property("measures/kaufman-kosko-reduction", [&](Rng&, Property& p) {
    for (int k = 0; k <= 1000; ++k) {
      const double mu = k / 1000.0;
      const NeutrosophicTriple q = make_triple(mu, 0.0, 1.0 - mu);
      const double bias = std::fabs(2.0 * mu - 1.0);
      p.expect(near(entropy_czekanowski(q), 1.0 - bias, kExactTol) &&
                   near(entropy_ruzicka(q), (1.0 - bias) / (1.0 + bias), kExactTol),
               [&] { return "mu = " + std::to_string(mu); });
    }
  });

  h.property("measures/simplex-reduction", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const double t = uniform01(rng);
      const double i = (1.0 - t) * uniform01(rng);
      const double f = std::max(1.0 - t - i, 0.0);
      const NeutrosophicTriple q = make_triple(t, i, f);
      const double bias = std::fabs(q.t - q.f);
      const bool ok =
          near(entropy_czekanowski(q), 1.0 - bias / (1.0 + q.i), kExactTol) &&
          near(entropy_ruzicka(q), (1.0 - bias + q.i) / (1.0 + bias + q.i), kExactTol);
      p.expect(ok, [&] { return fmt_triple(q); });
    }
  });

  h.property("measures/entropy-distance-route", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      const CrispDistances d = crisp_distances(q);
      const double via_czek = 1.0 - std::fabs(d.to_true - d.to_false) / (d.to_true + d.to_false);
      const double via_ruz =
          1.0 - std::fabs(d.to_true - d.to_false) / std::max(d.to_true, d.to_false);
      p.expect(near(entropy_czekanowski(q), via_czek, kExactTol) &&
                   near(entropy_ruzicka(q), via_ruz, kExactTol),
               [&] { return fmt_triple(q); });
    }
  });

  h.property("measures/entropy-bias-monotonicity", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const double t = uniform01(rng);
      const double f = uniform01(rng);
      const double i = uniform01(rng);
      const double mid = (t + f) / 2.0;
      const double alpha = uniform01(rng);
      const NeutrosophicTriple wide = make_triple(t, i, f);
      const NeutrosophicTriple narrow =
          make_triple(mid + alpha * (t - mid), i, mid + alpha * (f - mid));
      p.expect(entropy_czekanowski(narrow) + kExactTol >= entropy_czekanowski(wide) &&
                   entropy_ruzicka(narrow) + kExactTol >= entropy_ruzicka(wide),
               [&] { return fmt_triple(wide) + " alpha=" + std::to_string(alpha); });
    }
  });

  h.property("measures/score-order", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple a = random_triple(rng);
      const NeutrosophicTriple b = random_triple(rng);
      p.expect(compare(a, a) == ScoreOrder::Equal, [&] { return fmt_triple(a); });
      const ScoreOrder ab = compare(a, b);
      const ScoreOrder ba = compare(b, a);
      const bool antisym = (ab == ScoreOrder::Equal && ba == ScoreOrder::Equal) ||
                           (ab == ScoreOrder::Greater && ba == ScoreOrder::Less) ||
                           (ab == ScoreOrder::Less && ba == ScoreOrder::Greater);
      p.expect(antisym, [&] { return fmt_triple(a) + " vs " + fmt_triple(b); });
      if (score(a) - score(b) > 2.0 * kExactTol) {
        p.expect(ab == ScoreOrder::Greater, [&] { return fmt_triple(a) + " vs " + fmt_triple(b); });
      }
    }
  });

  // ---- tetra ----

  h.property("tetra/decomposition-partition", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      const TetraVector v = decompose4(q);
      const double hi = std::max({q.t.value(), q.i.value(), q.f.value()});
      const bool ok = is_partition(v, tol) && all_nonnegative(v, 0.0) &&
                      near(v.truth + v.neutrality + v.falsity, hi, kExactTol) &&
                      v.ignorance == 1.0 - hi;
      p.expect(ok, [&] { return fmt_triple(q); });
    }
  });

  h.property("tetra/atanassov-reduction", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const double mu = uniform01(rng);
      const double nu = uniform01(rng);
      const TetraVector v = decompose4(make_triple(mu, 0.0, nu));
      const Bifuzzy3Vector b = bifuzzy3(make_pair(mu, nu));
      const bool ok = v.truth == b.truth && v.falsity == b.falsity &&
                      v.ignorance == b.ignorance && v.neutrality == 0.0;
      p.expect(ok, [&] { return fmt_xy(mu, nu); });
    }
  });

  h.property("tetra/mirror-negation", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      const TetraVector v = decompose4(q);
      p.expect(bitwise_equal(negate4(negate4(v)), v), [&] { return fmt_triple(q); });
      p.expect(bitwise_equal(decompose4(swap_tf(q)), negate4(v)),
               [&] { return fmt_triple(q); });
    }
  });

  h.property("tetra/algebra-partition", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const TetraVector a = decompose4(random_triple(rng));
      const TetraVector b = decompose4(random_triple(rng));
      for (const TNormFamily& fam : families) {
        const TetraVector u = union4(a, b, fam);
        const TetraVector i = intersect4(a, b, fam);
        p.expect(is_partition(u, tol) && is_partition(i, tol),
                 [&] { return fam.name() + " pair " + std::to_string(k); });
      }
    }
  });

  h.property("tetra/de-morgan-idempotence", [&](Rng& rng, Property& p) {
    const TNormFamily godel = TNormFamily::godel();
    for (std::size_t k = 0; k < n; ++k) {
      const TetraVector a = decompose4(random_triple(rng));
      const TetraVector b = decompose4(random_triple(rng));
      for (const TNormFamily& fam : families) {
        const double d1 =
            max_component_diff(negate4(union4(a, b, fam)),
                               intersect4(negate4(a), negate4(b), fam));
        const double d2 = max_component_diff(negate4(intersect4(a, b, fam)),
                                             union4(negate4(a), negate4(b), fam));
        p.expect(d1 <= kExactTol && d2 <= kExactTol, [&] { return fam.name(); });
      }
      p.expect(max_component_diff(union4(a, a, godel), a) <= kExactTol &&
                   max_component_diff(intersect4(a, a, godel), a) <= kExactTol,
               [] { return std::string("godel idempotence"); });
    }
  });

  h.property("tetra/commutativity-associativity", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const TetraVector a = decompose4(random_triple(rng));
      const TetraVector b = decompose4(random_triple(rng));
      const TetraVector c = decompose4(random_triple(rng));
      for (const TNormFamily& fam : families) {
        const bool ok =
            max_component_diff(union4(a, b, fam), union4(b, a, fam)) <= kExactTol &&
            max_component_diff(intersect4(a, b, fam), intersect4(b, a, fam)) <= kExactTol &&
            max_component_diff(union4(union4(a, b, fam), c, fam),
                               union4(a, union4(b, c, fam), fam)) <= tol &&
            max_component_diff(intersect4(intersect4(a, b, fam), c, fam),
                               intersect4(a, intersect4(b, c, fam), fam)) <= tol;
        p.expect(ok, [&] { return fam.name(); });
      }
    }
  });

  h.property("tetra/prototype-table", [&](Rng&, Property& p) {
    const TetraVector protos[] = {decompose4(proto_t), decompose4(proto_n),
                                  decompose4(proto_w), decompose4(proto_f)};
    for (const TetraVector& v : protos) {
      p.expect(exact_unit_vector(v), [] { return std::string("prototype decomposition"); });
    }
    const TNormFamily reference = TNormFamily::product();
    for (const TetraVector& a : protos) {
      for (const TetraVector& b : protos) {
        const TetraVector ur = union4(a, b, reference);
        const TetraVector ir = intersect4(a, b, reference);
        p.expect(exact_unit_vector(ur) && exact_unit_vector(ir),
                 [] { return std::string("non-crisp table entry"); });
        for (const TNormFamily& fam : families) {
          p.expect(bitwise_equal(union4(a, b, fam), ur) &&
                       bitwise_equal(intersect4(a, b, fam), ir),
                   [&] { return fam.name() + " disagrees with product table"; });
        }
      }
    }
  });

  // ---- penta-sat ----

  h.property("penta-sat/decomposition-partition", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      const PentaSatVector v = decompose5s(q);
      const double hi = std::max({q.t.value(), q.i.value(), q.f.value()});
      const double lo = std::min({q.t.value(), q.i.value(), q.f.value()});
      const bool ok = is_partition(v, tol) && all_nonnegative(v, 0.0) &&
                      v.saturation == lo && v.ignorance == 1.0 - hi &&
                      near(v.truth + v.neutrality + v.falsity, hi - lo, kExactTol);
      p.expect(ok, [&] { return fmt_triple(q); });
    }
  });

  h.property("penta-sat/beta-route", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      const PentaSatVector v = decompose5s(q);
      const TetraVector beta = decompose4(q);
      const double min_beta = std::min({beta.truth, beta.neutrality, beta.falsity});
      const double lo = std::min({q.t.value(), q.i.value(), q.f.value()});
      const bool ok = near(v.truth, beta.truth - min_beta, kExactTol) &&
                      near(v.neutrality, beta.neutrality - min_beta, kExactTol) &&
                      near(v.falsity, beta.falsity - min_beta, kExactTol) &&
                      near(v.saturation, 3.0 * min_beta, kExactTol) &&
                      near(min_beta, lo / 3.0, kExactTol);
      p.expect(ok, [&] { return fmt_triple(q); });
    }
  });

  h.property("penta-sat/mirror-negation", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      const PentaSatVector v = decompose5s(q);
      p.expect(bitwise_equal(negate5s(negate5s(v)), v), [&] { return fmt_triple(q); });
      p.expect(bitwise_equal(decompose5s(swap_tf(q)), negate5s(v)),
               [&] { return fmt_triple(q); });
    }
  });

  h.property("penta-sat/algebra", [&](Rng& rng, Property& p) {
    const TNormFamily godel = TNormFamily::godel();
    for (std::size_t k = 0; k < n; ++k) {
      const PentaSatVector a = decompose5s(random_triple(rng));
      const PentaSatVector b = decompose5s(random_triple(rng));
      for (const TNormFamily& fam : families) {
        const PentaSatVector u = union5s(a, b, fam);
        const PentaSatVector i = intersect5s(a, b, fam);
        const double dm1 = max_component_diff(negate5s(u),
                                              intersect5s(negate5s(a), negate5s(b), fam));
        const double dm2 =
            max_component_diff(negate5s(i), union5s(negate5s(a), negate5s(b), fam));
        p.expect(is_partition(u, tol) && is_partition(i, tol) && dm1 <= kExactTol &&
                     dm2 <= kExactTol,
                 [&] { return fam.name(); });
      }
      p.expect(max_component_diff(union5s(a, a, godel), a) <= kExactTol &&
                   max_component_diff(intersect5s(a, a, godel), a) <= kExactTol,
               [] { return std::string("godel idempotence"); });
    }
  });

  h.property("penta-sat/prototype-table", [&](Rng&, Property& p) {
    const PentaSatVector protos[] = {decompose5s(proto_t), decompose5s(proto_n),
                                     decompose5s(proto_s), decompose5s(proto_w),
                                     decompose5s(proto_f)};
    for (const PentaSatVector& v : protos) {
      p.expect(exact_unit_vector(v), [] { return std::string("prototype decomposition"); });
    }
    const TNormFamily reference = TNormFamily::product();
    for (const PentaSatVector& a : protos) {
      for (const PentaSatVector& b : protos) {
        const PentaSatVector ur = union5s(a, b, reference);
        const PentaSatVector ir = intersect5s(a, b, reference);
        p.expect(exact_unit_vector(ur) && exact_unit_vector(ir),
                 [] { return std::string("non-crisp table entry"); });
        for (const TNormFamily& fam : families) {
          p.expect(bitwise_equal(union5s(a, b, fam), ur) &&
                       bitwise_equal(intersect5s(a, b, fam), ir),
                   [&] { return fam.name() + " disagrees with product table"; });
        }
      }
    }
  });

  h.property("penta-sat/tetra-dominance", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      const TetraVector four = decompose4(q);
      const PentaSatVector five = decompose5s(q);
      const bool ok = five.truth <= four.truth + kExactTol &&
                      five.neutrality <= four.neutrality + kExactTol &&
                      five.falsity <= four.falsity + kExactTol &&
                      five.ignorance == four.ignorance;
      p.expect(ok, [&] { return fmt_triple(q); });
    }
  });

  // ---- penta-def ----

  h.property("penta-def/decomposition-partition", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      const double lambda = mean_component(q);
      for (DefinednessProfile prof : kAllProfiles) {
        const PentaDefVector v = decompose5d(q, prof);
        bool ok = is_partition(v, tol) && all_nonnegative(v, 0.0) &&
                  v.over_defined * v.under_defined == 0.0;
        if (lambda > 1.0 / 3.0 + tol) ok = ok && v.under_defined == 0.0;
        if (lambda < 1.0 / 3.0 - tol) ok = ok && v.over_defined == 0.0;
        p.expect(ok, [&] { return std::string(profile_name(prof)) + " " + fmt_triple(q); });
      }
    }
  });

  h.property("penta-def/mirror-negation", [&](Rng& rng, Property& p) {
    for (std::size_t k = 0; k < n; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      for (DefinednessProfile prof : kAllProfiles) {
        const PentaDefVector v = decompose5d(q, prof);
        p.expect(bitwise_equal(negate5d(negate5d(v)), v), [&] { return fmt_triple(q); });
        p.expect(max_component_diff(decompose5d(swap_tf(q), prof), negate5d(v)) <= kExactTol,
                 [&] { return std::string(profile_name(prof)) + " " + fmt_triple(q); });
      }
    }
  });

  h.property("penta-def/algebra", [&](Rng& rng, Property& p) {
    const TNormFamily godel = TNormFamily::godel();
    for (std::size_t k = 0; k < n; ++k) {
      const PentaDefVector a = decompose5d(random_triple(rng));
      const PentaDefVector b = decompose5d(random_triple(rng));
      for (const TNormFamily& fam : families) {
        const PentaDefVector u = union5d(a, b, fam);
        const PentaDefVector i = intersect5d(a, b, fam);
        const double dm1 = max_component_diff(negate5d(u),
                                              intersect5d(negate5d(a), negate5d(b), fam));
        const double dm2 =
            max_component_diff(negate5d(i), union5d(negate5d(a), negate5d(b), fam));
        p.expect(is_partition(u, tol) && is_partition(i, tol) && dm1 <= kExactTol &&
                     dm2 <= kExactTol,
                 [&] { return fam.name(); });
      }
      p.expect(max_component_diff(union5d(a, a, godel), a) <= kExactTol &&
                   max_component_diff(intersect5d(a, a, godel), a) <= kExactTol,
               [] { return std::string("godel idempotence"); });
    }
  });

  h.property("penta-def/prototypes", [&](Rng&, Property& p) {
    const NeutrosophicTriple protos[] = {proto_t, proto_n, proto_f, proto_s, proto_w};
    for (const NeutrosophicTriple& q : protos) {
      p.expect(exact_unit_vector(decompose5d(q, DefinednessProfile::Rational)),
               [&] { return "rational " + fmt_triple(q); });
    }
    for (DefinednessProfile prof : kAllProfiles) {
      p.expect(exact_unit_vector(decompose5d(proto_s, prof)) &&
                   exact_unit_vector(decompose5d(proto_w, prof)),
               [&] { return std::string(profile_name(prof)) + " saturated/void"; });
      for (const NeutrosophicTriple& q : {proto_t, proto_n, proto_f}) {
        const PentaDefVector v = decompose5d(q, prof);
        double off_mass = 0.0;
        double peak = 0.0;
        for (double c : v.components()) {
          peak = std::max(peak, c);
          off_mass += c;
        }
        p.expect(near(peak, 1.0, kExactTol) && near(off_mass, 1.0, kExactTol),
                 [&] { return std::string(profile_name(prof)) + " " + fmt_triple(q); });
      }
    }
    const TNormFamily reference = TNormFamily::product();
    PentaDefVector vec_protos[5];
    for (int k = 0; k < 5; ++k) vec_protos[k] = decompose5d(protos[k]);
    for (const PentaDefVector& a : vec_protos) {
      for (const PentaDefVector& b : vec_protos) {
        const PentaDefVector ur = union5d(a, b, reference);
        const PentaDefVector ir = intersect5d(a, b, reference);
        p.expect(exact_unit_vector(ur) && exact_unit_vector(ir),
                 [] { return std::string("non-crisp table entry"); });
        for (const TNormFamily& fam : families) {
          p.expect(bitwise_equal(union5d(a, b, fam), ur) &&
                       bitwise_equal(intersect5d(a, b, fam), ir),
                   [&] { return fam.name() + " disagrees with product table"; });
        }
      }
    }
  });

  // ---- cli ----

  h.property("cli/rank-stability", [&](Rng& rng, Property& p) {
    RecordBatch batch;
    const std::size_t base = std::max<std::size_t>(n / 4, 4);
    for (std::size_t k = 0; k < base; ++k) {
      const NeutrosophicTriple q = random_triple(rng);
      batch.records.push_back({"a" + std::to_string(k), q});
      batch.records.push_back({"b" + std::to_string(k), q});  // exact tie partner
    }
    const auto ranked = rank_by_score(batch, kDefaultProfile);
    p.expect(ranked.size() == batch.records.size(),
             [] { return std::string("size mismatch"); });
    for (std::size_t k = 0; k + 1 < ranked.size(); ++k) {
      p.expect(ranked[k].score >= ranked[k + 1].score - kPartitionTol,
               [&] { return "descending order broken at " + std::to_string(k); });
    }
    std::vector<std::size_t> position(batch.records.size());
    for (std::size_t k = 0; k < ranked.size(); ++k) position[ranked[k].index] = k;
    for (std::size_t k = 0; k < base; ++k) {
      p.expect(position[2 * k] < position[2 * k + 1],
               [&] { return "tie order broken for pair " + std::to_string(k); });
    }
  });

  return h.take();
}

void write_summary(std::ostream& out, const SelfcheckSummary& summary,
                   const SelfcheckOptions& options) {
  std::size_t passed = 0;
  for (const PropertyResult& p : summary.properties) {
    char line[160];
    if (p.passed()) {
      ++passed;
      std::snprintf(line, sizeof line, "%-44s %10llu checks  pass\n", p.name.c_str(),
                    static_cast<unsigned long long>(p.checks));
      out << line;
    } else {
      std::snprintf(line, sizeof line, "%-44s %10llu checks  FAIL (%llu failures)\n",
                    p.name.c_str(), static_cast<unsigned long long>(p.checks),
                    static_cast<unsigned long long>(p.failures));
      out << line;
      out << "    first counterexample: " << p.first_counterexample << "\n";
    }
  }
  char tail[160];
  std::snprintf(tail, sizeof tail,
                "selfcheck: %zu/%zu properties passed (samples=%zu, seed=%llu, tol=%g)\n",
                passed, summary.properties.size(), options.samples,
                static_cast<unsigned long long>(options.seed), options.tol);
  out << tail;
}

}  // namespace neutro
