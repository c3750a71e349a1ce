#include "nott/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "nott/character.hpp"
#include "nott/equivalence.hpp"
#include "nott/errors.hpp"
#include "nott/literal.hpp"
#include "nott/reduction.hpp"
#include "nott/sampling.hpp"
#include "nott/series.hpp"

namespace nott {

namespace {

using Clock = std::chrono::steady_clock;

struct Triple {
  int p;
  int l;
  int m;
};

const std::vector<Triple> kEqualityGrid = {{2, 1, 2}, {2, 1, 3}, {2, 1, 5}, {3, 1, 3},
                                           {3, 1, 4}, {3, 1, 5}, {3, 2, 7}};

std::string triple_text(int p, int l, int m) {
  return "(" + std::to_string(p) + "," + std::to_string(l) + "," + std::to_string(m) + ")";
}

SearchOptions search_options(const AcceptanceOptions& options) {
  SearchOptions s;
  s.budget = options.budget;
  s.jobs = options.jobs;
  return s;
}

// Collects the first few mismatches of a check.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < 3) failures_.push_back(what);
  }
  bool ok() const { return failed_ == 0; }
  std::size_t checked() const { return checked_; }
  std::string summary(const std::string& noun) const {
    std::ostringstream os;
    os << checked_ << ' ' << noun << ", " << failed_ << " failed";
    for (const auto& f : failures_) os << "; " << f;
    return os.str();
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

CriterionResult reduced_form_count(const AcceptanceOptions&) {
  CriterionResult r{"1", "reduced-form count equals B(p,l,m)", false, "", 0};
  const auto start = Clock::now();
  Tally tally;
  for (int p : {2, 3, 5}) {
    const Prime prime(p);
    for (const TypeLM& type : valid_types(prime, 6, 18)) {
      const std::uint64_t got = enumerate_reduced_forms(prime, type.l, type.m).size();
      const std::uint64_t want = bound_B(prime, type.l, type.m).value;
      tally.expect(got == want, triple_text(p, type.l, type.m) + ": " + std::to_string(got) +
                                    " forms, B = " + std::to_string(want));
    }
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = tally.ok() && seconds < 1.0;
  r.detail = tally.summary("types");
  if (seconds >= 1.0) r.detail += "; over the 1 s limit";
  return r;
}

CriterionResult canonical_equals_oracle(const AcceptanceOptions& options) {
  CriterionResult r{"2", "canonical-reduce = oracle-partition = B for l < p", false, "", 0};
  const auto start = Clock::now();
  Tally tally;
  std::ostringstream counts;
  for (const auto& [p, l, m] : kEqualityGrid) {
    const Prime prime(p);
    const std::uint64_t b = bound_B(prime, l, m).value;
    const std::uint64_t canonical =
        count_classes(prime, l, m, CountMethod::canonical_reduce, search_options(options));
    const std::uint64_t oracle =
        count_classes(prime, l, m, CountMethod::oracle_partition, search_options(options));
    counts << ' ' << triple_text(p, l, m) << "->" << canonical;
    tally.expect(canonical == b && oracle == b,
                 triple_text(p, l, m) + ": canonical " + std::to_string(canonical) + ", oracle " +
                     std::to_string(oracle) + ", B " + std::to_string(b));
  }
  tally.expect(count_classes(Prime(3), 2, 7, CountMethod::canonical_reduce) == 12, "(3,2,7) != 12");
  tally.expect(count_classes(Prime(3), 1, 4, CountMethod::canonical_reduce) == 4, "(3,1,4) != 4");
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = tally.ok() && seconds < 60.0;
  r.detail = tally.summary("checks") + ";" + counts.str();
  return r;
}

CriterionResult legacy_d1m(const AcceptanceOptions& options) {
  CriterionResult r{"3a", "d_{1,m} matches the classical table", false, "", 0};
  Tally tally;
  for (const auto& [p, l, m] : kEqualityGrid) {
    if (l != 1) continue;
    const Prime prime(p);
    const std::uint64_t d =
        count_classes(prime, l, m, CountMethod::oracle_partition, search_options(options));
    const std::uint64_t table = legacy_counts(prime, m, LegacyCount::d_1m);
    tally.expect(d == table, triple_text(p, l, m) + ": d = " + std::to_string(d) +
                                 ", table " + std::to_string(table));
  }
  r.passed = tally.ok();
  r.detail = tally.summary("types");
  return r;
}

// Type <2, m> for p in {2, 3}, m <= 8. p = 2 has none (2 | l).
std::vector<Triple> weak_grid() {
  std::vector<Triple> out;
  for (int p : {2, 3}) {
    for (int m = 1; m <= 8; ++m) {
      if (validate_type(Prime(p), 2, m)) out.push_back({p, 2, m});
    }
  }
  return out;
}

CriterionResult legacy_weak(const AcceptanceOptions& options) {
  CriterionResult r{"3b", "weak class counts for <2,m> match the classical table", false, "", 0};
  Tally tally;
  for (const auto& [p, l, m] : weak_grid()) {
    const Prime prime(p);
    const std::uint64_t weak =
        partition_reduced_forms(prime, l, m, search_options(options), Equivalence::weak)
            .class_count;
    const std::uint64_t table = legacy_counts(prime, m, LegacyCount::d_2m_weak);
    tally.expect(weak == table, triple_text(p, l, m) + ": weak " + std::to_string(weak) +
                                    ", table " + std::to_string(table));
  }
  r.passed = tally.ok() && tally.checked() > 0;
  r.detail = tally.summary("types") + " (p = 2 has no valid <2,m>)";
  return r;
}

CriterionResult strict_is_p_times_weak(const AcceptanceOptions& options) {
  CriterionResult r{"3c", "d_{2,m} = p * d^weak_{2,m}", false, "", 0};
  Tally tally;
  for (const auto& [p, l, m] : weak_grid()) {
    const Prime prime(p);
    const std::uint64_t strict =
        partition_reduced_forms(prime, l, m, search_options(options), Equivalence::strict)
            .class_count;
    const std::uint64_t weak =
        partition_reduced_forms(prime, l, m, search_options(options), Equivalence::weak)
            .class_count;
    tally.expect(strict == static_cast<std::uint64_t>(p) * weak,
                 triple_text(p, l, m) + ": d = " + std::to_string(strict) + ", p * d^weak = " +
                     std::to_string(p * weak));
  }
  r.passed = tally.ok() && tally.checked() > 0;
  r.detail = tally.summary("types");
  return r;
}

const Prime kTwo(2);

Character pair_chi() { return Character(kTwo, {{5, 1}, {15, 2}}); }
Character pair_psi() { return Character(kTwo, {{5, 1}, {11, 2}, {15, 2}}); }

CriterionResult pair_search(const AcceptanceOptions& options) {
  CriterionResult r{"4a", "strict witness between {5:1,15:2} and {5:1,11:2,15:2}", false, "", 0};
  const Character chi = pair_chi();
  const Character psi = pair_psi();
  const auto w = strict_equiv_search(chi, psi, search_options(options));
  if (!w) {
    r.detail = "no strict witness found";
    return r;
  }
  const WitnessCheck check = check_witness(chi, psi, w->u);
  r.passed = check == WitnessCheck::ok;
  r.detail = "u = " + format_product(w->u) + ", check " + to_string(check);
  return r;
}

CriterionResult pair_replay(const AcceptanceOptions&) {
  CriterionResult r{"4b", "replay of the u = t(1+t^3+t^4)(1+t^15)^e construction", false, "", 0};
  const Character chi = pair_chi();
  const int m = 15;
  Tally tally;
  std::optional<int> chosen;
  std::optional<NottinghamElt> u0;
  for (int e = 0; e < 4; ++e) {
    const UnitSeries g = parse_unit("1+t^3+t^4", kTwo, m) * unit_pow(UnitSeries::basis(kTwo, 15, m), e);
    const NottinghamElt u(g);
    const Character acted = char_act(u, chi);
    tally.expect(acted.coeff(11) == 2, "e = " + std::to_string(e) + ": u chi(E_11) = " +
                                           std::to_string(acted.coeff(11)));
    if (!chosen && char_eval(chi, g) == 0) {
      chosen = e;
      u0 = u;
    }
  }
  tally.expect(chosen.has_value(), "no e gives chi(u/t) = 0");
  if (!chosen) {
    r.detail = tally.summary("checks");
    return r;
  }
  const Character stage_one = char_act(*u0, chi);
  tally.expect(is_stage_one(stage_one), "u chi is not in stage-1 form");
  tally.expect(break_sequence(stage_one) == TypeLM{5, 15}, "u chi changed type");
  const ReductionStep cleared = clear_low_p_part(stage_one);
  const Character& psi = cleared.character;
  tally.expect(is_reduced(psi), "cleared character is not reduced");
  tally.expect(psi.coeff(11) == 2 && chi.coeff(11) == 0, "psi(E_11) = " +
                                                             std::to_string(psi.coeff(11)));
  tally.expect(psi != chi, "psi == chi");
  const NottinghamElt w = nott_compose(cleared.witness.u, *u0);
  const WitnessCheck check = check_witness(chi, psi, w);
  tally.expect(check == WitnessCheck::ok, "composite witness: " + to_string(check));
  r.passed = tally.ok();
  r.detail = tally.summary("checks") + "; e = " + std::to_string(*chosen) + ", psi = " +
             psi.literal() + ", w = " + format_product(w);
  return r;
}

CriterionResult pair_count(const AcceptanceOptions& options) {
  CriterionResult r{"4c", "oracle class count for p=2 <5,15> is below B = 4", false, "", 0};
  const auto start = Clock::now();
  const ClassReport report = partition_reduced_forms(kTwo, 5, 15, search_options(options));
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = report.class_count < report.bound && report.bound == 4 && seconds < 300.0;
  r.detail = "classes " + std::to_string(report.class_count) + ", B " +
             std::to_string(report.bound) + ", " + std::to_string(report.searches) + " searches";
  return r;
}

CriterionResult power_conjugacy(const AcceptanceOptions& options) {
  CriterionResult r{"5", "power-conjugacy oracle agrees with the predicate", false, "", 0};
  Rng rng(options.seed);
  Tally tally;
  std::size_t types = 0;
  std::size_t conjugate = 0;
  bool saw_exceptional = false;
  for (int p : {2, 3}) {
    const Prime prime(p);
    int max_m = 0;
    while (search_space_size(prime, max_m + 1) <= options.budget) ++max_m;
    for (const TypeLM& type : valid_types(prime, max_m, max_m)) {
      ++types;
      if (p == 2 && type.l == 3 && type.m == 6) saw_exceptional = true;
      for (const Character& chi : sample_characters(prime, type, 50, rng)) {
        for (int n = 2; n < prime.square(); ++n) {
          if (prime.divides(n) || scalar_mul(n, chi) == chi) continue;
          const bool predicted = power_conjugacy_predicate(prime, type.l, type.m, n);
          const bool found = power_conjugacy_oracle(chi, n, search_options(options)).conjugate;
          conjugate += found ? 1 : 0;
          tally.expect(predicted == found, chi.text() + " n=" + std::to_string(n) +
                                               ": predicate " + std::to_string(predicted) +
                                               ", oracle " + std::to_string(found));
        }
      }
    }
  }
  r.passed = tally.ok() && saw_exceptional;
  r.detail = tally.summary("pairs") + " over " + std::to_string(types) + " types, " +
             std::to_string(conjugate) + " conjugate";
  return r;
}

// Property trials over p in {2, 3, 5} and m <= 15.
struct Trial {
  Prime prime;
  int m;
};

Trial random_trial(Rng& rng, int min_m = 1) {
  static const int primes[] = {2, 3, 5};
  const Prime prime(primes[std::uniform_int_distribution<int>(0, 2)(rng)]);
  const int m = std::uniform_int_distribution<int>(std::max(min_m, 1), 15)(rng);
  return {prime, m};
}

struct TypedTrial {
  Character chi;
  TypeLM type;
  NottinghamElt u;
};

TypedTrial random_typed_trial(Rng& rng) {
  static const int primes[] = {2, 3, 5};
  const Prime prime(primes[std::uniform_int_distribution<int>(0, 2)(rng)]);
  const TypeLM type = random_type(prime, 15, rng);
  Character chi = random_character(prime, type, rng);
  return {std::move(chi), type, random_element(prime, type.m, rng)};
}

CriterionResult properties(const AcceptanceOptions& options) {
  CriterionResult r{"6", "property suites", false, "", 0};
  const auto start = Clock::now();
  constexpr int kCases = 1000;
  Rng rng(options.seed + 6);
  std::vector<std::pair<std::string, Tally>> suites;
  auto suite = [&](const std::string& name, const std::function<void(Tally&)>& body) {
    Tally tally;
    for (int i = 0; i < kCases; ++i) {
      try {
        body(tally);
      } catch (const std::exception& e) {
        tally.expect(false, std::string("exception: ") + e.what());
      }
    }
    suites.emplace_back(name, std::move(tally));
  };

  suite("round-trip", [&](Tally& t) {
    const Trial tr = random_trial(rng);
    const int extra = std::uniform_int_distribution<int>(0, 3)(rng);
    const UnitSeries f = random_unit(tr.prime, tr.m + extra, rng);
    const ExponentVector e = unit_decompose(f, tr.m);
    const UnitSeries g = unit_recompose(e, tr.m);
    bool ok = unit_decompose(g, tr.m) == e;
    if (tr.m < tr.prime.square()) ok = ok && g == f.truncated(tr.m);
    t.expect(ok, format_unit(f));
  });
  suite("frobenius", [&](Tally& t) {
    const Trial tr = random_trial(rng, 5);
    const int p = tr.prime.value();
    const int j = std::uniform_int_distribution<int>(1, tr.m / p)(rng);
    t.expect(unit_pow(UnitSeries::basis(tr.prime, j, tr.m), p) ==
                 UnitSeries::basis(tr.prime, p * j, tr.m),
             "E_" + std::to_string(j) + "^p");
  });
  suite("group axioms", [&](Tally& t) {
    const Trial tr = random_trial(rng);
    const NottinghamElt u = random_element(tr.prime, tr.m, rng);
    const NottinghamElt v = random_element(tr.prime, tr.m, rng);
    const NottinghamElt w = random_element(tr.prime, tr.m, rng);
    const NottinghamElt id = NottinghamElt::identity(tr.prime, tr.m);
    const NottinghamElt inv = nott_inverse(u);
    t.expect(nott_compose(nott_compose(u, v), w) == nott_compose(u, nott_compose(v, w)) &&
                 nott_compose(u, id) == u && nott_compose(id, u) == u &&
                 nott_compose(u, inv).is_identity() && nott_compose(inv, u).is_identity(),
             format_product(u));
  });
  suite("contravariance", [&](Tally& t) {
    const TypedTrial tr = random_typed_trial(rng);
    const NottinghamElt v = random_element(tr.chi.prime(), tr.type.m, rng);
    t.expect(char_act(v, char_act(tr.u, tr.chi)) == char_act(nott_compose(v, tr.u), tr.chi),
             tr.chi.text());
  });
  suite("type invariance", [&](Tally& t) {
    const TypedTrial tr = random_typed_trial(rng);
    t.expect(break_sequence(char_act(tr.u, tr.chi)) == tr.type, tr.chi.text());
  });
  suite("unit digit at l and value at m", [&](Tally& t) {
    const TypedTrial tr = random_typed_trial(rng);
    const Prime& prime = tr.chi.prime();
    const Character acted = char_act(tr.u, tr.chi);
    bool ok = prime.reduce(acted.coeff(tr.type.l)) == prime.reduce(tr.chi.coeff(tr.type.l));
    if (!prime.divides(tr.type.m)) ok = ok && acted.coeff(tr.type.m) == tr.chi.coeff(tr.type.m);
    t.expect(ok, tr.chi.text());
  });
  suite("reduce soundness", [&](Tally& t) {
    const TypedTrial tr = random_typed_trial(rng);
    const Reduction red = reduce(tr.chi);
    const Character psi = red.form.to_character();
    t.expect(is_reduced(psi) && red.form.type == tr.type && verify_witness(tr.chi, psi, red.witness.u),
             tr.chi.text());
  });
  suite("reduce idempotence", [&](Tally& t) {
    const TypedTrial tr = random_typed_trial(rng);
    const Reduction once = reduce(tr.chi);
    const Reduction twice = reduce(once.form.to_character());
    t.expect(twice.form == once.form && twice.witness.u.is_identity(), tr.chi.text());
  });

  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  bool ok = seconds < 30.0;
  std::ostringstream os;
  for (const auto& [name, tally] : suites) {
    ok = ok && tally.ok();
    if (!tally.ok()) os << name << ": " << tally.summary("cases") << "; ";
  }
  os << suites.size() << " suites x " << kCases << " cases";
  r.passed = ok;
  r.detail = os.str();
  return r;
}

using Runner = CriterionResult (*)(const AcceptanceOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"1", reduced_form_count},   {"2", canonical_equals_oracle}, {"3a", legacy_d1m},
      {"3b", legacy_weak},         {"3c", strict_is_p_times_weak}, {"4a", pair_search},
      {"4b", pair_replay},       {"4c", pair_count},           {"5", power_conjugacy},
      {"6", properties},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& acceptance_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, run] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

CriterionResult run_criterion(const std::string& id, const AcceptanceOptions& options) {
  for (const auto& [key, run] : registry()) {
    if (key != id) continue;
    const auto start = Clock::now();
    CriterionResult result;
    try {
      result = run(options);
    } catch (const std::exception& e) {
      result.id = id;
      result.title = "criterion " + id;
      result.passed = false;
      result.detail = std::string("error: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  }
  throw UsageError("unknown acceptance criterion '" + id + "'");
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (const std::string& id : acceptance_ids()) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_result(const CriterionResult& result) {
  std::ostringstream os;
  os << (result.passed ? "PASS " : "FAIL ") << result.id << "  " << result.title << "  ("
     << result.detail << ") [" << std::fixed;
  os.precision(2);
  os << result.seconds << " s]";
  return os.str();
}

}  // namespace nott
