// nott: reduce, classify and count order-p^2 torsion characters.

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nott/acceptance.hpp"
#include "nott/character.hpp"
#include "nott/equivalence.hpp"
#include "nott/errors.hpp"
#include "nott/literal.hpp"
#include "nott/reduction.hpp"
#include "nott/report.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct Args {
  int p = 0;
  int l = 0;
  int m = 0;
  long n = 0;
  std::string chr;
  std::uint64_t budget = std::uint64_t{1} << 26;
  std::string format = "text";
  std::uint64_t seed = nott::AcceptanceOptions{}.seed;
  int jobs = 1;
  std::vector<std::string> only;
};

nott::SearchOptions search_options(const Args& a) { return {a.budget, a.jobs}; }

// "5:1,15:2" needs --p; "p=2; 5:1,15:2" carries its own prime.
nott::Character read_character(const Args& a) {
  if (a.chr.find('=') != std::string::npos) {
    nott::Character chi = nott::parse_character_text(a.chr);
    if (a.p != 0 && chi.prime().value() != a.p) {
      throw nott::UsageError("--p disagrees with the prime in --char");
    }
    return chi;
  }
  if (a.p == 0) throw nott::UsageError("--char without a p= header needs --p");
  return nott::parse_character_literal(a.chr, nott::Prime(a.p));
}

nlohmann::json witness_json(const nott::Witness& w) {
  return {{"u", nott::format_product(w.u)},
          {"series", "t*(" + nott::format_unit(w.u.unit()) + ")"},
          {"precision", w.u.precision()},
          {"kernel_value", w.kernel_value}};
}

int cmd_reduce(const Args& a) {
  const nott::Character chi = read_character(a);
  const nott::Reduction red = nott::reduce(chi);
  const nott::Character psi = red.form.to_character();
  const nott::WitnessCheck check = nott::check_witness(chi, psi, red.witness.u);
  if (a.format == "json") {
    std::cout << nlohmann::json{{"input", nott::character_to_json(chi)},
                                {"type", {red.form.type.l, red.form.type.m}},
                                {"reduced", nott::character_to_json(psi)},
                                {"witness", witness_json(red.witness)},
                                {"verified", check == nott::WitnessCheck::ok}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "input    " << chi.text() << '\n'
              << "type     <" << red.form.type.l << "," << red.form.type.m << ">\n"
              << "reduced  " << psi.literal() << '\n'
              << "witness  " << nott::format_product(red.witness.u) << '\n'
              << "verify   " << nott::to_string(check) << '\n';
  }
  return check == nott::WitnessCheck::ok ? kOk : kVerifyFailed;
}

int cmd_classify(const Args& a, const std::string& method_name, bool weak) {
  const nott::Prime prime(a.p);
  nott::ClassReport report;
  if (weak) {
    report = nott::partition_reduced_forms(prime, a.l, a.m, search_options(a), nott::Equivalence::weak);
  } else {
    const auto method = method_name == "canonical" ? nott::CountMethod::canonical_reduce
                                                   : nott::CountMethod::oracle_partition;
    report = nott::classify(prime, a.l, a.m, method, search_options(a));
  }
  if (a.format == "json") {
    std::cout << nott::report_to_json(report).dump(2) << '\n';
  } else if (a.format == "csv") {
    std::cout << nott::report_csv_header() << '\n' << nott::report_csv_row(report) << '\n';
  } else {
    std::cout << nott::report_to_text(report);
  }
  return kOk;
}

int cmd_bound(const Args& a) {
  const nott::BoundB b = nott::bound_B(nott::Prime(a.p), a.l, a.m);
  if (a.format == "json") {
    std::cout << nlohmann::json{{"p", a.p}, {"l", a.l}, {"m", a.m}, {"B", b.value}, {"k", b.k},
                                {"epsilon", b.epsilon}}
                     .dump()
              << '\n';
  } else if (a.format == "csv") {
    std::cout << "p,l,m,B,k,epsilon\n"
              << a.p << ',' << a.l << ',' << a.m << ',' << b.value << ',' << b.k << ','
              << b.epsilon << '\n';
  } else {
    std::cout << "B=" << b.value << " k=" << b.k << " epsilon=" << b.epsilon << '\n';
  }
  return kOk;
}

// Rows for every (l, m) with l <= --l and m <= --m. d is left empty when the
// type is invalid or the count would exceed the budget.
int cmd_tables(const Args& a) {
  const nott::Prime prime(a.p);
  std::cout << "p,l,m,valid,B,d,method,runtime_ms\n";
  for (int l = 1; l <= a.l; ++l) {
    for (int m = 1; m <= a.m; ++m) {
      const bool valid = nott::validate_type(prime, l, m);
      std::cout << a.p << ',' << l << ',' << m << ',' << (valid ? 1 : 0) << ',';
      if (!valid) {
        std::cout << ",,,\n";
        continue;
      }
      std::cout << nott::bound_B(prime, l, m).value << ',';
      const auto method = l < a.p ? nott::CountMethod::canonical_reduce
                                  : nott::CountMethod::oracle_partition;
      try {
        const nott::ClassReport r = nott::classify(prime, l, m, method, search_options(a));
        std::cout << r.class_count << ',' << nott::to_string(method) << ',' << std::fixed
                  << std::setprecision(3) << r.runtime_ms << '\n' << std::defaultfloat;
      } catch (const nott::BudgetExceeded&) {
        std::cout << ",over-budget,\n";
      }
    }
  }
  return kOk;
}

int cmd_power_conj(const Args& a) {
  std::optional<nott::Character> chi;
  nott::TypeLM type{a.l, a.m};
  if (!a.chr.empty()) {
    chi = read_character(a);
    type = nott::break_sequence(*chi);
  }
  const nott::Prime prime = chi ? chi->prime() : nott::Prime(a.p);
  if (a.n == 0) throw nott::UsageError("power-conj needs --n");
  const bool predicate = nott::power_conjugacy_predicate(prime, type.l, type.m, a.n);
  if (!chi) chi = nott::enumerate_reduced_forms(prime, type.l, type.m).front().to_character();

  std::optional<nott::PowerConjugacy> oracle;
  std::string skipped;
  if (prime.divides(a.n)) {
    skipped = "p divides n";
  } else if (nott::scalar_mul(a.n, *chi) == *chi) {
    skipped = "n chi == chi";
  } else if (nott::search_space_size(prime, type.m) > a.budget) {
    skipped = "over budget";
  } else {
    oracle = nott::power_conjugacy_oracle(*chi, a.n, search_options(a));
  }
  const bool agree = !oracle || oracle->conjugate == predicate;
  if (a.format == "json") {
    nlohmann::json out{{"p", prime.value()},      {"l", type.l},
                       {"m", type.m},             {"n", a.n},
                       {"character", nott::character_to_json(*chi)},
                       {"predicate", predicate}};
    if (oracle) {
      out["oracle"] = oracle->conjugate;
      if (oracle->witness) out["witness"] = witness_json(*oracle->witness);
    } else {
      out["oracle"] = nullptr;
      out["oracle_skipped"] = skipped;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "type      <" << type.l << "," << type.m << "> over F_" << prime.value() << '\n'
              << "character " << chi->literal() << '\n'
              << "predicate " << (predicate ? "true" : "false") << '\n';
    if (oracle) {
      std::cout << "oracle    " << (oracle->conjugate ? "true" : "false") << '\n';
      if (oracle->witness) std::cout << "witness   " << nott::format_product(oracle->witness->u) << '\n';
    } else {
      std::cout << "oracle    skipped (" << skipped << ")\n";
    }
  }
  return agree ? kOk : kVerifyFailed;
}

int cmd_verify(const Args& a) {
  nott::AcceptanceOptions opts;
  opts.seed = a.seed;
  opts.jobs = a.jobs;
  opts.budget = a.budget;
  const std::vector<std::string> ids = a.only.empty() ? nott::acceptance_ids() : a.only;
  bool all = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const std::string& id : ids) {
    const nott::CriterionResult r = nott::run_criterion(id, opts);
    all = all && r.passed;
    if (a.format == "json") {
      rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                      {"detail", r.detail}, {"seconds", r.seconds}});
    } else {
      std::cout << nott::format_result(r) << std::endl;
    }
  }
  if (a.format == "json") std::cout << rows.dump(2) << '\n';
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-p^2 torsion characters of the Nottingham group over F_p"};
  app.require_subcommand(1);
  Args a;
  std::string method = "oracle";
  bool weak = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--budget", a.budget, "largest search space p^m")->capture_default_str();
    sub->add_option("--format", a.format)->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
    sub->add_option("--jobs", a.jobs)->check(CLI::Range(1, 256))->capture_default_str();
  };
  auto lm = [&](CLI::App* sub, bool required) {
    sub->add_option("--l", a.l)->required(required)->check(CLI::PositiveNumber);
    sub->add_option("--m", a.m)->required(required)->check(CLI::PositiveNumber);
  };

  auto* reduce = app.add_subcommand("reduce", "reduce a character and print the witness");
  reduce->add_option("--p", a.p);
  reduce->add_option("--char", a.chr)->required();
  common(reduce);

  auto* classify = app.add_subcommand("classify", "classes of a type");
  classify->add_option("--p", a.p)->required();
  lm(classify, true);
  classify->add_option("--method", method)->check(CLI::IsMember({"oracle", "canonical"}))->capture_default_str();
  classify->add_flag("--weak", weak, "weak instead of strict equivalence (oracle only)");
  common(classify);

  auto* bound = app.add_subcommand("bound", "B(p,l,m) with k and epsilon");
  bound->add_option("--p", a.p)->required();
  lm(bound, true);
  common(bound);

  auto* tables = app.add_subcommand("tables", "CSV of B and d over l <= --l, m <= --m");
  tables->add_option("--p", a.p)->required();
  lm(tables, true);
  common(tables);

  auto* power = app.add_subcommand("power-conj", "whether u and u^n are conjugate");
  power->add_option("--p", a.p);
  lm(power, false);
  power->add_option("--n", a.n)->required();
  power->add_option("--char", a.chr);
  common(power);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--seed", a.seed)->capture_default_str();
  verify->add_option("--only", a.only, "criterion ids");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*reduce) return cmd_reduce(a);
    if (*classify) {
      if (weak && method == "canonical") throw nott::UsageError("--weak needs --method oracle");
      return cmd_classify(a, method, weak);
    }
    if (*bound) return cmd_bound(a);
    if (*tables) return cmd_tables(a);
    if (*power) {
      if (a.chr.empty() && (a.p == 0 || a.l == 0 || a.m == 0)) {
        throw nott::UsageError("power-conj needs --char or --p, --l and --m");
      }
      return cmd_power_conj(a);
    }
    if (*verify) return cmd_verify(a);
  } catch (const nott::BudgetExceeded& e) {
    std::cerr << "nott: refused: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {  // UsageError, ParseError
    std::cerr << "nott: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "nott: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
