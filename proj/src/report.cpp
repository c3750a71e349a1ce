#include "nott/report.hpp"

#include <iomanip>
#include <sstream>

#include "nott/errors.hpp"
#include "nott/literal.hpp"

namespace nott {

nlohmann::json character_to_json(const Character& chi) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [j, c] : chi.entries()) coeffs[std::to_string(j)] = c;
  return {{"p", chi.prime().value()}, {"coeffs", coeffs}};
}

Character character_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("p") || !doc.at("p").is_number_integer()) {
    throw ParseError("character JSON needs an integer \"p\"", 0);
  }
  const auto p = doc.at("p").get<long>();
  if (p > Prime::kMax || !is_prime(p)) throw ParseError("\"p\" must be a prime <= 31", 0);
  const Prime prime(static_cast<int>(p));
  std::vector<std::pair<int, int>> entries;
  if (doc.contains("coeffs")) {
    const auto& coeffs = doc.at("coeffs");
    if (!coeffs.is_object()) throw ParseError("\"coeffs\" must be an object", 0);
    for (const auto& [key, value] : coeffs.items()) {
      int j = 0;
      try {
        std::size_t used = 0;
        j = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("coefficient key \"" + key + "\" is not an index", 0);
      }
      if (!value.is_number_integer()) throw ParseError("coefficient values must be integers", 0);
      const auto c = value.get<long>();
      if (j < 1 || prime.divides(j)) throw ParseError("index " + key + " is not p-coprime", 0);
      if (c < 0 || c >= prime.square()) throw ParseError("value at " + key + " out of range", 0);
      entries.emplace_back(j, static_cast<int>(c));
    }
  }
  return Character(prime, entries);
}

nlohmann::json report_to_json(const ClassReport& report) {
  nlohmann::json classes = nlohmann::json::array();
  for (const ClassEntry& cls : report.classes) {
    nlohmann::json members = nlohmann::json::array();
    for (const ClassMember& member : cls.members) {
      members.push_back({{"character", member.form.to_character().text()},
                         {"witness", format_product(member.witness)}});
    }
    classes.push_back({{"representative", cls.representative.text()}, {"members", members}});
  }
  return {
      {"p", report.p},
      {"l", report.l},
      {"m", report.m},
      {"bound", report.bound},
      {"class_count", report.class_count},
      {"method", to_string(report.method)},
      {"equivalence", to_string(report.kind)},
      {"search_space_size", report.search_space_size},
      {"exhaustive", true},
      {"searches", report.searches},
      {"runtime_ms", report.runtime_ms},
      {"classes", classes},
  };
}

std::string report_to_text(const ClassReport& report) {
  std::ostringstream os;
  os << "type <" << report.l << "," << report.m << "> over F_" << report.p << '\n'
     << "  method            " << to_string(report.method) << " (" << to_string(report.kind)
     << ")\n"
     << "  B(p,l,m)          " << report.bound << '\n'
     << "  classes           " << report.class_count << '\n'
     << "  search space      " << report.search_space_size << " (complete scan)\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const ClassEntry& cls = report.classes[i];
    os << "  class " << i + 1 << ": " << cls.representative.literal() << '\n';
    for (std::size_t k = 1; k < cls.members.size(); ++k) {
      os << "    ~ " << cls.members[k].form.to_character().literal() << "  via "
         << format_product(cls.members[k].witness) << '\n';
    }
  }
  return os.str();
}

std::string report_csv_header() { return "p,l,m,B,d,method,runtime_ms"; }

std::string report_csv_row(const ClassReport& report) {
  std::ostringstream os;
  os << report.p << ',' << report.l << ',' << report.m << ',' << report.bound << ','
     << report.class_count << ',' << to_string(report.method) << ',' << std::fixed
     << std::setprecision(3) << report.runtime_ms;
  return os.str();
}

}  // namespace nott
