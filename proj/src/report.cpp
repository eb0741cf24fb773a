#include "coinmard/report.hpp"

#include <json.hpp>
#include <ostream>
#include <sstream>

namespace coinmard {

void write_csv_header(std::ostream& out) {
  for (std::size_t i = 0; i < kAuditColumns.size(); ++i) out << (i ? "," : "") << kAuditColumns[i];
  out << '\n';
}

void write_csv_row(std::ostream& out, const AuditRow& r) {
  out << r.v << ',' << r.residue << ',' << r.g << ',' << r.d << ',' << r.threshold << ',' << r.k
      << ',' << r.t << ',' << r.order_exponent << ',' << r.t_min << ',' << r.bound_claimed << ','
      << r.bound_corrected << ',' << r.k_estimate << ',' << r.t_estimate << ','
      << (r.violates_claimed ? "true" : "false") << '\n';
}

std::string summary_line(const AuditSummary& summary) {
  return "violations=" + std::to_string(summary.violations) +
         " max_gap=" + std::to_string(summary.max_gap);
}

std::string identity_string(const ExponentCertificate& cert) {
  std::ostringstream s;
  s << cert.a << '*' << cert.larger_coin() << " + " << cert.b << '*' << cert.smaller_coin()
    << " = " << pow2(cert.t) << " = 2^" << cert.t;
  return s.str();
}

std::string certificate_text(const ExponentCertificate& cert) {
  std::ostringstream s;
  s << "v=" << cert.v << " g=" << cert.g << " d=" << cert.d << " N=" << cert.threshold
    << " k=" << cert.k << " t=" << cert.t << " a=" << cert.a << " b=" << cert.b << '\n'
    << identity_string(cert) << '\n';
  return s.str();
}

std::string certificate_json(const ExponentCertificate& cert) {
  nlohmann::ordered_json j;
  j["v"] = cert.v;
  j["g"] = cert.g;
  j["d"] = cert.d;
  j["N"] = cert.threshold;
  j["k"] = cert.k;
  j["t"] = cert.t;
  j["a"] = cert.a;
  j["b"] = cert.b;
  j["identity"] = identity_string(cert);
  return j.dump();
}

}  // namespace coinmard
