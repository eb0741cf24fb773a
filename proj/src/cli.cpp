#include "coinmard/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include "coinmard/exponent_audit.hpp"
#include "coinmard/hadamard.hpp"
#include "coinmard/matrix_io.hpp"
#include "coinmard/report.hpp"

namespace coinmard::cli {
namespace {

MatrixFormat format_for(const std::filesystem::path& path) {
  return path.extension() == ".bin" ? MatrixFormat::binary : MatrixFormat::text;
}

int cmd_cert(u64 v, bool json, std::ostream& out) {
  const ExponentCertificate cert = exponent_certificate(v);
  if (json)
    out << certificate_json(cert) << '\n';
  else
    out << certificate_text(cert);
  return kSuccess;
}

int cmd_audit(const AuditRange& range, const std::string& path, unsigned workers, std::ostream& out) {
  // Validate before touching the output file.
  audit_candidates(range);
  std::ofstream csv(path, std::ios::binary);
  if (!csv) throw DomainError("cannot open " + path + " for writing");
  write_csv_header(csv);
  const AuditSummary summary =
      audit_range(range, [&](const AuditRow& row) { write_csv_row(csv, row); }, workers);
  csv.close();
  if (!csv) throw DomainError("write failed: " + path);
  out << summary_line(summary) << '\n';
  return kSuccess;
}

int cmd_construct(const HadamardMatrix& h, const std::filesystem::path& path, std::ostream& out,
                  std::ostream& err) {
  const MatrixFormat format = format_for(path);
  save_matrix(path, h.signs(), format);

  // Re-read and re-verify what actually landed on disk.
  const auto start = std::chrono::steady_clock::now();
  const SignMatrix written = load_matrix(path, format);
  const VerifyResult result = is_hadamard(written);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!result || written != h.signs()) {
    err << "verification failed for " << path.string() << '\n';
    return kVerificationFailure;
  }
  out << "order=" << h.order() << " verify_ms=" << std::fixed << std::setprecision(3) << ms << '\n';
  return kSuccess;
}

int cmd_verify(const std::filesystem::path& path, std::ostream& out) {
  const SignMatrix m = load_matrix(path, format_for(path));
  const VerifyResult result = is_hadamard(m);
  if (result) {
    out << "HADAMARD order=" << m.order() << '\n';
    return kSuccess;
  }
  out << "NOT HADAMARD violated at rows (" << result.violation->i << ',' << result.violation->j
      << ")\n";
  return kVerificationFailure;
}

int cmd_mult_check(BoundModel model, u64 max_q, std::ostream& out) {
  const auto failures = scan_multiplicativity(model, max_q);
  for (const auto& f : failures) {
    out << "p=" << f.p << " q=" << f.q << " bound_p=" << f.bound_p << " bound_q=" << f.bound_q
        << " sum=" << f.bound_p + f.bound_q << " bound_pq=" << f.bound_pq << '\n';
  }
  out << "model=" << to_string(model) << " max=" << max_q << " count=" << failures.size() << '\n';
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius exponent certificates, bound audits and Hadamard matrices"};
  app.require_subcommand(1);

  u64 cert_v = 0;
  bool cert_json = false;
  auto* cert = app.add_subcommand("cert", "Print the power-of-two certificate for odd v >= 9");
  cert->add_option("v", cert_v, "odd integer >= 9")->required();
  cert->add_flag("--json", cert_json, "emit one JSON object");

  AuditRange range;
  std::string audit_out;
  unsigned workers = 0;
  auto* audit_cmd = app.add_subcommand("audit", "Audit a range of v and write a CSV report");
  audit_cmd->add_option("--from", range.from, "first v")->required();
  audit_cmd->add_option("--to", range.to, "last v")->required();
  audit_cmd->add_flag("--primes", range.primes_only, "only primes (residue 1 unless --residue)");
  audit_cmd->add_option("--residue", range.residue, "keep v with v mod 4 equal to 1 or 3");
  audit_cmd->add_option("--out", audit_out, "CSV output path")->required();
  audit_cmd->add_option("--workers", workers, "worker threads (0 = all cores)");

  auto* construct = app.add_subcommand("construct", "Construct, verify and write a matrix");
  construct->require_subcommand(1);
  std::filesystem::path construct_out;
  unsigned sylvester_k = 0;
  auto* syl = construct->add_subcommand("sylvester", "order 2^k");
  syl->add_option("k", sylvester_k)->required();
  syl->add_option("--out", construct_out, "output .had (or .bin) path")->required();
  u64 paley_q = 0;
  auto* pal = construct->add_subcommand("paley", "Paley I, order q+1");
  pal->add_option("q", paley_q, "prime = 3 (mod 4)")->required();
  pal->add_option("--out", construct_out, "output .had (or .bin) path")->required();
  std::filesystem::path kron_a;
  std::filesystem::path kron_b;
  auto* kron = construct->add_subcommand("kronecker", "Kronecker product of two matrix files");
  kron->add_option("a", kron_a)->required();
  kron->add_option("b", kron_b)->required();
  kron->add_option("--out", construct_out, "output .had (or .bin) path")->required();

  std::filesystem::path verify_path;
  auto* verify = app.add_subcommand("verify", "Check H H^T = nI for a matrix file");
  verify->add_option("file", verify_path)->required();

  std::string model_name;
  u64 mult_max = 0;
  auto* mult = app.add_subcommand("mult-check", "Scan bound(p) + bound(q) < bound(pq)");
  mult->add_option("--model", model_name, "claimed or corrected")
      ->required()
      ->check(CLI::IsMember({"claimed", "corrected"}));
  mult->add_option("--max", mult_max, "largest q (>= 5)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*cert) return cmd_cert(cert_v, cert_json, out);
    if (*audit_cmd) return cmd_audit(range, audit_out, workers, out);
    if (*construct) {
      const MatrixLimits limits = MatrixLimits::from_env();
      if (*syl) return cmd_construct(sylvester(sylvester_k, limits), construct_out, out, err);
      if (*pal) return cmd_construct(paley_i(paley_q, limits), construct_out, out, err);
      const auto a = HadamardMatrix::verify(load_matrix(kron_a, format_for(kron_a)));
      const auto b = HadamardMatrix::verify(load_matrix(kron_b, format_for(kron_b)));
      return cmd_construct(kronecker(a, b, limits), construct_out, out, err);
    }
    if (*verify) return cmd_verify(verify_path, out);
    if (*mult) return cmd_mult_check(*parse_bound_model(model_name), mult_max, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  }
  return kInputError;
}

}  // namespace coinmard::cli
