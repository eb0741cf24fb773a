#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "coinmard/exponent_audit.hpp"

namespace coinmard {

// Column order of the audit CSV. Changing it is a format break.
inline constexpr std::array<std::string_view, 14> kAuditColumns = {
    "v",     "residue",       "g",             "d",           "N",       "k",       "t",
    "order_exponent", "t_min", "bound_claimed", "bound_corrected", "k_paper", "t_paper",
    "violates_claimed"};

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const AuditRow& row);

std::string summary_line(const AuditSummary& summary);

// "4*18 + 4*14 = 128 = 2^7"
std::string identity_string(const ExponentCertificate& cert);
std::string certificate_text(const ExponentCertificate& cert);
// One JSON object, no trailing newline.
std::string certificate_json(const ExponentCertificate& cert);

}  // namespace coinmard
