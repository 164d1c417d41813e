#include "inoue/ot_bridge.hpp"

#include <algorithm>

namespace inoue {

const char* unit_poly_rejection_name(UnitPolyRejection r) {
  switch (r) {
  case UnitPolyRejection::not_monic: return "not-monic";
  case UnitPolyRejection::degree_not_odd_or_too_small: return "degree-not-odd-or-too-small";
  case UnitPolyRejection::constant_term_not_minus_one: return "constant-term-not-minus-one";
  case UnitPolyRejection::reducible: return "reducible";
  case UnitPolyRejection::real_root_count_not_one: return "real-root-count-not-one";
  }
  return "unknown";
}

std::variant<UnitPolyCertificate, UnitPolyRejection> validate_unit_poly(const IntPoly& p) {
  if (!p.is_monic()) return UnitPolyRejection::not_monic;
  int d = p.degree();
  if (d < 3 || d % 2 == 0) return UnitPolyRejection::degree_not_odd_or_too_small;
  if (p.coeff(0) != -1) return UnitPolyRejection::constant_term_not_minus_one;
  if (!is_irreducible(p)) return UnitPolyRejection::reducible;
  std::vector<RealIsolatingInterval> reals = isolate_real_roots(p);
  if (reals.size() != 1) return UnitPolyRejection::real_root_count_not_one;

  UnitPolyCertificate cert;
  cert.P = p;
  cert.degree = d;
  cert.n = (d - 1) / 2;
  cert.irreducible_record =
      "irreducible over Q (modular degree patterns / Hensel recombination); irrationality of the "
      "real root follows at degree >= 2";
  cert.unit_constant_record =
      "P(0) = -1, so det C_P = (-1)^deg * P(0) = 1 in odd degree";
  cert.one_real_root = reals.front();
  cert.alpha_positive_record =
      "P(0) = -1 < 0 with positive leading coefficient forces a root in (0, inf); the single "
      "real root is therefore positive";
  return cert;
}

IntMatrix companion_transpose(const IntPoly& p) {
  return IntMatrix::companion(p).transpose();
}

OTFieldData ot_data(const IntPoly& p, long bits) {
  auto validated = validate_unit_poly(p);
  if (std::holds_alternative<UnitPolyRejection>(validated))
    fail(errc::invalid_input, std::string("ot_data requires a valid unit polynomial: ") +
                                  unit_poly_rejection_name(std::get<UnitPolyRejection>(validated)));
  const auto& cert = std::get<UnitPolyCertificate>(validated);
  long prec = bits + 64;

  OTFieldData data;
  data.t = cert.n;
  data.bits = bits;
  data.alpha = refine_real(p, cert.one_real_root, prec);

  std::vector<ComplexBox> boxes = enclose_complex_roots(p, bits + 2);
  std::vector<ComplexBox> upper;
  for (const auto& b : boxes)
    if (b.im_lo > 0) upper.push_back(b);
  std::sort(upper.begin(), upper.end(), [](const ComplexBox& x, const ComplexBox& y) {
    if (x.re_lo != y.re_lo) return x.re_lo < y.re_lo;
    return x.im_lo < y.im_lo;
  });
  for (const auto& b : upper) data.betas.push_back(b.to_ball(prec));
  if (static_cast<int>(data.betas.size()) != cert.n)
    fail(errc::internal_inconsistency, "embedding count mismatch");

  // Lattice rows sigma(xi^k) for k = 0..2n, by repeated ball products.
  int rows = cert.degree;
  data.lattice_rows.assign(static_cast<std::size_t>(rows), {});
  DyadicInterval apow = DyadicInterval::from_int(Int(1));
  std::vector<DyadicComplexInterval> bpow(data.betas.size(),
                                          DyadicComplexInterval::exact_point(Dyadic::from_int(1), Dyadic()));
  for (int k = 0; k < rows; ++k) {
    auto& row = data.lattice_rows[static_cast<std::size_t>(k)];
    row.push_back(DyadicComplexInterval::from_real(apow));
    for (std::size_t j = 0; j < bpow.size(); ++j) row.push_back(bpow[j]);
    if (k + 1 < rows) {
      apow = mul(apow, data.alpha, prec);
      for (std::size_t j = 0; j < bpow.size(); ++j) bpow[j] = mul(bpow[j], data.betas[j], prec);
    }
  }
  return data;
}

std::variant<CorrespondenceReport, UnitPolyRejection> correspondence_report(const IntPoly& p,
                                                                            long bits) {
  auto validated = validate_unit_poly(p);
  if (std::holds_alternative<UnitPolyRejection>(validated))
    return std::get<UnitPolyRejection>(validated);

  CorrespondenceReport report;
  report.unit = std::get<UnitPolyCertificate>(std::move(validated));
  report.D = companion_transpose(p);

  CheckResult check = check_type_I(report.D);
  if (std::holds_alternative<Rejection>(check))
    fail(errc::internal_inconsistency,
         "companion transpose of a valid unit polynomial failed the type-I check");
  report.type_I = std::get<TypeICertificate>(std::move(check));

  DiagonalizabilityCertificate diag = is_diagonalizable(report.D);
  if (!diag.diagonalizable)
    fail(errc::internal_inconsistency, "irreducible characteristic polynomial but not diagonalizable");
  report.diagonalizable = true;

  report.eigen = eigen_data(report.D, report.type_I, bits);
  report.ot = ot_data(p, bits);
  long prec = bits + 32;

  // R must be literally diagonal (irreducible chi means 1x1 blocks) with
  // the beta enclosures on the diagonal.
  int n = report.eigen.n;
  report.r_diagonal_matches = true;
  for (int i = 0; i < n && report.r_diagonal_matches; ++i)
    for (int j = 0; j < n && report.r_diagonal_matches; ++j) {
      const auto& entry = report.eigen.R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == j) {
        if (!entry.intersects(report.ot.betas[static_cast<std::size_t>(i)]))
          report.r_diagonal_matches = false;
      } else if (!(entry.contains_zero() && entry.width_max().is_zero())) {
        report.r_diagonal_matches = false;
      }
    }
  if (!report.r_diagonal_matches)
    fail(errc::internal_inconsistency, "R is not the expected diagonal action");

  // u_i rows of the eigen data against the lattice rows sigma(xi^{i-1}).
  report.lattice_matches_u_rows = true;
  for (int i = 0; i < report.type_I.dim && report.lattice_matches_u_rows; ++i) {
    auto u = report.eigen.u_column(i);
    const auto& row = report.ot.lattice_rows[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < u.size(); ++j)
      if (!u[j].intersects(row[j])) {
        report.lattice_matches_u_rows = false;
        break;
      }
  }
  if (!report.lattice_matches_u_rows)
    fail(errc::internal_inconsistency, "u rows do not match the lattice rows");
  (void)prec;
  return report;
}

} // namespace inoue
