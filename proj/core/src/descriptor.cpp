#include "inoue/descriptor.hpp"

#include <limits>

namespace inoue {

const char* lck_flag_name(LckFlag f) {
  switch (f) {
  case LckFlag::exists_by_tricerri: return "EXISTS-BY-TRICERRI";
  case LckFlag::obstructed: return "OBSTRUCTED";
  case LckFlag::unknown: return "UNKNOWN";
  }
  return "unknown";
}

const char* ot_flag_name(OtFlag f) {
  switch (f) {
  case OtFlag::excluded: return "EXCLUDED";
  case OtFlag::possible: return "POSSIBLE";
  }
  return "unknown";
}

GeometricFlags derive_flags(const TypeICertificate& cert,
                            const DiagonalizabilityCertificate& diag) {
  GeometricFlags flags;
  flags.kahler = false;                // b_1 = 1 is odd
  flags.kodaira_minus_infinity = true; // no pluricanonical sections
  if (!diag.diagonalizable) {
    flags.lck = LckFlag::obstructed;
    flags.ot_homeomorphic = OtFlag::excluded;
  } else {
    flags.lck = (cert.n == 1) ? LckFlag::exists_by_tricerri : LckFlag::unknown;
    flags.ot_homeomorphic = OtFlag::possible;
  }
  return flags;
}

std::variant<InoueDescriptor, Rejection> build_descriptor(const IntMatrix& m, long bits) {
  CheckResult check = check_type_I(m);
  if (std::holds_alternative<Rejection>(check)) return std::get<Rejection>(check);

  InoueDescriptor desc;
  desc.M = m;
  desc.certificate = std::get<TypeICertificate>(std::move(check));
  desc.diagonalizability = is_diagonalizable(m);
  desc.presentation = inoue_presentation(m);
  desc.bits = bits;

  // Two independent homology routes; they must agree exactly.
  desc.homology = homology_from_matrix(m);
  HomologyReport from_presentation = abelianization(desc.presentation);
  if (!(desc.homology == from_presentation))
    fail(errc::internal_inconsistency,
         "presentation abelianization disagrees with the direct Smith form of M - I");

  desc.mapping_torus = MappingTorusData{desc.certificate.dim, m.transpose()};
  desc.flags = derive_flags(desc.certificate, desc.diagonalizability);
  desc.eigen = eigen_data(m, desc.certificate, bits);
  return desc;
}

ActionPoint::ActionPoint(DyadicComplexInterval w_in, std::vector<DyadicComplexInterval> z_in)
    : w(std::move(w_in)), z(std::move(z_in)) {
  if (!w.im.excludes_zero() || w.im.sign() < 0)
    fail(errc::precision_exhausted,
         "Im(w) enclosure cannot certify positivity; refine the point or raise bits");
}

namespace {

ActionPoint apply_g0(const InoueDescriptor& desc, const ActionPoint& p, bool inverse, long prec) {
  const EigenData& ed = desc.eigen;
  int n = ed.n;
  DyadicComplexInterval w;
  if (!inverse) {
    w.re = mul(p.w.re, ed.alpha, prec);
    w.im = mul(p.w.im, ed.alpha, prec);
  } else {
    DyadicInterval inv_alpha = recip(ed.alpha, prec);
    w.re = mul(p.w.re, inv_alpha, prec);
    w.im = mul(p.w.im, inv_alpha, prec);
  }
  // z' = R^T z (or its inverse map): (R^T z)_i = sum_j R_{ji} z_j.
  std::vector<DyadicComplexInterval> z(static_cast<std::size_t>(n));
  const auto& mat = inverse ? ed.R_inv : ed.R;
  for (int i = 0; i < n; ++i) {
    DyadicComplexInterval acc;
    for (int j = 0; j < n; ++j)
      acc = add(acc, mul(mat[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                         p.z[static_cast<std::size_t>(j)], prec),
                prec);
    z[static_cast<std::size_t>(i)] = acc;
  }
  return ActionPoint(std::move(w), std::move(z));
}

ActionPoint apply_translation(const InoueDescriptor& desc, int i, const ActionPoint& p, bool inverse,
                              long prec) {
  const EigenData& ed = desc.eigen;
  int n = ed.n;
  // u_i = (a^{(i)}, b^{(i)}): translate w by the real part, z by the rest.
  DyadicInterval shift = ed.a[static_cast<std::size_t>(i - 1)];
  if (inverse) shift = -shift;
  DyadicComplexInterval w = p.w;
  w.re = add(w.re, shift, prec);
  std::vector<DyadicComplexInterval> z(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    DyadicComplexInterval t = ed.B[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    if (inverse) t = -t;
    z[static_cast<std::size_t>(j)] = add(p.z[static_cast<std::size_t>(j)], t, prec);
  }
  return ActionPoint(std::move(w), std::move(z));
}

} // namespace

ActionPoint apply_generator(const InoueDescriptor& desc, int generator, const ActionPoint& p,
                            int exponent) {
  int dim = desc.certificate.dim;
  if (generator < 0 || generator > dim)
    fail(errc::invalid_input, "generator index out of range");
  if (exponent == std::numeric_limits<int>::min() || exponent > 1000000 || exponent < -1000000)
    fail(errc::invalid_input, "generator exponent out of the supported range");
  if (static_cast<int>(p.z.size()) != desc.eigen.n)
    fail(errc::invalid_input, "point has the wrong number of complex coordinates");
  long prec = desc.bits + 32;
  ActionPoint cur = p;
  int reps = exponent >= 0 ? exponent : -exponent;
  bool inverse = exponent < 0;
  for (int k = 0; k < reps; ++k)
    cur = (generator == 0) ? apply_g0(desc, cur, inverse, prec)
                           : apply_translation(desc, generator, cur, inverse, prec);
  return cur;
}

ActionPoint apply_word(const InoueDescriptor& desc, const std::vector<std::pair<int, int>>& word,
                       const ActionPoint& p) {
  ActionPoint cur = p;
  // Words act on the left: the last letter is applied first.
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = apply_generator(desc, it->first, cur, it->second);
  return cur;
}

namespace {

DyadicComplexInterval pad_ball(const DyadicComplexInterval& v, const Dyadic& pad) {
  DyadicComplexInterval r = v;
  r.re = DyadicInterval(r.re.c, r.re.r + pad);
  r.im = DyadicInterval(r.im.c, r.im.r + pad);
  return r;
}

bool contains_point(const DyadicComplexInterval& box, const DyadicComplexInterval& point) {
  return box.re.contains(point.re.c) && box.im.contains(point.im.c);
}

} // namespace

RelationCheck check_group_relation(const InoueDescriptor& desc, int i, const ActionPoint& p) {
  int k = desc.certificate.dim;
  if (i < 1 || i > k) fail(errc::invalid_input, "relation index must be in 1..2n+1");
  ActionPoint lhs = apply_word(desc, {{0, 1}, {i, 1}, {0, -1}}, p);
  std::vector<std::pair<int, int>> rhs_word;
  for (int j = 1; j <= k; ++j) {
    long e = desc.M(i - 1, j - 1).get_si();
    if (e != 0) rhs_word.push_back({j, static_cast<int>(e)});
  }
  ActionPoint rhs = apply_word(desc, rhs_word, p);

  Dyadic pad = Dyadic::one_shifted(-desc.bits);
  RelationCheck check;
  auto overlap_coord = [](const DyadicComplexInterval& a, const DyadicComplexInterval& b) {
    return a.intersects(b);
  };
  check.overlap = overlap_coord(lhs.w, rhs.w);
  for (std::size_t j = 0; j < lhs.z.size() && check.overlap; ++j)
    check.overlap = overlap_coord(lhs.z[j], rhs.z[j]);

  auto mid_contained = [&](const ActionPoint& outer, const ActionPoint& inner) {
    if (!contains_point(pad_ball(outer.w, pad),
                        DyadicComplexInterval::exact_point(inner.w.re.c, inner.w.im.c)))
      return false;
    for (std::size_t j = 0; j < outer.z.size(); ++j)
      if (!contains_point(pad_ball(outer.z[j], pad),
                          DyadicComplexInterval::exact_point(inner.z[j].re.c, inner.z[j].im.c)))
        return false;
    return true;
  };
  check.lhs_contains_rhs_midpoint = mid_contained(lhs, rhs);
  check.rhs_contains_lhs_midpoint = mid_contained(rhs, lhs);
  return check;
}

SemidirectData semidirect_data(const IntMatrix& m) {
  IntMatrix action = m.transpose();
  return SemidirectData{action, semidirect_type(action), m.dim()};
}

} // namespace inoue
