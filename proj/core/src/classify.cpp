#include "inoue/classify.hpp"

#include <algorithm>

#include "inoue/lll.hpp"

namespace inoue {

const char* semidirect_type_name(SemidirectType t) {
  switch (t) {
  case SemidirectType::diagonal: return "Diagonal";
  case SemidirectType::non_diagonal: return "NonDiagonal";
  case SemidirectType::has_eigenvalue_one: return "HasEigenvalueOne";
  }
  return "unknown";
}

ConjugacyFingerprint fingerprint(const IntMatrix& a, const std::vector<Int>& shifts) {
  int n = a.dim();
  ConjugacyFingerprint fp;
  fp.char_polynomial = char_poly(a);
  fp.shifts = shifts;
  for (const Int& c : shifts) {
    IntMatrix shifted = a - IntMatrix::identity(n) * c;
    fp.snf_shifted.push_back(smith_normal_form(shifted).diagonal());
  }
  IntMatrix pw = a;
  for (int kk = 1; kk <= n; ++kk) {
    fp.power_traces.push_back(pw.trace());
    if (kk < n) pw = pw * a;
  }
  IntMatrix am1 = a - IntMatrix::identity(n);
  fp.snf_powers.push_back(smith_normal_form(am1 * am1).diagonal());
  fp.snf_powers.push_back(smith_normal_form(am1 * am1 * am1).diagonal());
  return fp;
}

SemidirectType semidirect_type(const IntMatrix& a) {
  IntPoly chi = char_poly(a);
  if (chi.eval(Int(1)) == 0) return SemidirectType::has_eigenvalue_one;
  return is_diagonalizable(a).diagonalizable ? SemidirectType::diagonal
                                             : SemidirectType::non_diagonal;
}

namespace {

std::string diag_to_string(const std::vector<Int>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += d[i].get_str();
  }
  return s + "]";
}

// First separating invariant between A and target, or nullopt if all agree.
// Order: characteristic polynomial, diagonal type, shifted Smith forms,
// power traces, Smith forms of powers of A - I.
struct Separation {
  std::string invariant, values;
};

std::optional<Separation> separate(const IntMatrix& a, const IntMatrix& b,
                                   const std::vector<Int>& shifts) {
  IntPoly ca = char_poly(a), cb = char_poly(b);
  if (!(ca == cb))
    return Separation{"char_poly", ca.to_string() + " vs " + cb.to_string()};
  bool da = is_diagonalizable(a).diagonalizable;
  bool db = is_diagonalizable(b).diagonalizable;
  if (da != db)
    return Separation{"diagonal-type", std::string(da ? "diagonalizable" : "non-diagonalizable") +
                                           " vs " + (db ? "diagonalizable" : "non-diagonalizable")};
  ConjugacyFingerprint fa = fingerprint(a, shifts), fb = fingerprint(b, shifts);
  for (std::size_t i = 0; i < fa.shifts.size(); ++i)
    if (fa.snf_shifted[i] != fb.snf_shifted[i])
      return Separation{"snf(A-" + fa.shifts[i].get_str() + "I)",
                        diag_to_string(fa.snf_shifted[i]) + " vs " + diag_to_string(fb.snf_shifted[i])};
  if (fa.power_traces != fb.power_traces) return Separation{"power_traces", "trace sequences differ"};
  for (std::size_t i = 0; i < fa.snf_powers.size(); ++i)
    if (fa.snf_powers[i] != fb.snf_powers[i])
      return Separation{"snf((A-I)^" + std::to_string(i + 2) + ")",
                        diag_to_string(fa.snf_powers[i]) + " vs " + diag_to_string(fb.snf_powers[i])};
  return std::nullopt;
}

// Verified exact conjugation check: C A C^{-1} == target and det C == 1.
bool verify_witness(const IntMatrix& c, const IntMatrix& a, const IntMatrix& target) {
  if (det(c) != 1) return false;
  IntMatrix cinv = inverse_unimodular(c);
  return c * a * cinv == target;
}

struct SearchState {
  std::vector<std::vector<Int>> kernel; // LLL-reduced kernel lattice basis
  int dim = 0;
};

SearchState prepare_search(const IntMatrix& a, const IntMatrix& target) {
  int n = a.dim();
  // vec(CA - targetC) = (A^T (x) I - I (x) target) vec(C), column-major vec.
  IntMatrix at = a.transpose();
  IntMatrix sys(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          // Kronecker blocks: (A^T (x) I)[(i,k),(j,l)] = A^T(i,j) * I(k,l)
          Int v = (k == l ? at(i, j) : Int(0)) - (i == j ? target(k, l) : Int(0));
          sys(i * n + k, j * n + l) = v;
        }
  SearchState st;
  st.dim = n;
  st.kernel = kernel_lattice_basis(sys);
  if (!st.kernel.empty()) lll_reduce(st.kernel);
  return st;
}

IntMatrix unvec(const std::vector<Int>& v, int n) {
  IntMatrix c(n, n);
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) c(row, col) = v[static_cast<std::size_t>(col) * n + row];
  return c;
}

// Enumerate integer combinations of the kernel basis in max-norm shells.
// Returns true when a verified witness is found.
class ShellEnumerator {
public:
  explicit ShellEnumerator(const SearchState& st) : st_(st), r_(st.kernel.size()) {}

  bool exhausted() const { return r_ == 0 || shell_ > 100000; }

  // Runs through candidates of the current shell; advances the shell when
  // done. Returns the number of candidates consumed.
  template <typename Fn>
  long run_shell(Fn&& callback) {
    if (exhausted()) return 0;
    long used = 0;
    std::vector<long> y(r_, -static_cast<long>(shell_));
    for (;;) {
      bool on_shell = false;
      for (long v : y)
        if (v == static_cast<long>(shell_) || v == -static_cast<long>(shell_)) { on_shell = true; break; }
      if (on_shell) {
        // Only the canonical half: first nonzero coordinate positive.
        int first_sign = 0;
        for (long v : y)
          if (v != 0) { first_sign = v > 0 ? 1 : -1; break; }
        if (first_sign > 0) {
          ++used;
          std::vector<Int> vec(st_.kernel.front().size(), Int(0));
          for (std::size_t i = 0; i < r_; ++i) {
            if (y[i] == 0) continue;
            for (std::size_t t = 0; t < vec.size(); ++t) vec[t] += Int(y[i]) * st_.kernel[i][t];
          }
          if (callback(unvec(vec, st_.dim))) return used;
        }
      }
      // Odometer step.
      std::size_t pos = 0;
      while (pos < r_ && y[pos] == static_cast<long>(shell_)) {
        y[pos] = -static_cast<long>(shell_);
        ++pos;
      }
      if (pos == r_) break;
      ++y[pos];
    }
    ++shell_;
    return used;
  }

private:
  const SearchState& st_;
  std::size_t r_;
  unsigned shell_ = 1;
};

} // namespace

ConjugacyVerdict decide_conjugacy(const IntMatrix& a, const IntMatrix& b, long budget,
                                  const std::vector<Int>& shifts) {
  if (!a.is_square() || !b.is_square() || a.dim() != b.dim())
    fail(errc::invalid_input, "conjugacy needs square matrices of equal dimension");
  if (det(a) != 1 || det(b) != 1)
    fail(errc::hypothesis_violated, "conjugacy engine requires det A = det B = 1");
  if (char_poly(a).eval(Int(1)) == 0 || char_poly(b).eval(Int(1)) == 0)
    fail(errc::hypothesis_violated, "1 must not be an eigenvalue of either matrix");

  ConjugacyVerdict verdict;
  IntMatrix binv = inverse_unimodular(b);

  std::optional<Separation> sep_b = separate(a, b, shifts);
  std::optional<Separation> sep_binv = separate(a, binv, shifts);
  if (sep_b && sep_binv) {
    verdict.outcome = ConjugacyOutcome::distinct;
    verdict.separating_invariant = sep_b->invariant;
    verdict.separating_values = sep_b->values;
    return verdict;
  }

  struct Target {
    const IntMatrix* matrix;
    ConjugacyOutcome outcome;
  };
  std::vector<Target> targets;
  if (!sep_b) targets.push_back({&b, ConjugacyOutcome::conjugate_to});
  if (!sep_binv) targets.push_back({&binv, ConjugacyOutcome::conjugate_to_inverse});

  std::vector<SearchState> states;
  std::vector<ShellEnumerator> enums;
  states.reserve(targets.size());
  for (const auto& t : targets) states.push_back(prepare_search(a, *t.matrix));
  for (const auto& st : states) enums.emplace_back(st);

  long used_total = 0;
  bool any_active = true;
  int n = a.dim();
  while (any_active && used_total < budget) {
    any_active = false;
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
      if (enums[ti].exhausted()) continue;
      any_active = true;
      std::optional<IntMatrix> found;
      long used = enums[ti].run_shell([&](IntMatrix c) {
        Int d = det(c);
        if (d != 1 && d != -1) return false;
        if (d == -1) {
          if (n % 2 == 0) return false; // negation cannot fix the sign in even dimension
          c = -c;
          ++verdict.det_negative_conversions;
          if (det(c) != 1)
            fail(errc::internal_inconsistency, "odd-dimension negation failed to fix the sign");
        }
        if (!verify_witness(c, a, *targets[ti].matrix)) return false;
        found = std::move(c);
        return true;
      });
      used_total += used;
      if (found) {
        verdict.outcome = targets[ti].outcome;
        verdict.witness = std::move(found);
        verdict.budget_used = used_total;
        return verdict;
      }
      if (used_total >= budget) break;
    }
  }
  verdict.outcome = ConjugacyOutcome::unknown;
  verdict.budget_used = used_total;
  return verdict;
}

HomeoVerdict homeo_verdict(const IntMatrix& a, const IntMatrix& b, long budget,
                           const std::vector<Int>& shifts) {
  if (a.dim() % 2 == 0)
    fail(errc::hypothesis_violated, "mapping-torus homeomorphism criterion needs odd dimension");
  HomeoVerdict hv;
  hv.conjugacy = decide_conjugacy(a, b, budget, shifts);
  switch (hv.conjugacy.outcome) {
  case ConjugacyOutcome::conjugate_to:
    hv.outcome = HomeoOutcome::homeomorphic;
    hv.map_kind = HomeoMapKind::direct;
    hv.witness = hv.conjugacy.witness;
    break;
  case ConjugacyOutcome::conjugate_to_inverse:
    hv.outcome = HomeoOutcome::homeomorphic;
    hv.map_kind = HomeoMapKind::inverse_composition;
    hv.witness = hv.conjugacy.witness;
    break;
  case ConjugacyOutcome::distinct:
    hv.outcome = HomeoOutcome::not_homeomorphic;
    hv.obstruction = "pi_1 obstruction: " + hv.conjugacy.separating_invariant +
                     " separates A from both B and B^-1";
    break;
  case ConjugacyOutcome::unknown:
    hv.outcome = HomeoOutcome::unknown;
    break;
  }
  return hv;
}

OtExclusion ot_exclusion(const IntMatrix& m) {
  CheckResult check = check_type_I(m);
  if (std::holds_alternative<Rejection>(check))
    fail(errc::invalid_input, "ot_exclusion requires a matrix accepted by the type-I check");
  OtExclusion report;
  report.monodromy_type = semidirect_type(m.transpose());
  if (report.monodromy_type == SemidirectType::has_eigenvalue_one)
    fail(errc::internal_inconsistency, "accepted matrix with eigenvalue 1");
  if (report.monodromy_type == SemidirectType::non_diagonal) {
    report.excluded = true;
    report.reasons = {
        "the fundamental group is a semidirect product Z x| Z^(2n+1) whose action matrix is "
        "non-diagonalizable over C with no eigenvalue 1 (non-diagonal type)",
        "number-field quotient manifolds with first Betti number 1 have fundamental groups that "
        "are semidirect products of diagonal type (the unit acts with simple minimal polynomial)",
        "a semidirect product of diagonal type is never isomorphic to one of non-diagonal type",
    };
  } else {
    report.excluded = false;
    report.reasons = {"the monodromy is diagonalizable, so no obstruction of this kind applies"};
  }
  return report;
}

} // namespace inoue
