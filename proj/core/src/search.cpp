#include "inoue/search.hpp"

#include <cstdlib>
#include <optional>
#include <thread>

namespace inoue {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long SplitMix64::next_in(long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(next() % span);
}

const char* search_mode_name(SearchMode m) {
  switch (m) {
  case SearchMode::companion: return "companion";
  case SearchMode::conjugated_companion: return "conjugated-companion";
  case SearchMode::block_nondiag: return "block-nondiag";
  }
  return "unknown";
}

namespace {

IntPoly random_unit_poly(SplitMix64& rng, int degree, long bound) {
  std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
  c[0] = -1; // forces det = 1 for the odd-degree companion
  for (int i = 1; i < degree; ++i) c[static_cast<std::size_t>(i)] = rng.next_in(-bound, bound);
  c[static_cast<std::size_t>(degree)] = 1;
  return IntPoly(std::move(c));
}

// Conjugate by a handful of elementary unimodular row/column operations:
// M <- (I + c E_ij) M (I - c E_ij).
void random_conjugate(SplitMix64& rng, IntMatrix& m, int ops) {
  int n = m.dim();
  for (int t = 0; t < ops; ++t) {
    int i = static_cast<int>(rng.next_in(0, n - 1));
    int j = static_cast<int>(rng.next_in(0, n - 1));
    if (i == j) { --t; continue; }
    long c = rng.next_in(-2, 2);
    if (c == 0) c = 1;
    for (int k = 0; k < n; ++k) m(i, k) += Int(c) * m(j, k);
    for (int k = 0; k < n; ++k) m(k, j) -= Int(c) * m(k, i);
  }
}

// Quadratics with no real roots and |g(0)| = 1: x^2 + bx + 1 with b^2 < 4.
IntPoly random_definite_quadratic(SplitMix64& rng) {
  long b = rng.next_in(-1, 1);
  return IntPoly({Int(1), Int(b), Int(1)});
}

std::optional<SearchHit> run_trial(const SearchConfig& cfg, long trial) {
  SplitMix64 rng = SplitMix64::for_trial(cfg.seed, static_cast<std::uint64_t>(trial));
  IntMatrix m;
  switch (cfg.mode) {
  case SearchMode::companion:
    m = IntMatrix::companion(random_unit_poly(rng, cfg.dim, cfg.entry_bound));
    break;
  case SearchMode::conjugated_companion:
    m = IntMatrix::companion(random_unit_poly(rng, cfg.dim, cfg.entry_bound));
    random_conjugate(rng, m, 5);
    break;
  case SearchMode::block_nondiag: {
    IntPoly f = random_unit_poly(rng, cfg.dim - 4, cfg.entry_bound);
    IntPoly g = random_definite_quadratic(rng);
    auto built = make_nondiagonalizable(f, g);
    if (std::holds_alternative<BlockRejection>(built)) return std::nullopt;
    m = std::get<IntMatrix>(built);
    random_conjugate(rng, m, 5);
    break;
  }
  }
  CheckResult check = check_type_I(m);
  if (std::holds_alternative<Rejection>(check)) return std::nullopt;
  return SearchHit{std::move(m), std::get<TypeICertificate>(std::move(check))};
}

int search_thread_count() {
  if (const char* env = std::getenv("INOUE_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(std::min(hc, 8u)) : 1;
}

} // namespace

SearchOutcome search_type_I(const SearchConfig& cfg) {
  if (cfg.dim < 3 || cfg.dim % 2 == 0)
    fail(errc::invalid_input, "search dimension must be odd and >= 3");
  if (cfg.entry_bound < 1) fail(errc::invalid_input, "entry bound must be >= 1");
  if (cfg.mode == SearchMode::block_nondiag && cfg.dim < 7)
    fail(errc::invalid_input, "block-nondiag needs dim >= 7 (odd f-degree >= 3 plus a doubled quadratic)");

  SearchOutcome out;
  long max_attempts = cfg.max_attempts > 0 ? cfg.max_attempts : 4000L * std::max(cfg.count, 1);
  int threads = search_thread_count();

  // Trials are seeded independently per index, so blocks can be evaluated
  // in parallel and collected in index order: the outcome is identical to
  // the serial run for any thread count.
  long block = std::max<long>(threads * 4, 8);
  for (long base = 0; base < max_attempts && static_cast<int>(out.hits.size()) < cfg.count;
       base += block) {
    long end = std::min(max_attempts, base + block);
    std::vector<std::optional<SearchHit>> results(static_cast<std::size_t>(end - base));
    if (threads <= 1 || end - base < 4) {
      for (long t = base; t < end; ++t)
        results[static_cast<std::size_t>(t - base)] = run_trial(cfg, t);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w]() {
          for (long t = base + w; t < end; t += threads)
            results[static_cast<std::size_t>(t - base)] = run_trial(cfg, t);
        });
      for (auto& th : pool) th.join();
    }
    for (long t = base; t < end && static_cast<int>(out.hits.size()) < cfg.count; ++t) {
      ++out.attempts;
      auto& r = results[static_cast<std::size_t>(t - base)];
      if (r) out.hits.push_back(std::move(*r));
    }
  }
  return out;
}

std::variant<IntMatrix, BlockRejection> make_nondiagonalizable(const IntPoly& f, const IntPoly& g) {
  if (!f.is_monic() || f.degree() < 3 || f.degree() % 2 == 0)
    return BlockRejection{"f must be monic of odd degree >= 3"};
  if (f.coeff(0) != -1) return BlockRejection{"f(0) must be -1"};
  if (!g.is_monic() || g.degree() < 1) return BlockRejection{"g must be monic of degree >= 1"};
  if (abs(g.coeff(0)) != 1) return BlockRejection{"|g(0)| must be 1 (determinant condition)"};

  std::vector<RealIsolatingInterval> f_reals = isolate_real_roots(f);
  if (f_reals.size() != 1) return BlockRejection{"f must have exactly one real root"};
  if (f_reals.front().multiplicity != 1) return BlockRejection{"the real root of f must be simple"};
  if (!isolate_real_roots(g).empty()) return BlockRejection{"extra real roots: g must have none"};
  if (f.eval(Int(1)) == 0 || g.eval(Int(1)) == 0)
    return BlockRejection{"f(1) g(1) must be nonzero (eigenvalue 1 forbidden)"};
  if (f.eval(Int(-1)) == 0) return BlockRejection{"-1 must not be a root of f"};

  IntMatrix m = IntMatrix::block_diag({IntMatrix::companion(f), IntMatrix::companion(g * g)});

  // The construction guarantees both properties; re-verify anyway.
  CheckResult check = check_type_I(m);
  if (std::holds_alternative<Rejection>(check))
    return BlockRejection{std::string("construction rejected by the type-I check: ") +
                          rejection_reason_name(std::get<Rejection>(check).reason)};
  if (is_diagonalizable(m).diagonalizable)
    fail(errc::internal_inconsistency, "block construction unexpectedly diagonalizable");
  return m;
}

} // namespace inoue
