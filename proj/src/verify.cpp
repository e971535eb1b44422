#include "menage/verify.hpp"

#include <random>
#include <sstream>

#include "menage/menage.hpp"
#include "menage/permanent.hpp"
#include "menage/problem3.hpp"
#include "menage/rook.hpp"

namespace menage {

namespace {

VerifyFamilyResult make_family(std::string name) {
  VerifyFamilyResult fam;
  fam.family = std::move(name);
  return fam;
}

void check(VerifyFamilyResult& family, bool ok, const std::string& label) {
  ++family.checks;
  if (!ok) {
    ++family.failures;
    if (family.first_failure.empty()) family.first_failure = label;
  }
}

std::string at(int n, int r) {
  std::ostringstream out;
  out << "n=" << n << " r=" << r;
  return out.str();
}

std::string at_n(int n) { return "n=" + std::to_string(n); }

// Deterministic random (0,1) matrix with at most max_ones ones.
BinaryMatrix random_matrix(std::mt19937& rng, int rows, int cols, int max_ones) {
  std::vector<int> positions(static_cast<std::size_t>(rows) * cols);
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = static_cast<int>(i);
  std::shuffle(positions.begin(), positions.end(), rng);
  const int ones = std::uniform_int_distribution<int>(0, max_ones)(rng);
  BinaryMatrix m(rows, cols);
  for (int t = 0; t < ones; ++t) {
    const int p = positions[static_cast<std::size_t>(t)];
    m.set(p / cols + 1, p % cols + 1, 1);
  }
  return m;
}

BinaryMatrix random_dense_square(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution bit(density);
  BinaryMatrix m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.set(i, j, bit(rng) ? 1 : 0);
  return m;
}

RookPolynomial staircase_or_one(int k) {
  return staircase_rook_polynomial(std::max(k, 0));
}

VerifyFamilyResult family_sequence_three_methods(int max_n, const RyserOptions& opts) {
  VerifyFamilyResult fam = make_family("sequence_three_methods");
  for (int n = 2; n <= max_n; ++n) {
    try {
      compute_menage_record(n, opts);
      check(fam, true, {});
    } catch (const std::logic_error&) {
      check(fam, false, at_n(n));
    }
  }
  return fam;
}

VerifyFamilyResult family_fixed_seat_vs_minor_permanent(int max_n, const RyserOptions& opts) {
  VerifyFamilyResult fam = make_family("fixed_seat_vs_minor_permanent");
  for (int n = 3; n <= max_n; ++n) {
    const BinaryMatrix m = menage_matrix(n);
    for (int r = 3; r <= n; ++r) {
      check(fam, fixed_seat_count(n, r) == permanent_ryser(minor(m, 1, r), opts), at(n, r));
    }
  }
  return fam;
}

VerifyFamilyResult family_fixed_seat_symmetry(int max_n) {
  VerifyFamilyResult fam = make_family("fixed_seat_symmetry");
  for (int n = 3; n <= max_n; ++n)
    for (int r = 3; r <= n; ++r)
      check(fam, fixed_seat_count(n, r) == fixed_seat_count(n, n - r + 3), at(n, r));
  return fam;
}

VerifyFamilyResult family_first_row_expansion(int max_n) {
  VerifyFamilyResult fam = make_family("first_row_expansion");
  for (int n = 3; n <= max_n; ++n) {
    Int sum = 0;
    for (int r = 3; r <= n; ++r) sum += fixed_seat_count(n, r);
    check(fam, sum == touchard_u(n), at_n(n));
  }
  return fam;
}

VerifyFamilyResult family_rook_transform_bridge(int max_n) {
  VerifyFamilyResult fam = make_family("rook_transform_bridge");
  for (int n = 3; n <= max_n; ++n) {
    const BinaryMatrix allowed = cycle_plus_identity(n);
    for (int r = 3; r <= n; ++r) {
      const BinaryMatrix board = minor(allowed, 1, r);
      check(fam, rook_polynomial(board) == fixed_seat_rook_polynomial(n, r), at(n, r) + " polynomial");
      check(fam, permanent_via_rook(board, n - 1) == fixed_seat_count(n, r), at(n, r) + " transform");
    }
  }
  return fam;
}

VerifyFamilyResult family_staircase_factorization(int max_n) {
  VerifyFamilyResult fam = make_family("staircase_factorization");
  for (int n = 3; n <= max_n; ++n) {
    for (int r = 3; r <= n; ++r) {
      const RookPolynomial left = staircase_or_one(2 * r - 5);
      check(fam,
            rook_polynomial(submatrix_A(n, r)) ==
                poly_product(left, staircase_or_one(2 * (n - r) - 1)),
            at(n, r) + " A");
      check(fam,
            rook_polynomial(submatrix_B(n, r)) ==
                poly_product(left, staircase_or_one(2 * (n - r))),
            at(n, r) + " B");
      check(fam,
            fixed_seat_rook_polynomial(n, r) ==
                poly_product(left, staircase_or_one(2 * (n - r) + 1)),
            at(n, r) + " combined");
    }
  }
  return fam;
}

VerifyFamilyResult family_deletion_step(int max_n) {
  VerifyFamilyResult fam = make_family("deletion_step");
  for (int n = 3; n <= max_n; ++n)
    for (int r = 3; r <= n; ++r)
      check(fam,
            fixed_seat_rook_polynomial(n, r) ==
                shift_and_add(rook_polynomial(submatrix_A(n, r)), rook_polynomial(submatrix_B(n, r))),
            at(n, r));
  return fam;
}

VerifyFamilyResult family_r3_closed_form(int max_n) {
  VerifyFamilyResult fam = make_family("r3_closed_form");
  for (int n = 3; n <= max_n; ++n)
    check(fam, fixed_seat_count_r3(n) == fixed_seat_count(n, 3), at_n(n));
  return fam;
}

VerifyFamilyResult family_staircase_polynomials(int max_n) {
  VerifyFamilyResult fam = make_family("staircase_polynomial_invariance");
  if (max_n < 3) return fam;
  check(fam, rook_polynomial(BinaryMatrix()) == staircase_rook_polynomial(0), "k=0");
  for (int k = 1; k <= 12; ++k) {
    const RookPolynomial expected = staircase_rook_polynomial(k);
    const BinaryMatrix canonical = canonical_staircase(k);
    const BinaryMatrix variants[] = {canonical, canonical.transpose(), canonical.flip_rows(),
                                     canonical.flip_cols(), canonical.flip_rows().flip_cols()};
    for (const BinaryMatrix& variant : variants) {
      check(fam, rook_polynomial(variant) == expected, "k=" + std::to_string(k));
    }
    check(fam, brute_force_rook_counts(canonical) == expected, "k=" + std::to_string(k) + " brute");
  }
  for (const auto& [k, board] : staircase_gallery()) {
    check(fam, rook_polynomial(board) == staircase_rook_polynomial(k),
          "gallery k=" + std::to_string(k));
  }
  return fam;
}

VerifyFamilyResult family_rook_enumeration_oracle(int max_n) {
  VerifyFamilyResult fam = make_family("rook_enumeration_oracle");
  if (max_n < 5) return fam;
  for (const auto& [k, board] : staircase_gallery()) {
    check(fam, rook_polynomial(board) == brute_force_rook_counts(board),
          "gallery k=" + std::to_string(k));
  }
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const BinaryMatrix m = random_matrix(rng, 5, 5, 12);
    check(fam, rook_polynomial(m) == brute_force_rook_counts(m),
          "random trial " + std::to_string(trial));
  }
  return fam;
}

VerifyFamilyResult family_permanent_enumeration_oracle(int max_n, const RyserOptions& opts) {
  VerifyFamilyResult fam = make_family("permanent_enumeration_oracle");
  for (int n = 2; n <= std::min(max_n, 8); ++n) {
    const BinaryMatrix m = menage_matrix(n);
    check(fam, permanent_ryser(m, opts) == permanent_brute(m), at_n(n));
    for (int r = 3; r <= n; ++r) {
      const BinaryMatrix sub = minor(m, 1, r);
      check(fam, permanent_ryser(sub, opts) == permanent_brute(sub), at(n, r));
    }
    const BinaryMatrix wheel = cycle_plus_identity(n);
    check(fam, permanent_via_rook(wheel, n) == permanent_brute(complement_in_J(wheel)),
          at_n(n) + " rook transform");
  }
  if (max_n >= 5) {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = std::uniform_int_distribution<int>(1, 6)(rng);
      const BinaryMatrix m = random_dense_square(rng, n, 0.5);
      check(fam, permanent_ryser(m, opts) == permanent_brute(m),
            "random trial " + std::to_string(trial));
    }
  }
  return fam;
}

VerifyFamilyResult family_kernel_equivalence(int max_n, const RyserOptions& opts) {
  VerifyFamilyResult fam = make_family("permanent_kernel_equivalence");
  if (!permanent_kernel_available(PermanentKernel::Avx2)) return fam;
  const RyserOptions scalar{.kernel = PermanentKernel::Scalar, .threads = 1};
  const RyserOptions avx2{.kernel = PermanentKernel::Avx2, .threads = 1};
  const RyserOptions partitioned{.kernel = PermanentKernel::Auto,
                                 .threads = std::max(2u, opts.threads)};
  for (int n = 2; n <= std::min(max_n, 12); ++n) {
    const BinaryMatrix m = menage_matrix(n);
    const Int reference = permanent_ryser(m, scalar);
    check(fam, permanent_ryser(m, avx2) == reference, at_n(n) + " avx2");
    check(fam, permanent_ryser(m, partitioned) == reference, at_n(n) + " partitioned");
  }
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const BinaryMatrix m = random_dense_square(rng, n, 0.6);
    check(fam, permanent_ryser(m, avx2) == permanent_ryser(m, scalar),
          "random trial " + std::to_string(trial));
  }
  return fam;
}

VerifyFamilyResult family_straight_table(int max_n, const RyserOptions& opts) {
  VerifyFamilyResult fam = make_family("straight_table_vs_permanent");
  for (int n = 3; n <= std::min(max_n, 10); ++n)
    for (int r = 3; r <= n; ++r)
      check(fam,
            straight_table_count(n, r) ==
                permanent_ryser(complement_in_J(submatrix_B(n, r)), opts),
            at(n, r));
  return fam;
}

// A component is accepted as a k-staircase through the shared-polynomial
// property plus its ones-count and trimmed shape (either orientation).
bool is_staircase_component(const BinaryMatrix& component, int k) {
  if (component.ones_count() != k) return false;
  const int a = (k + 1) / 2;
  const int b = k / 2 + 1;
  const bool shape_ok = (component.rows() == a && component.cols() == b) ||
                        (component.rows() == b && component.cols() == a);
  return shape_ok && rook_polynomial(component) == staircase_rook_polynomial(k);
}

VerifyFamilyResult family_submatrix_decomposition(int max_n) {
  VerifyFamilyResult fam = make_family("submatrix_decomposition");
  for (int n = 3; n <= max_n; ++n) {
    for (int r = 3; r <= n; ++r) {
      const BinaryMatrix a = submatrix_A(n, r);
      const BinaryMatrix b = submatrix_B(n, r);
      check(fam, a.rows() == n - 2 && a.cols() == n - 2, at(n, r) + " A shape");
      check(fam, b.rows() == n - 1 && b.cols() == n - 1, at(n, r) + " B shape");
      check(fam, a.ones_count() == (r < n ? 2 * n - 6 : 2 * n - 5), at(n, r) + " A ones");
      check(fam, b.ones_count() == 2 * n - 5, at(n, r) + " B ones");

      const auto a_parts = disjunct_components(a);
      if (r < n) {
        check(fam,
              a_parts.size() == 2 && is_staircase_component(a_parts[0], 2 * r - 5) &&
                  is_staircase_component(a_parts[1], 2 * (n - r) - 1),
              at(n, r) + " A parts");
      } else {
        check(fam, a_parts.size() == 1 && is_staircase_component(a_parts[0], 2 * n - 5),
              at(n, r) + " A parts");
      }

      const auto b_parts = disjunct_components(b);
      if (r < n) {
        check(fam,
              b_parts.size() == 2 && is_staircase_component(b_parts[0], 2 * r - 5) &&
                  is_staircase_component(b_parts[1], 2 * (n - r)),
              at(n, r) + " B parts");
      } else {
        check(fam, b_parts.size() == 1 && is_staircase_component(b_parts[0], 2 * n - 5),
              at(n, r) + " B parts");
      }
    }
  }
  return fam;
}

VerifyFamilyResult family_problem3_invariants(int max_n) {
  VerifyFamilyResult fam = make_family("problem3_report_invariants");
  for (int n = 3; n <= max_n; ++n) {
    try {
      const Problem3Report report = analyze(n);
      bool mirror_ok = static_cast<int>(report.counts.size()) == n - 2;
      for (int r = 3; r <= n; ++r) {
        mirror_ok = mirror_ok && report.counts.at(r) == fixed_seat_count(n, r);
      }
      check(fam, mirror_ok, at_n(n) + " mirror");
      check(fam, report.divides || !report.is_constant, at_n(n) + " contrapositive");
    } catch (const std::logic_error&) {
      check(fam, false, at_n(n) + " internal invariant");
    }
  }
  return fam;
}

}  // namespace

std::vector<std::pair<int, BinaryMatrix>> staircase_gallery() {
  using M = BinaryMatrix;
  std::vector<std::pair<int, BinaryMatrix>> gallery;
  gallery.emplace_back(5, M::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  gallery.emplace_back(5, M::from_rows({{1, 0, 0}, {1, 1, 0}, {0, 1, 1}}));
  gallery.emplace_back(5, M::from_rows({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 1}}));
  gallery.emplace_back(5, M::from_rows({{0, 0, 1, 1, 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 0, 0}}));
  gallery.emplace_back(6, M::from_rows({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
  gallery.emplace_back(6, M::from_rows({{1, 0, 0}, {1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  gallery.emplace_back(6, M::from_rows({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  gallery.emplace_back(6, M::from_rows({{0, 0, 1, 1, 0}, {0, 1, 1, 0, 0}, {1, 1, 0, 0, 0}}));
  return gallery;
}

std::vector<VerifyFamilyResult> run_verification(int max_n, unsigned workers) {
  const RyserOptions opts{.kernel = PermanentKernel::Auto, .threads = std::max(1u, workers)};
  std::vector<VerifyFamilyResult> results;
  results.push_back(family_sequence_three_methods(max_n, opts));
  results.push_back(family_fixed_seat_vs_minor_permanent(max_n, opts));
  results.push_back(family_fixed_seat_symmetry(max_n));
  results.push_back(family_first_row_expansion(max_n));
  results.push_back(family_rook_transform_bridge(max_n));
  results.push_back(family_staircase_factorization(max_n));
  results.push_back(family_deletion_step(max_n));
  results.push_back(family_r3_closed_form(max_n));
  results.push_back(family_staircase_polynomials(max_n));
  results.push_back(family_rook_enumeration_oracle(max_n));
  results.push_back(family_permanent_enumeration_oracle(max_n, opts));
  results.push_back(family_kernel_equivalence(max_n, opts));
  results.push_back(family_straight_table(max_n, opts));
  results.push_back(family_submatrix_decomposition(max_n));
  results.push_back(family_problem3_invariants(max_n));
  return results;
}

}  // namespace menage
