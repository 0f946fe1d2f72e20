#include "qrank/conic.hpp"

#include "qrank/error.hpp"
#include "qrank/forms_oracle.hpp"

namespace qrank {

namespace {

void check_cancel(const SolverConfig& config) {
  if (config.cancel != nullptr && config.cancel->load(std::memory_order_relaxed))
    throw Error(Errc::Cancelled, "conic search cancelled");
}

bool divisible_by_8(const Discriminant& d) { return mpz_divisible_ui_p(d.value().get_mpz_t(), 8) != 0; }

}  // namespace

bool is_valid_solution(const ConicSolution& s, const Integer& d1, const Integer& d2) {
  if (sgn(s.z) <= 0) return false;
  if (s.x * s.x - d1 * s.y * s.y != d2 * s.z * s.z) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), s.x.get_mpz_t(), s.y.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.z.get_mpz_t());
  return g == 1;
}

ConicSolution solve_conic(const Discriminant& d1, const Discriminant& d2, const SolverConfig& config) {
  if (!is_c4_pair(d1, d2))
    throw Error(Errc::NoC4Factorization, "(" + d1.to_string() + ", " + d2.to_string() + ") is not a C4+ pair");
  if (config.bound_scale < 1) throw Error(Errc::InvalidArgument, "bound_scale must be positive");
  const Integer& a = d1.value();
  const Integer& b = d2.value();
  const Integer four_a = 4 * a, four_b = 4 * b;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), four_a.get_mpz_t());
  const Integer z_max = config.bound_scale * (root + 1);
  mpz_sqrt(root.get_mpz_t(), four_b.get_mpz_t());
  const Integer y_max = config.bound_scale * (root + 1);

  Integer n, x, g;
  for (Integer z = 1; z <= z_max; z += config.odd_alpha ? 2 : 1) {
    check_cancel(config);
    const Integer bz2 = b * z * z;
    for (Integer y = 0; y <= y_max; ++y) {
      n = a * y * y + bz2;
      if (mpz_perfect_square_p(n.get_mpz_t()) == 0) continue;
      mpz_sqrt(x.get_mpz_t(), n.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
      if (g != 1) continue;
      ConicSolution s{x, y, z};
      if (!is_valid_solution(s, a, b)) throw Error(Errc::TheoremViolation, "solver produced an invalid solution");
      return s;
    }
  }
  throw Error(Errc::SearchExhausted, "no solution of x^2 - " + d1.to_string() + " y^2 = " + d2.to_string() +
                                         " z^2 with z <= " + z_max.get_str());
}

int embedding_sign(const Integer& x, const Integer& y, const Integer& d1, int branch) {
  const int sx = sgn(x);
  const int sy = sgn(y) * branch;
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  return cmp(x * x, d1 * y * y) > 0 ? sx : sy;
}

bool is_two_primary(const Integer& x, const Integer& y, const Discriminant& d1) {
  const Integer& d = d1.value();
  if (mpz_even_p(Integer(x * x - d * y * y).get_mpz_t()))
    throw Error(Errc::EvenAlpha, "alpha = " + x.get_str() + " + " + y.get_str() + " sqrt(" + d.get_str() + ") is not odd");
  auto mod4 = [](const Integer& v) { return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), 4)); };
  if (mpz_fdiv_ui(d.get_mpz_t(), 4) == 1) {
    // alpha = (x - y) + 2y w with w = (1 + sqrt d)/2, w^2 = w + m
    const long m = mod4(Integer((d - 1) / 4));
    const long A = mod4(Integer(x - y)), B = mod4(Integer(2 * y));
    for (long a = 0; a < 2; ++a)
      for (long b = 0; b < 2; ++b)
        if ((a * a + b * b * m) % 4 == A && (2 * a * b + b * b) % 4 == B) return true;
    return false;
  }
  // d = 4m, alpha = x + 2y sqrt(m)
  const long m = mod4(Integer(d / 4));
  const long A = mod4(x), B = mod4(Integer(2 * y));
  for (long a = 0; a < 2; ++a)
    for (long b = 0; b < 2; ++b)
      if ((a * a + b * b * m) % 4 == A && (2 * a * b) % 4 == B) return true;
  return false;
}

NormOneUnit norm_one_unit(const Discriminant& d1) {
  const FundamentalUnit eps = fundamental_unit(d1);
  const Integer& d = d1.value();
  // eps^k = (U + V sqrt d) / 2
  Integer U = eps.u, V = eps.v;
  for (int k = 1; k <= 12; ++k) {
    const bool norm_one = eps.norm == 1 || k % 2 == 0;
    if (norm_one && mpz_even_p(U.get_mpz_t()) && mpz_even_p(V.get_mpz_t())) return {U / 2, V / 2, k};
    Integer nU = (U * eps.u + d * V * eps.v) / 2;
    Integer nV = (U * eps.v + V * eps.u) / 2;
    U = std::move(nU);
    V = std::move(nV);
  }
  throw std::logic_error("no norm-one unit among the first powers of the fundamental unit");
}

std::vector<ConicSolution> unit_orbit(const ConicSolution& s, const Discriminant& d1, int bound) {
  const NormOneUnit eta = norm_one_unit(d1);
  const Integer& d = d1.value();
  std::vector<ConicSolution> up{s}, down{s};
  for (int k = 1; k <= bound; ++k) {
    const auto& u = up.back();
    up.push_back({u.x * eta.a + d * u.y * eta.b, u.x * eta.b + u.y * eta.a, s.z});
    const auto& w = down.back();
    down.push_back({w.x * eta.a - d * w.y * eta.b, w.y * eta.a - w.x * eta.b, s.z});
  }
  std::vector<ConicSolution> out{s};
  for (int k = 1; k <= bound; ++k) {
    out.push_back(up[k]);
    out.push_back(down[k]);
  }
  return out;
}

QuarticGenerator normalize_two_primary(const ConicSolution& s, const Discriminant& d1, const Discriminant& d2,
                                       const SolverConfig& config) {
  if (!is_valid_solution(s, d1.value(), d2.value()))
    throw Error(Errc::InvalidArgument, "not a primitive solution of the conic");
  const auto orbit = unit_orbit(s, d1, config.unit_orbit_bound);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    check_cancel(config);
    ConicSolution beta = orbit[i];
    if (sgn(beta.y) < 0) {
      beta.x = -beta.x;
      beta.y = -beta.y;
    }
    for (int flip = 0; flip < 2; ++flip) {
      ConicSolution cand = beta;
      if (flip) cand.x = -cand.x;
      if (!is_two_primary(cand.x, cand.y, d1)) continue;
      QuarticGenerator g;
      g.d1 = d1;
      g.d2 = d2;
      g.solution = cand;
      g.two_primary = true;
      g.sign_plus = embedding_sign(cand.x, cand.y, d1.value(), +1);
      g.sign_minus = embedding_sign(cand.x, cand.y, d1.value(), -1);
      g.unit_power = (i == 0) ? 0 : static_cast<int>((i % 2 == 1) ? (i + 1) / 2 : -static_cast<int>(i / 2));
      if (g.sign_plus != g.sign_minus) throw Error(Errc::TheoremViolation, "alpha has non-positive norm");
      return g;
    }
  }
  throw Error(Errc::NormalizationFailed, "no 2-primary associate of " + s.x.get_str() + " + " + s.y.get_str() +
                                             " sqrt(" + d1.to_string() + ") within the unit-orbit bound");
}

std::pair<Discriminant, Discriminant> generator_orientation(const C4Factorization& f) {
  if (divisible_by_8(f.d2)) return {f.d2, f.d1};
  return {f.d1, f.d2};
}

QuarticGenerator construct_generator(const Discriminant& d1, const Discriminant& d2, const SolverConfig& config) {
  if (divisible_by_8(d2))
    throw Error(Errc::InvalidArgument, "the factor divisible by 8 must be passed as d1");
  SolverConfig odd = config;
  odd.odd_alpha = true;
  // odd z may lie outside the default box
  for (int widen = 0;; ++widen) {
    try {
      return normalize_two_primary(solve_conic(d1, d2, odd), d1, d2, config);
    } catch (const Error& e) {
      if (e.code() != Errc::SearchExhausted || widen == 4) throw;
      odd.bound_scale *= 2;
    }
  }
}

}  // namespace qrank
