#include "cablejones/representation.hpp"

#include <string>

#include "cablejones/asymptotics.hpp"
#include "cablejones/errors.hpp"

namespace cablejones {

namespace {

constexpr Real::Bits kGuard = 32;

void require_at_least_kappa(const Real& u, const char* op) {
  if (u < kappa(u.bits())) {
    throw DomainError(std::string(op) + ": u = " + u.to_string(12) + " is below kappa");
  }
}

struct Radical {
  Real T;
  Real root;
};

// T = 2 cosh(2u) and sqrt((T + 1)(T - 3)), clamped at 0 for u within rounding of kappa.
Radical radical(const Real& w) {
  Real t = cosh(w * 2L) * 2L;
  Real radicand = (t + 1L) * (t - 3L);
  if (radicand.sign() < 0) {
    radicand = Real(w.bits());
  }
  return {std::move(t), sqrt(radicand)};
}

Real trace_poly_wide(const Real& w) {
  const Real e2 = exp(w * 2L);
  const Real e4 = square(e2);
  return e4 - e2 - 2L - 1L / e2 + 1L / e4;
}

Mat2 upper(Real a, Real b, Real d) {
  Real c(a.bits());
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

Real scaled_abs(const Real& value, const Real& reference) {
  Real scale = abs(reference);
  if (scale < 1) {
    scale = Real(1, scale.bits());
  }
  return abs(value) / scale;
}

}  // namespace

Mat2 Mat2::identity(Real::Bits bits) { return {Real(1, bits), Real(bits), Real(bits), Real(1, bits)}; }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Real det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 inverse(const Mat2& m) {
  const Real dt = det(m);
  if (dt.is_zero()) {
    throw DomainError("inverse: singular matrix");
  }
  return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

Mat2 pow(const Mat2& m, long n) {
  Mat2 base = n < 0 ? inverse(m) : m;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  Mat2 acc = Mat2::identity(m.bits());
  while (e > 0) {
    if (e & 1u) {
      acc = acc * base;
    }
    e >>= 1;
    if (e > 0) {
      base = base * base;
    }
  }
  return acc;
}

Mat2 product(const std::vector<const Mat2*>& word) {
  if (word.empty()) {
    throw DomainError("product: empty word");
  }
  Mat2 acc = *word.front();
  for (std::size_t i = 1; i < word.size(); ++i) {
    acc = acc * *word[i];
  }
  return acc;
}

Real max_abs_entry(const Mat2& m) { return max(max(abs(m.a), abs(m.b)), max(abs(m.c), abs(m.d))); }

Real max_abs_diff(const Mat2& x, const Mat2& y) {
  return max(max(abs(x.a - y.a), abs(x.b - y.b)), max(abs(x.c - y.c), abs(x.d - y.d)));
}

Real delta(const Real& u) {
  require_at_least_kappa(u, "delta");
  const Real w = u.rounded(u.bits() + kGuard);
  const auto [t, root] = radical(w);
  Real out = (t - 3L + root) / 2L;
  if (out.sign() < 0) {
    out = Real(w.bits());
  }
  return out.rounded(u.bits());
}

Real fig8_trace_poly(const Real& u) {
  return trace_poly_wide(u.rounded(u.bits() + kGuard)).rounded(u.bits());
}

Real ell(const Real& u) {
  require_at_least_kappa(u, "ell");
  const Real w = u.rounded(u.bits() + kGuard);
  const Radical rad = radical(w);
  return (trace_poly_wide(w) / 2L + sinh(w * 2L) * rad.root).rounded(u.bits());
}

Real ell_hyperbolic(const Real& u) {
  require_at_least_kappa(u, "ell_hyperbolic");
  const Real w = u.rounded(u.bits() + kGuard);
  Real twice_sinh = sinh(w * 2L) * sinh(phi(w));
  twice_sinh.mul_2exp(1);
  return (cosh(w * 4L) - cosh(w * 2L) - 1L + twice_sinh).rounded(u.bits());
}

Real dlog_ell(const Real& u) {
  if (u <= kappa(u.bits())) {
    throw DomainError("dlog_ell: u = " + u.to_string(12) + " must exceed kappa");
  }
  const Real w = u.rounded(u.bits() + kGuard);
  const Radical rad = radical(w);
  if (rad.root.is_zero()) {
    throw DomainError("dlog_ell: u is within rounding of kappa");
  }
  return ((cosh(w * 2L) * 8L - 2L) / rad.root).rounded(u.bits());
}

std::vector<std::pair<std::string, const Mat2*>> RepData::named() const {
  return {{"x", &x},     {"y", &y},               {"p", &p},
          {"r", &r},     {"lambda_E", &lambda_E}, {"lambda", &lambda},
          {"x^b", &x_pow_b}};
}

RepData build_rep(const Real& u, int b) {
  if (u <= kappa(u.bits())) {
    throw DomainError("build_rep: u = " + u.to_string(12) + " must exceed kappa");
  }
  if (b < 0) {
    throw DomainError("build_rep: b must be >= 0");
  }
  const Real::Bits bits = u.bits();
  const Real w = u.rounded(bits + kGuard);
  const Radical rad = radical(w);

  RepData rep;
  rep.u = u;
  rep.b = b;
  rep.delta = delta(u);
  rep.ell = ell(u);

  const Real eu = exp(w).rounded(bits);
  const Real emu = exp(-w).rounded(bits);
  const Real eh = exp(w / 2L).rounded(bits);
  const Real emh = exp(-w / 2L).rounded(bits);
  rep.x = upper(eu, Real(1, bits), emu);
  rep.y = {eu, Real(bits), -rep.delta, emu};
  rep.p = upper(eh, (1L / (cosh(w / 2L) * 2L)).rounded(bits), emh);

  const Real bu = w * static_cast<long>(b);
  const Real ebu = exp(bu);
  const Real embu = exp(-bu);
  const Real x_pow_b_corner = sinh(bu) / sinh(w);
  rep.x_pow_b = upper(ebu.rounded(bits), x_pow_b_corner.rounded(bits), embu.rounded(bits));

  const Real l = ell(w);
  const Real corner = cosh(w) * 2L * rad.root;
  rep.lambda_E = upper(l.rounded(bits), corner.rounded(bits), (1L / l).rounded(bits));
  rep.r = upper((l * ebu).rounded(bits), (ebu * corner + x_pow_b_corner / l).rounded(bits),
                (embu / l).rounded(bits));
  rep.lambda = rep.lambda_E * rep.lambda_E;
  return rep;
}

std::vector<RelationResidual> verify_relations(const RepData& rep) {
  using Word = std::vector<const Mat2*>;
  const Mat2* x = &rep.x;
  const Mat2* y = &rep.y;
  const Mat2* p = &rep.p;
  const Mat2* r = &rep.r;
  const Mat2 x_inv = inverse(rep.x);
  const Mat2 y_inv = inverse(rep.y);
  const Mat2 r_inv = inverse(rep.r);
  const Mat2* xi = &x_inv;
  const Mat2* yi = &y_inv;
  const Mat2* ri = &r_inv;
  const Mat2 one = Mat2::identity(rep.x.bits());

  auto concat = [](Word w, const Mat2* m, int times) {
    w.insert(w.end(), static_cast<std::size_t>(times), m);
    return w;
  };
  // Value of a word and the product of its factor norms, which bounds its rounding error.
  auto evaluate = [&](const Word& w) {
    Mat2 value = one;
    Real norms(1, rep.x.bits());
    for (const Mat2* m : w) {
      value = value * *m;
      norms *= max_abs_entry(*m);
    }
    return std::pair{std::move(value), std::move(norms)};
  };

  std::vector<RelationResidual> out;
  auto add = [&](std::string name, const Word& lhs, const Word& rhs) {
    const auto [lv, ln] = evaluate(lhs);
    const auto [rv, rn] = evaluate(rhs);
    Real scale = max(ln, rn);
    if (scale < 1) {
      scale = Real(1, scale.bits());
    }
    out.push_back({std::move(name), max_abs_diff(lv, rv) / scale});
  };

  const Word longitude{x, yi, x, y, xi, xi, y, x, yi, xi};
  add("knot_group", {x, yi, xi, y, x}, {y, x, yi, xi, y});
  add("cable_space", {p, r, p, r}, {r, p, r, p});
  add("p_r_commute", {p, r}, {r, p});
  add("meridian_word", {p, r, p, ri}, {x});
  add("p_squared", {p, p}, {x});
  add("longitude_word", longitude, {&rep.lambda_E});
  add("x_pow_b", concat({}, x, rep.b), {&rep.x_pow_b});
  add("r_product", concat({&rep.lambda_E}, x, rep.b), {r});
  add("longitude_from_r", concat({r}, xi, rep.b), {&rep.lambda_E});
  Word twice = longitude;
  twice.insert(twice.end(), longitude.begin(), longitude.end());
  add("cable_longitude", {&rep.lambda}, twice);

  const Mat2 longitude_word = evaluate(longitude).first;
  const Real l2 = square(rep.ell);
  out.push_back({"cable_longitude_diagonal",
                 max(max(scaled_abs(rep.lambda.a - l2, l2), abs(rep.lambda.c)),
                     abs(rep.lambda.d - 1L / l2))});
  out.push_back({"longitude_diagonal",
                 max(max(scaled_abs(longitude_word.a - rep.ell, rep.ell), abs(longitude_word.c)),
                     abs(longitude_word.d - 1L / rep.ell))});

  for (const auto& [name, m] : rep.named()) {
    out.push_back({"det_" + name, abs(det(*m) - 1L)});
  }
  return out;
}

Real a_poly_fig8_residual(const Real& u) {
  const Real l = ell(u);
  const Real poly = fig8_trace_poly(u);
  return scaled_abs(l - poly + 1L / l, poly);
}

Real a_poly_cable_check(const Real& u) {
  const Real l2 = square(ell(u));
  const Real poly = fig8_trace_poly(u);
  const Real rhs = square(poly) - 2L;
  return scaled_abs(l2 + 1L / l2 - rhs, rhs);
}

Real a_poly_cable_factor(const Real& u) {
  const Real bits_u = u.rounded(u.bits());
  const Real m = exp(bits_u / 2L);
  const Real m4 = pow(m, 4L);
  const Real m8 = square(m4);
  const Real inner = m8 - m4 - 2L - 1L / m4 + 1L / m8;
  const Real L = square(ell(u));
  const Real rhs = square(inner) - 2L;
  return scaled_abs(L - rhs + 1L / L, rhs);
}

}  // namespace cablejones
